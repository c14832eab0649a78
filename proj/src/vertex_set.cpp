#include "fanar/vertex_set.hpp"

#include "fanar/error.hpp"

namespace fanar {

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) throw CapacityError("vertex index out of range");
    insert(v);
  }
}

VertexSet VertexSet::from(const std::vector<int>& members) {
  VertexSet s;
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) throw CapacityError("vertex index out of range");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::range(int first, int last) {
  if (first < 0 || last > kMaxVertices) throw CapacityError("vertex range out of bounds");
  VertexSet s;
  for (int v = first; v < last; ++v) s.insert(v);
  return s;
}

int VertexSet::scan_from(int v) const {
  for (int w = v >> 6; w < kWords; ++w) {
    std::uint64_t bits = words_[w];
    if (w == v >> 6) bits &= ~std::uint64_t{0} << (v & 63);
    if (bits != 0) return w * 64 + std::countr_zero(bits);
  }
  return -1;
}

int VertexSet::last() const {
  for (int w = kWords - 1; w >= 0; --w)
    if (words_[w] != 0) return w * 64 + 63 - std::countl_zero(words_[w]);
  return -1;
}

VertexSet VertexSet::after(int v) const {
  VertexSet out = *this;
  for (int w = 0; w < kWords; ++w) {
    int lo = w * 64;
    if (v + 1 <= lo) break;
    if (v + 1 >= lo + 64) {
      out.words_[w] = 0;
    } else {
      out.words_[w] &= ~std::uint64_t{0} << ((v + 1) & 63);
    }
  }
  return out;
}

bool VertexSet::within(int n) const { return last() < n; }

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

bool VertexSet::lex_less(const VertexSet& o) const {
  auto a = begin();
  auto b = o.begin();
  for (; a != end() && b != o.end(); ++a, ++b)
    if (*a != *b) return *a < *b;
  return a == end() && b != o.end();
}

}  // namespace fanar
