#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace fanar {

// Hard cap on vertex count for every dense structure in the library.
inline constexpr int kMaxVertices = 128;

// Fixed-width bitset over vertex indices 0..kMaxVertices-1. Iteration is in
// ascending index order.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    const_iterator(const VertexSet* set, int v) : set_(set), v_(v) {}

    int operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> members);

  static VertexSet from(const std::vector<int>& members);
  // Members first..last-1.
  static VertexSet range(int first, int last);

  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Least member, or -1.
  int first() const { return scan_from(0); }
  // Least member strictly greater than v, or -1.
  int next(int v) const { return v + 1 >= kMaxVertices ? -1 : scan_from(v + 1); }
  // Largest member, or -1.
  int last() const;
  // Members strictly greater than v.
  VertexSet after(int v) const;

  // True iff every member is below n.
  bool within(int n) const;

  std::vector<int> members() const;

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet&) const = default;
  // Lexicographic order on the ascending member lists.
  bool lex_less(const VertexSet& o) const;

 private:
  int scan_from(int v) const;

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace fanar
