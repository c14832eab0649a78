#include "fanar/detection.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fanar/error.hpp"

namespace fanar {

// ---- EdgeColoring ---------------------------------------------------------

EdgeColoring::EdgeColoring(int n, int num_colors) : n_(n), num_colors_(num_colors) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) throw CapacityError("coloring exceeds capacity");
  if (num_colors < 0) throw std::invalid_argument("negative color count");
  std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  if (pairs > 0 && num_colors < 1) throw std::invalid_argument("a coloring of a nonempty K_n needs a color");
  colors_.assign(pairs, 0);
}

EdgeColoring EdgeColoring::monochromatic(int n) { return EdgeColoring(n, 1); }

EdgeColoring EdgeColoring::all_distinct(int n) {
  EdgeColoring col(n, std::max(1, n * (n - 1) / 2));
  for (int i = 0; i < col.pair_count(); ++i) col.colors_[i] = i;
  return col;
}

EdgeColoring EdgeColoring::from_pair_colors(int n, int num_colors, std::vector<int> colors) {
  EdgeColoring col(n, num_colors);
  if (colors.size() != col.colors_.size()) throw std::invalid_argument("wrong number of pair colors");
  for (int c : colors)
    if (c < 0 || c >= num_colors) throw std::invalid_argument("color id out of range");
  col.colors_ = std::move(colors);
  return col;
}

int EdgeColoring::pair_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  return u * n_ - u * (u + 1) / 2 + (v - u - 1);
}

Edge EdgeColoring::pair_at(int index) const {
  int u = 0;
  while (index >= n_ - 1 - u) {
    index -= n_ - 1 - u;
    ++u;
  }
  return {u, u + 1 + index};
}

void EdgeColoring::set_color(int u, int v, int c) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw std::out_of_range("bad vertex pair");
  if (c < 0 || c >= num_colors_) throw std::invalid_argument("color id out of range");
  colors_[pair_index(u, v)] = c;
}

bool EdgeColoring::is_exact() const {
  std::vector<char> seen(static_cast<std::size_t>(num_colors_), 0);
  int distinct = 0;
  for (int c : colors_)
    if (!seen[c]) {
      seen[c] = 1;
      ++distinct;
    }
  return distinct == num_colors_;
}

// ---- search ---------------------------------------------------------------

namespace {

bool clique_search(const Graph& g, int r, std::vector<int>& chosen, const VertexSet& cand) {
  if (static_cast<int>(chosen.size()) == r) return true;
  if (cand.size() < r - static_cast<int>(chosen.size())) return false;
  for (int v : cand) {
    chosen.push_back(v);
    if (clique_search(g, r, chosen, (cand & g.neighbors(v)).after(v))) return true;
    chosen.pop_back();
  }
  return false;
}

// Backtracking over (center, clique_1 < ... < clique_k) with cliques ordered
// by their least vertex. With a coloring attached, every fan edge must carry
// a color not used elsewhere in the fan.
class FanSearch {
 public:
  FanSearch(int n, const Graph* host, const EdgeColoring* col, const FanSpec& spec)
      : n_(n), host_(host), col_(col), spec_(spec), cliques_(static_cast<std::size_t>(spec.k)) {
    if (col_) used_.assign(static_cast<std::size_t>(col_->num_colors()), 0);
  }

  std::optional<FanWitness> run() {
    const int per_clique = spec_.r - 1;
    // A rainbow copy needs one color per fan edge.
    if (col_ && col_->num_colors() < spec_.edge_count()) return std::nullopt;
    for (int c = 0; c < n_; ++c) {
      center_ = c;
      VertexSet avail = neighbors(c);
      if (avail.size() < spec_.k * per_clique) continue;
      if (place(0, -1, avail)) return witness();
    }
    return std::nullopt;
  }

 private:
  VertexSet neighbors(int v) const {
    if (host_) return host_->neighbors(v);
    VertexSet all = VertexSet::range(0, n_);
    all.erase(v);
    return all;
  }

  // Marks the colors of the edges from x to the center and to `members`.
  // Returns false (with nothing marked) on a repeated color.
  bool push(int x, const std::vector<int>& members) {
    if (!col_) return true;
    std::size_t mark = stack_.size();
    auto take = [&](int a, int b) {
      int c = col_->color(a, b);
      if (used_[c]) return false;
      used_[c] = 1;
      stack_.push_back(c);
      return true;
    };
    bool ok = take(center_, x);
    for (std::size_t i = 0; ok && i < members.size(); ++i) ok = take(members[i], x);
    if (!ok) {
      unwind(mark);
      return false;
    }
    frames_.push_back(mark);
    return true;
  }

  void pop() {
    if (!col_) return;
    unwind(frames_.back());
    frames_.pop_back();
  }

  void unwind(std::size_t mark) {
    while (stack_.size() > mark) {
      used_[stack_.back()] = 0;
      stack_.pop_back();
    }
  }

  bool place(int index, int prev_first, const VertexSet& avail) {
    if (index == spec_.k) return true;
    const int per_clique = spec_.r - 1;
    if (avail.size() < (spec_.k - index) * per_clique) return false;
    std::vector<int> members;
    for (int a : avail.after(prev_first)) {
      if (!push(a, members)) continue;
      members.assign(1, a);
      if (grow(index, members, (avail & neighbors(a)).after(a), avail)) return true;
      members.clear();
      pop();
    }
    return false;
  }

  bool grow(int index, std::vector<int>& members, const VertexSet& cand, const VertexSet& avail) {
    const int per_clique = spec_.r - 1;
    const int have = static_cast<int>(members.size());
    if (have == per_clique) {
      cliques_[index] = members;
      VertexSet rest = avail;
      for (int v : members) rest.erase(v);
      return place(index + 1, members.front(), rest);
    }
    if (cand.size() < per_clique - have) return false;
    for (int x : cand) {
      if (!push(x, members)) continue;
      members.push_back(x);
      if (grow(index, members, (cand & neighbors(x)).after(x), avail)) return true;
      members.pop_back();
      pop();
    }
    return false;
  }

  FanWitness witness() const {
    FanWitness w;
    w.center = center_;
    for (const auto& members : cliques_) {
      VertexSet s;
      s.insert(center_);
      for (int v : members) s.insert(v);
      w.cliques.push_back(s);
      if (col_) {
        auto vs = s.members();
        for (std::size_t a = 0; a < vs.size(); ++a)
          for (std::size_t b = a + 1; b < vs.size(); ++b) w.colors.push_back(col_->color(vs[a], vs[b]));
      }
    }
    return w;
  }

  int n_;
  const Graph* host_;
  const EdgeColoring* col_;
  FanSpec spec_;
  int center_ = 0;
  std::vector<std::vector<int>> cliques_;
  std::vector<char> used_;
  std::vector<int> stack_;
  std::vector<std::size_t> frames_;
};

}  // namespace

std::optional<VertexSet> contains_clique(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("clique size must be >= 1");
  if (r > g.size()) return std::nullopt;
  std::vector<int> chosen;
  if (!clique_search(g, r, chosen, g.vertices())) return std::nullopt;
  return VertexSet::from(chosen);
}

std::optional<FanWitness> find_fan(const Graph& g, const FanSpec& spec) {
  return FanSearch(g.size(), &g, nullptr, spec).run();
}

std::optional<FanWitness> find_rainbow_fan(const EdgeColoring& col, const FanSpec& spec) {
  return FanSearch(col.size(), nullptr, &col, spec).run();
}

std::optional<FanWitness> find_rainbow_fan(const EdgeColoring& col, const Graph& host, const FanSpec& spec) {
  if (host.size() != col.size()) throw std::invalid_argument("host and coloring disagree on n");
  return FanSearch(col.size(), &host, &col, spec).run();
}

Graph representative_subgraph(const EdgeColoring& col) {
  if (!col.is_exact()) throw std::invalid_argument("representative subgraph needs an exact coloring");
  Graph g(col.size());
  std::vector<char> seen(static_cast<std::size_t>(col.num_colors()), 0);
  for (int i = 0; i < col.pair_count(); ++i) {
    int c = col.pair_colors()[i];
    if (seen[c]) continue;
    seen[c] = 1;
    Edge e = col.pair_at(i);
    g.add_edge(e.u, e.v);
  }
  return g;
}

// ---- naive oracle ---------------------------------------------------------

namespace {

bool is_clique_with(const Graph& g, int center, const std::vector<int>& group) {
  for (std::size_t a = 0; a < group.size(); ++a) {
    if (!g.adjacent(center, group[a])) return false;
    for (std::size_t b = a + 1; b < group.size(); ++b)
      if (!g.adjacent(group[a], group[b])) return false;
  }
  return true;
}

// Splits `rest` into groups of `size`; the smallest remaining vertex always
// opens the next group so each grouping is visited once.
bool split_into_cliques(const Graph& g, int center, std::vector<int> rest, int size) {
  if (rest.empty()) return true;
  int head = rest.front();
  std::vector<int> tail(rest.begin() + 1, rest.end());
  const int m = static_cast<int>(tail.size());
  const int pick = size - 1;
  std::vector<int> idx(static_cast<std::size_t>(pick));
  for (int i = 0; i < pick; ++i) idx[i] = i;
  while (true) {
    std::vector<int> group{head};
    std::vector<char> in(static_cast<std::size_t>(m), 0);
    for (int i : idx) {
      group.push_back(tail[i]);
      in[i] = 1;
    }
    if (is_clique_with(g, center, group)) {
      std::vector<int> left;
      for (int i = 0; i < m; ++i)
        if (!in[i]) left.push_back(tail[i]);
      if (split_into_cliques(g, center, left, size)) return true;
    }
    int i = pick - 1;
    while (i >= 0 && idx[i] == m - pick + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

}  // namespace

bool naive_fan_check(const Graph& g, const FanSpec& spec) {
  const int n = g.size();
  if (n > 10) throw std::invalid_argument("naive fan check is limited to 10 vertices");
  const int need = spec.vertex_count();
  if (need > n) return false;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != need) continue;
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) subset.push_back(v);
    for (int center : subset) {
      std::vector<int> rest;
      for (int v : subset)
        if (v != center) rest.push_back(v);
      if (split_into_cliques(g, center, rest, spec.r - 1)) return true;
    }
  }
  return false;
}

// ---- witness checks -------------------------------------------------------

namespace {

bool witness_shape_ok(int n, const FanSpec& spec, const FanWitness& w) {
  if (w.center < 0 || w.center >= n) return false;
  if (static_cast<int>(w.cliques.size()) != spec.k) return false;
  for (std::size_t i = 0; i < w.cliques.size(); ++i) {
    const auto& c = w.cliques[i];
    if (c.size() != spec.r || !c.contains(w.center) || !c.within(n)) return false;
    for (std::size_t j = i + 1; j < w.cliques.size(); ++j) {
      VertexSet both = c & w.cliques[j];
      if (both.size() != 1 || !both.contains(w.center)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_valid_fan_witness(const Graph& g, const FanSpec& spec, const FanWitness& w) {
  if (!witness_shape_ok(g.size(), spec, w)) return false;
  for (const auto& c : w.cliques)
    for (int u : c)
      for (int v : c.after(u))
        if (!g.adjacent(u, v)) return false;
  return true;
}

bool is_valid_rainbow_witness(const EdgeColoring& col, const FanSpec& spec, const FanWitness& w) {
  if (!witness_shape_ok(col.size(), spec, w)) return false;
  std::vector<int> seen;
  for (const auto& c : w.cliques)
    for (int u : c)
      for (int v : c.after(u)) seen.push_back(col.color(u, v));
  if (seen != w.colors) return false;
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// ---- text format ----------------------------------------------------------

void write_coloring(std::ostream& out, const EdgeColoring& col) {
  out << col.size() << ' ' << col.num_colors() << '\n';
  for (int i = 0; i < col.pair_count(); ++i) {
    Edge e = col.pair_at(i);
    out << e.u << ' ' << e.v << ' ' << col.pair_colors()[i] << '\n';
  }
}

EdgeColoring read_coloring(std::istream& in, bool require_exact) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> void {
    throw FormatError("line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_line()) fail("missing header");
  long long n = -1, c = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> c) || (hs >> extra)) fail("header must be 'n c'");
  }
  if (n < 0 || c < 0) fail("negative count in header");
  if (n > kMaxVertices) throw CapacityError("coloring exceeds capacity");
  const int pairs = static_cast<int>(n * (n - 1) / 2);
  if (pairs > 0 && c < 1) fail("no colors declared");

  std::vector<int> colors(static_cast<std::size_t>(pairs));
  int expected = 0;
  Edge want{0, 1};
  for (; expected < pairs; ++expected) {
    if (!next_line()) fail("missing pair lines; expected " + std::to_string(pairs));
    std::istringstream ls(line);
    long long u = 0, v = 0, color = 0;
    std::string extra;
    if (!(ls >> u >> v >> color) || (ls >> extra)) fail("pair line must be 'u v color'");
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v) fail("bad vertex pair");
    if (u != want.u || v != want.v) {
      Edge got{static_cast<int>(u), static_cast<int>(v)};
      fail(got < want ? "duplicate or out-of-order pair" : "missing pair " + std::to_string(want.u) + " " +
                                                                std::to_string(want.v));
    }
    if (color < 0 || color >= c) fail("color id out of range");
    colors[expected] = static_cast<int>(color);
    if (++want.v == n) {
      ++want.u;
      want.v = want.u + 1;
    }
  }
  if (next_line()) fail("trailing data after pair list");
  auto col = EdgeColoring::from_pair_colors(static_cast<int>(n), static_cast<int>(c), std::move(colors));
  if (require_exact && !col.is_exact()) throw FormatError("coloring does not use every declared color");
  return col;
}

std::string to_text(const EdgeColoring& col) {
  std::ostringstream out;
  write_coloring(out, col);
  return out.str();
}

EdgeColoring coloring_from_text(const std::string& text, bool require_exact) {
  std::istringstream in(text);
  return read_coloring(in, require_exact);
}

}  // namespace fanar
