#include "fanar/partition.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fanar/error.hpp"
#include "fanar/formulas.hpp"

namespace fanar {

bool PartitionClasses::is_partition_of(int n) const {
  VertexSet seen;
  for (const auto& c : classes) {
    if (!c.within(n) || c.intersects(seen)) return false;
    seen |= c;
  }
  return seen == VertexSet::range(0, n);
}

namespace {

void require_partition(const Graph& g, const PartitionClasses& parts) {
  if (!parts.is_partition_of(g.size())) throw std::invalid_argument("classes do not partition V(G)");
}

VertexSet common_neighbors(const Graph& g, const VertexSet& members, VertexSet pool) {
  for (int v : members) pool &= g.neighbors(v);
  return pool;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int u : s)
    if (!(s.after(u) - g.neighbors(u)).empty()) return false;
  return true;
}

}  // namespace

bool dominates_with_deficiency(const Graph& g, const VertexSet& x, const VertexSet& y, int b) {
  if (x.intersects(y)) throw std::invalid_argument("domination needs disjoint sets");
  if (!x.within(g.size()) || !y.within(g.size())) throw std::out_of_range("set outside the graph");
  const int need = y.size() - b;
  for (int v : x)
    if ((g.neighbors(v) & y).size() < need) return false;
  return true;
}

bool is_deficiency_complete(const Graph& g, const std::vector<VertexSet>& classes, int b) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (i != j && !dominates_with_deficiency(g, classes[i], classes[j], b)) return false;
  return true;
}

std::vector<VertexSet> extend_cliques(const Graph& g, const PartitionClasses& parts,
                                      const std::vector<VertexSet>& seeds, int b) {
  require_partition(g, parts);
  if (b < 0) throw std::invalid_argument("deficiency must be nonnegative");
  const int m = parts.size();
  const int t = static_cast<int>(seeds.size());
  if (!is_deficiency_complete(g, parts.classes, b)) throw std::invalid_argument("partition is not b-deficiency complete");
  for (const auto& part : parts.classes)
    if (part.size() < m * b + 2 * t) throw std::invalid_argument("a part is smaller than m*b + 2t");
  for (const auto& seed : seeds) {
    if (!seed.within(g.size()) || !is_clique(g, seed)) throw std::invalid_argument("seed is not a clique of G");
    int doubles = 0;
    for (const auto& part : parts.classes) {
      int hit = (seed & part).size();
      if (hit > 2) throw std::invalid_argument("seed meets a part in more than two vertices");
      if (hit == 2) ++doubles;
    }
    if (doubles > 1) throw std::invalid_argument("seed meets two parts in two vertices");
  }

  VertexSet reserved;
  std::vector<VertexSet> out;
  out.reserve(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    VertexSet d = seeds[i];
    for (int j = 0; j < m; ++j) {
      if (d.intersects(parts.classes[j])) continue;
      VertexSet pool = common_neighbors(g, d, parts.classes[j] - reserved);
      int pick = pool.first();
      if (pick == -1)
        throw ExtensionFailure("no extension vertex for seed " + std::to_string(i) + " in part " + std::to_string(j));
      d.insert(pick);
      reserved.insert(pick);
    }
    out.push_back(d);
  }
  return out;
}

bool extension_postconditions_hold(const Graph& g, const PartitionClasses& parts,
                                   const std::vector<VertexSet>& seeds, const std::vector<VertexSet>& extended) {
  if (seeds.size() != extended.size()) return false;
  VertexSet added_so_far;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& c = seeds[i];
    const auto& d = extended[i];
    if (!c.subset_of(d) || !is_clique(g, d)) return false;  // (1)
    VertexSet added = d - c;
    if (added.intersects(added_so_far)) return false;  // (2)
    added_so_far |= added;
    int doubles = 0;
    for (const auto& part : parts.classes) {  // (3)
      int hit = (d & part).size();
      if (hit == 1) continue;
      if (hit == 2 && (c & part).size() == 2) {
        ++doubles;
        continue;
      }
      return false;
    }
    if (doubles > 1) return false;
  }
  return true;
}

std::vector<VertexSet> build_disjoint_cliques(const Graph& g, const std::vector<VertexSet>& classes, int b, int k,
                                              bool with_y0) {
  if (b < 0 || k < 0) throw std::invalid_argument("b and k must be nonnegative");
  const int first = with_y0 ? 1 : 0;
  const int m = static_cast<int>(classes.size()) - first;
  if (m < 1) throw std::invalid_argument("need at least one class Y_1");
  VertexSet seen;
  for (const auto& c : classes) {
    if (!c.within(g.size()) || c.intersects(seen)) throw std::invalid_argument("classes must be disjoint subsets of V(G)");
    seen |= c;
  }
  for (int i = 1; i <= m; ++i)
    if (classes[first + i - 1].size() < (i - 1) * b + k) throw std::invalid_argument("|Y_i| < (i-1)b + k");
  if (with_y0 && classes[0].size() < m * b + k) throw std::invalid_argument("|Y_0| < m*b + k");
  if (!is_deficiency_complete(g, classes, b)) throw std::invalid_argument("classes are not b-deficiency complete");

  // Y_1..Y_m first, Y_0 last.
  std::vector<int> order;
  for (int i = first; i < static_cast<int>(classes.size()); ++i) order.push_back(i);
  if (with_y0) order.push_back(0);

  VertexSet used;
  std::vector<VertexSet> out;
  for (int c = 0; c < k; ++c) {
    VertexSet clique;
    for (int idx : order) {
      int pick = common_neighbors(g, clique, classes[idx] - used).first();
      if (pick == -1)
        throw ExtensionFailure("no vertex for clique " + std::to_string(c) + " in class " + std::to_string(idx));
      clique.insert(pick);
    }
    used |= clique;
    out.push_back(clique);
  }
  return out;
}

bool disjoint_cliques_postconditions_hold(const Graph& g, const std::vector<VertexSet>& classes, int k,
                                          const std::vector<VertexSet>& cliques) {
  if (static_cast<int>(cliques.size()) != k) return false;
  VertexSet used;
  for (const auto& c : cliques) {
    if (c.intersects(used) || !is_clique(g, c)) return false;
    if (c.size() != static_cast<int>(classes.size())) return false;
    for (const auto& cls : classes)
      if ((c & cls).size() != 1) return false;
    used |= c;
  }
  return true;
}

DeficitReport edgelow_deficit(const Graph& g, const PartitionClasses& parts, int k) {
  require_partition(g, parts);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  DeficitReport rep;
  for (const auto& c : parts.classes) rep.inner_edges += edges_within(g, c);
  std::int64_t cross_edges = g.edge_count() - rep.inner_edges;
  std::int64_t cross_pairs = 0;
  for (std::size_t i = 0; i < parts.classes.size(); ++i)
    for (std::size_t j = i + 1; j < parts.classes.size(); ++j)
      cross_pairs += std::int64_t{parts.classes[i].size()} * parts.classes[j].size();
  rep.cross_missing = cross_pairs - cross_edges;
  rep.deficit = rep.inner_edges - rep.cross_missing;
  rep.bound = k == 0 ? 0 : f_bounded(BoundedPair(k, k));
  return rep;
}

PartitionProperties verify_partition_properties(const Graph& g, const PartitionClasses& parts, int k) {
  require_partition(g, parts);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const std::int64_t n = g.size();
  const std::int64_t rm1 = parts.size();
  const std::int64_t r = rm1 + 1;
  if (rm1 < 1) throw std::invalid_argument("need at least one class");

  PartitionProperties out;

  out.sizes = true;
  for (const auto& c : parts.classes)
    if (rm1 * c.size() < n - rm1 * (k + 1) * (2 * r - 3)) out.sizes = false;

  std::vector<int> inner_nu;
  std::int64_t nu_total = 0;
  out.inner_matchings = true;
  for (const auto& c : parts.classes) {
    auto [sub, back] = induced_subgraph(g, c);
    inner_nu.push_back(matching_number(sub));
    nu_total += inner_nu.back();
    if (max_degree(sub) > k) out.inner_matchings = false;
  }
  for (int nu : inner_nu)
    if (nu_total - nu > k) out.inner_matchings = false;

  out.neighborhoods = true;
  for (int i = 0; i < parts.size() && out.neighborhoods; ++i) {
    for (int x : parts.classes[i]) {
      std::int64_t total = (g.neighbors(x) & parts.classes[i]).size();
      for (int j = 0; j < parts.size() && total <= k; ++j) {
        if (j == i) continue;
        total += matching_number(induced_subgraph(g, g.neighbors(x) & parts.classes[j]).first);
      }
      if (total > k) {
        out.neighborhoods = false;
        break;
      }
    }
  }
  return out;
}

PeelResult degenerate_peel(const Graph& g, int k, int r) {
  if (r < 3) throw std::invalid_argument("peeling needs r >= 3");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const std::int64_t n = g.size();
  VertexSet alive = g.vertices();
  PeelResult out;
  for (std::int64_t t = 0; t < n; ++t) {
    int victim = -1;
    int low = 0;
    for (int v : alive) {
      int d = (g.neighbors(v) & alive).size();
      if (victim == -1 || d < low) {
        victim = v;
        low = d;
      }
    }
    // (r-1) delta <= (r-2)(n-t) - (k+1)(r-1)
    if (std::int64_t{r - 1} * low > std::int64_t{r - 2} * (n - t) - std::int64_t{k + 1} * (r - 1)) break;
    alive.erase(victim);
    out.removed.push_back(victim);
  }
  auto [rest, kept] = induced_subgraph(g, alive);
  out.remaining = std::move(rest);
  out.kept = std::move(kept);
  return out;
}

PartitionClasses heuristic_partition(const Graph& g, int classes) {
  if (classes < 1) throw std::invalid_argument("need at least one class");
  const int n = g.size();
  std::vector<int> where(static_cast<std::size_t>(n), -1);
  PartitionClasses out;
  out.classes.assign(static_cast<std::size_t>(classes), VertexSet{});

  auto neighbors_in = [&](int v, int c) { return (g.neighbors(v) & out.classes[c]).size(); };

  // Initial pass: fewest earlier neighbors, then smallest class.
  for (int v = 0; v < n; ++v) {
    int best = 0;
    for (int c = 1; c < classes; ++c) {
      int a = neighbors_in(v, c), b = neighbors_in(v, best);
      if (a < b || (a == b && out.classes[c].size() < out.classes[best].size())) best = c;
    }
    where[v] = best;
    out.classes[best].insert(v);
  }
  // Each move strictly lowers the number of inner edges, so this terminates.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      int here = neighbors_in(v, where[v]);
      int c = 0;
      for (int d = 1; d < classes; ++d)
        if (neighbors_in(v, d) < neighbors_in(v, c)) c = d;
      if (neighbors_in(v, c) < here) {
        out.classes[where[v]].erase(v);
        out.classes[c].insert(v);
        where[v] = c;
        moved = true;
      }
    }
  }
  return out;
}

void write_partition(std::ostream& out, const PartitionClasses& parts) {
  for (const auto& c : parts.classes) {
    bool first = true;
    for (int v : c) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

PartitionClasses read_partition(std::istream& in, int n) {
  PartitionClasses parts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    VertexSet c;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw FormatError("line " + std::to_string(line_no) + ": bad vertex '" + tok + "'");
      if (v < 0 || v >= n) throw FormatError("line " + std::to_string(line_no) + ": vertex out of range");
      if (c.contains(v)) throw FormatError("line " + std::to_string(line_no) + ": repeated vertex");
      c.insert(v);
    }
    parts.classes.push_back(c);
  }
  if (!parts.is_partition_of(n)) throw FormatError("classes do not partition 0.." + std::to_string(n - 1));
  return parts;
}

std::string to_text(const PartitionClasses& parts) {
  std::ostringstream out;
  write_partition(out, parts);
  return out.str();
}

PartitionClasses partition_from_text(const std::string& text, int n) {
  std::istringstream in(text);
  return read_partition(in, n);
}

}  // namespace fanar
