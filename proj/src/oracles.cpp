#include "fanar/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanar/error.hpp"

namespace fanar {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class NodeCounter {
 public:
  explicit NodeCounter(const SearchBudget& budget, std::string what) : cap_(budget.max_nodes), what_(std::move(what)) {}
  void tick() {
    if (++nodes_ > cap_) throw BudgetExhausted(what_ + ": node budget of " + std::to_string(cap_) + " exhausted");
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::string what_;
};

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

}  // namespace

// ---- Forbidden ------------------------------------------------------------

Forbidden Forbidden::clique(int r) {
  if (r < 2) throw std::invalid_argument("forbidden clique needs r >= 2");
  Forbidden f;
  f.clique_size_ = r;
  return f;
}

Forbidden Forbidden::fan(const FanSpec& spec) {
  Forbidden f;
  f.spec_ = spec;
  return f;
}

bool Forbidden::found_in(const Graph& g) const {
  if (clique_size_ > 0) return contains_clique(g, clique_size_).has_value();
  return find_fan(g, spec_).has_value();
}

std::string Forbidden::describe() const {
  if (clique_size_ > 0) return "K_" + std::to_string(clique_size_);
  return "F_{" + std::to_string(spec_.k) + "," + std::to_string(spec_.r) + "}";
}

// ---- ex -------------------------------------------------------------------

OracleResult brute_force_ex(int n, const Forbidden& forbidden, SearchBudget budget) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > 9) throw std::invalid_argument("brute_force_ex is limited to n <= 9");
  const auto start = Clock::now();
  const auto pairs = all_pairs(n);
  const int m = static_cast<int>(pairs.size());
  NodeCounter counter(budget, "brute_force_ex");

  int best = -1;
  Graph witness(n);

  if (n <= 7) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      counter.tick();
      int count = std::popcount(mask);
      if (count <= best) continue;
      Graph g(n);
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1U) g.add_edge(pairs[i].u, pairs[i].v);
      if (!forbidden.found_in(g)) {
        best = count;
        witness = g;
      }
    }
  } else {
    Graph g(n);
    auto rec = [&](auto&& self, int i, int count) -> void {
      counter.tick();
      if (count > best) {
        best = count;
        witness = g;
      }
      if (i == m || count + (m - i) <= best) return;
      g.add_edge(pairs[i].u, pairs[i].v);
      if (!forbidden.found_in(g)) self(self, i + 1, count + 1);
      g.remove_edge(pairs[i].u, pairs[i].v);
      self(self, i + 1, count);
    };
    rec(rec, 0, 0);
  }

  OracleResult out;
  out.value = best;
  out.nodes = counter.nodes();
  out.elapsed_seconds = seconds_since(start);
  out.witness_graph = witness;
  return out;
}

// ---- f(nu, Delta) ---------------------------------------------------------

namespace {

// Core vertices 0..2s-1 with M = {(0,1), (2,3), ...}; core adjacency as
// bitmasks over the core.
struct CoreSearch {
  int nu_bound = 0;
  int delta = 0;
  int core_size = 0;
  std::vector<unsigned> core_adj;
  std::vector<unsigned> alt_reach;  // alt_reach[a]: ends b of M-alternating paths a, M(a), ..., b
  std::vector<int> cap;
  struct Type {
    unsigned members;
    unsigned reach;
    bool self_conflict;
    int width;
  };
  std::vector<Type> types;
  std::vector<std::pair<unsigned, int>> chosen;  // (members, multiplicity)

  int core_edges = 0;
  int best = -1;
  Graph best_graph;
  NodeCounter* counter = nullptr;

  static int mate(int v) { return v ^ 1; }

  void compute_alternating_reach() {
    alt_reach.assign(static_cast<std::size_t>(core_size), 0U);
    for (int a = 0; a < core_size; ++a) {
      auto walk = [&](auto&& self, int end, unsigned visited) -> void {
        alt_reach[a] |= 1U << end;
        for (int y = 0; y < core_size; ++y) {
          if (!(core_adj[end] >> y & 1U) || y == mate(end)) continue;
          if (visited >> y & 1U || visited >> mate(y) & 1U) continue;
          self(self, mate(y), visited | 1U << y | 1U << mate(y));
        }
      };
      walk(walk, mate(a), 1U << a | 1U << mate(a));
    }
  }

  void build_types() {
    types.clear();
    for (unsigned s = 1; s < (1U << core_size); ++s) {
      int width = std::popcount(s);
      if (width > delta) continue;
      unsigned reach = 0;
      for (int a = 0; a < core_size; ++a)
        if (s >> a & 1U) reach |= alt_reach[a];
      types.push_back({s, reach, (reach & s) != 0, width});
    }
    // Wider attachments first: they reach good totals sooner.
    std::stable_sort(types.begin(), types.end(), [](const Type& x, const Type& y) { return x.width > y.width; });
  }

  void record(int total) {
    best = total;
    int extra = 0;
    for (auto& [members, mult] : chosen) extra += mult;
    Graph g(core_size + extra);
    for (int u = 0; u < core_size; ++u)
      for (int v = u + 1; v < core_size; ++v)
        if (core_adj[u] >> v & 1U) g.add_edge(u, v);
    int next = core_size;
    for (auto& [members, mult] : chosen)
      for (int i = 0; i < mult; ++i, ++next)
        for (int a = 0; a < core_size; ++a)
          if (members >> a & 1U) g.add_edge(next, a);
    best_graph = g;
  }

  void attach(std::size_t t, unsigned blocked, int total) {
    counter->tick();
    if (total > best) record(total);
    if (t == types.size()) return;
    int room = 0;
    for (int c : cap) room += c;
    if (total + room <= best) return;

    const Type& ty = types[t];
    if (!(ty.members & blocked)) {
      int most = ty.self_conflict ? 1 : delta;
      for (int a = 0; a < core_size; ++a)
        if (ty.members >> a & 1U) most = std::min(most, cap[a]);
      for (int mult = most; mult >= 1; --mult) {
        for (int a = 0; a < core_size; ++a)
          if (ty.members >> a & 1U) cap[a] -= mult;
        chosen.emplace_back(ty.members, mult);
        attach(t + 1, blocked | ty.reach, total + mult * ty.width);
        chosen.pop_back();
        for (int a = 0; a < core_size; ++a)
          if (ty.members >> a & 1U) cap[a] += mult;
      }
    }
    attach(t + 1, blocked, total);
  }

  void run() {
    best = 0;
    best_graph = Graph(0);
    for (int s = 1; s <= nu_bound; ++s) {
      core_size = 2 * s;
      std::vector<Edge> free_pairs;
      for (int u = 0; u < core_size; ++u)
        for (int v = u + 1; v < core_size; ++v)
          if (v != mate(u)) free_pairs.push_back({u, v});
      const int fp = static_cast<int>(free_pairs.size());
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << fp); ++mask) {
        core_adj.assign(static_cast<std::size_t>(core_size), 0U);
        for (int v = 0; v < core_size; ++v) core_adj[v] |= 1U << mate(v);
        for (int i = 0; i < fp; ++i)
          if (mask >> i & 1U) {
            core_adj[free_pairs[i].u] |= 1U << free_pairs[i].v;
            core_adj[free_pairs[i].v] |= 1U << free_pairs[i].u;
          }
        cap.assign(static_cast<std::size_t>(core_size), 0);
        bool ok = true;
        for (int v = 0; v < core_size; ++v) {
          cap[v] = delta - std::popcount(core_adj[v]);
          if (cap[v] < 0) ok = false;
        }
        if (!ok) continue;
        core_edges = s + std::popcount(mask);
        compute_alternating_reach();
        build_types();
        attach(0, 0U, core_edges);
      }
    }
  }
};

}  // namespace

OracleResult brute_force_f(const BoundedPair& p, SearchBudget budget) {
  if (p.nu > 3 || p.delta > 3) throw std::invalid_argument("brute_force_f is limited to nu, Delta <= 3");
  const auto start = Clock::now();
  NodeCounter counter(budget, "brute_force_f");
  CoreSearch search;
  search.nu_bound = p.nu;
  search.delta = p.delta;
  search.counter = &counter;
  search.run();
  OracleResult out;
  out.value = search.best;
  out.nodes = counter.nodes();
  out.elapsed_seconds = seconds_since(start);
  out.witness_graph = search.best_graph;
  return out;
}

// ---- ar -------------------------------------------------------------------

std::uint64_t for_each_set_partition(int m, const std::function<void(std::span<const int>)>& visit) {
  if (m < 0) throw std::invalid_argument("negative length");
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == m) {
      ++count;
      visit(rgs);
      return;
    }
    for (int c = 0; c <= blocks; ++c) {
      rgs[i] = c;
      self(self, i + 1, std::max(blocks, c + 1));
    }
  };
  if (m == 0) {
    visit(rgs);
    return 1;
  }
  rgs[0] = 0;
  rec(rec, 1, 1);
  return count;
}

namespace {

void check_ar_args(int n, const FanSpec& spec) {
  if (n < 2) throw std::invalid_argument("anti-Ramsey oracle needs n >= 2");
  if (spec.vertex_count() > n) throw std::invalid_argument("F_{k,r} does not fit in K_n; ar is undefined");
}

}  // namespace

OracleResult brute_force_ar(int n, const FanSpec& spec, SearchBudget budget) {
  check_ar_args(n, spec);
  if (n > 6) throw std::invalid_argument("brute_force_ar is limited to n <= 6");
  const auto start = Clock::now();
  const int m = n * (n - 1) / 2;
  NodeCounter counter(budget, "brute_force_ar");

  int best = 0;
  std::vector<int> best_rgs;

  if (n <= 5) {
    for_each_set_partition(m, [&](std::span<const int> rgs) {
      counter.tick();
      int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
      if (blocks <= best) return;
      auto col = EdgeColoring::from_pair_colors(n, blocks, {rgs.begin(), rgs.end()});
      if (!find_rainbow_fan(col, spec)) {
        best = blocks;
        best_rgs.assign(rgs.begin(), rgs.end());
      }
    });
  } else {
    EdgeColoring partial(n, m);
    Graph host(n);
    std::vector<int> rgs(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
      counter.tick();
      if (i == m) {
        if (blocks > best) {
          best = blocks;
          best_rgs = rgs;
        }
        return;
      }
      if (blocks + (m - i) <= best) return;
      Edge e = partial.pair_at(i);
      host.add_edge(e.u, e.v);
      for (int c = 0; c <= blocks; ++c) {
        rgs[i] = c;
        partial.set_color(e.u, e.v, c);
        // A rainbow copy among colored edges survives any completion.
        if (!find_rainbow_fan(partial, host, spec)) self(self, i + 1, std::max(blocks, c + 1));
      }
      host.remove_edge(e.u, e.v);
    };
    rec(rec, 0, 0);
  }

  OracleResult out;
  out.value = best + 1;
  out.nodes = counter.nodes();
  out.elapsed_seconds = seconds_since(start);
  if (best > 0) out.witness_coloring = EdgeColoring::from_pair_colors(n, best, best_rgs);
  return out;
}

std::int64_t brute_force_ar_unpruned(int n, const FanSpec& spec) {
  check_ar_args(n, spec);
  if (n > 4) throw std::invalid_argument("unpruned anti-Ramsey enumeration is limited to n <= 4");
  const int m = n * (n - 1) / 2;
  std::vector<int> colors(static_cast<std::size_t>(m), 0);
  int best = 0;
  while (true) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    int distinct = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    if (distinct > best && !find_rainbow_fan(EdgeColoring::from_pair_colors(n, m, colors), spec)) best = distinct;
    int i = 0;
    while (i < m && ++colors[i] == m) colors[i++] = 0;
    if (i == m) break;
  }
  return best + 1;
}

EdgeColoring max_rainbow_free_coloring(int n, const FanSpec& spec, SearchBudget budget) {
  auto res = brute_force_ar(n, spec, budget);
  if (!res.witness_coloring) throw std::invalid_argument("every coloring of K_n contains a rainbow copy");
  return *res.witness_coloring;
}

}  // namespace fanar
