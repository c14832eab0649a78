#include "fanar/harness.hpp"

#include <chrono>
#include <stdexcept>

namespace fanar {

EdgeColoring lower_bound_coloring(int n, const FanSpec& spec) {
  Graph host = construct_extremal_fan_free(n, spec);
  const int pairs = n * (n - 1) / 2;
  if (host.edge_count() == pairs) throw std::invalid_argument("extremal host is complete; no pair is left for the shared color");
  const int shared = host.edge_count();
  EdgeColoring col(n, shared + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) col.set_color(u, v, shared);
  int next = 0;
  for (const auto& e : host.edges()) col.set_color(e.u, e.v, next++);
  return col;
}

VerificationReport verify_lower_bound(int n, int kplus1, int r) {
  if (kplus1 < 2) throw std::invalid_argument("verify_lower_bound needs k+1 >= 2");
  const auto start = std::chrono::steady_clock::now();
  const FanSpec spec(kplus1 - 1, r);
  const FanSpec target(kplus1, r);

  VerificationReport rep;
  rep.n = n;
  rep.kplus1 = kplus1;
  rep.r = r;

  Graph host = construct_extremal_fan_free(n, spec);
  EdgeColoring col = lower_bound_coloring(n, spec);
  auto ar = ar_fan(n, kplus1, r);

  rep.construction_edge_count = host.edge_count();
  rep.formula_value = ar.value - 2;
  rep.colors_used = col.num_colors();
  rep.below_threshold = ar.below_threshold;
  rep.colors_match = col.is_exact() && rep.colors_used == rep.formula_value + 1 &&
                     rep.colors_used == rep.construction_edge_count + 1;

  auto in_host = find_fan(host, spec);
  rep.fan_free = !in_host.has_value();
  if (in_host) rep.failing_witness = in_host;

  auto rainbow = find_rainbow_fan(col, target);
  rep.rainbow_free = !rainbow.has_value();
  if (rainbow) rep.failing_witness = rainbow;

  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<GridCell> verify_formula_grid(Range k, Range r, Range n) {
  std::vector<GridCell> cells;
  for (int kk = std::max(k.lo, 1); kk <= k.hi; ++kk) {
    for (int rr = std::max(r.lo, 3); rr <= r.hi; ++rr) {
      const FanSpec spec(kk, rr);
      for (int nn = std::max(n.lo, 0); nn <= n.hi; ++nn) {
        if (!extremal_construction_fits(nn, spec)) continue;
        GridCell cell;
        cell.n = nn;
        cell.k = kk;
        cell.r = rr;
        Graph g = construct_extremal_fan_free(nn, spec);
        cell.construction_edges = g.edge_count();
        cell.formula_value = ex_fan(nn, spec).value;
        cell.identity_holds = cell.construction_edges == cell.formula_value;
        PartitionClasses parts{extremal_partition(nn, spec)};
        cell.deficit = edgelow_deficit(g, parts, kk);
        cell.deficit_holds = cell.deficit.deficit == fan_embedded_edges(kk) && cell.deficit.deficit <= cell.deficit.bound;
        cells.push_back(cell);
      }
    }
  }
  return cells;
}

SplitProbe probe_split_extra_color(int n, const FanSpec& spec, std::mt19937_64& rng) {
  EdgeColoring base = lower_bound_coloring(n, spec);
  const int shared = base.num_colors() - 1;
  std::vector<int> colors = base.pair_colors();
  std::vector<int> shared_pairs;
  for (int i = 0; i < static_cast<int>(colors.size()); ++i)
    if (colors[i] == shared) shared_pairs.push_back(i);

  SplitProbe probe;
  probe.colors_used = base.num_colors();
  if (shared_pairs.size() >= 2) {
    // Move a random nonempty proper subset of the shared class to a new color.
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::size_t> pick(0, shared_pairs.size() - 1);
    bool moved = false;
    for (int idx : shared_pairs)
      if (coin(rng)) {
        colors[idx] = shared + 1;
        moved = true;
      }
    if (!moved) colors[shared_pairs[pick(rng)]] = shared + 1;
    bool all_moved = true;
    for (int idx : shared_pairs) all_moved = all_moved && colors[idx] == shared + 1;
    if (all_moved) colors[shared_pairs.front()] = shared;
    probe.colors_used = shared + 2;
  }
  probe.coloring = EdgeColoring::from_pair_colors(n, probe.colors_used, colors);
  probe.witness = find_rainbow_fan(probe.coloring, FanSpec(spec.k + 1, spec.r));
  probe.rainbow_found = probe.witness.has_value();
  return probe;
}

}  // namespace fanar
