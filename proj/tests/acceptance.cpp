// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fanar/detection.hpp"
#include "fanar/formulas.hpp"
#include "fanar/harness.hpp"
#include "fanar/oracles.hpp"
#include "fanar/partition.hpp"
#include "support.hpp"

using namespace fanar;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs < limit_seconds;
  bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %d %s: %s [%.2fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL", id, name, out.detail.c_str(), secs,
              limit_seconds, in_time ? "" : ", OVER TIME");
  std::fflush(stdout);
}

Outcome identity_grid() {
  int cells = 0, skipped = 0, bad = 0;
  std::ostringstream first_bad;
  for (int k = 1; k <= 6; ++k)
    for (int r = 3; r <= 6; ++r)
      for (int n = 3 * r; n <= 120; ++n) {
        FanSpec spec(k, r);
        if (!extremal_construction_fits(n, spec)) {
          ++skipped;
          continue;
        }
        ++cells;
        auto e = construct_extremal_fan_free(n, spec).edge_count();
        auto v = ex_fan(n, spec).value;
        if (e != v && bad++ == 0) first_bad << " first mismatch n=" << n << " k=" << k << " r=" << r;
      }
  std::ostringstream d;
  d << cells << " cells equal, " << bad << " mismatches, " << skipped << " cells skipped (host part too small)"
    << first_bad.str();
  return {bad == 0 && cells > 0, d.str()};
}

Outcome turan_oracle() {
  std::ostringstream d;
  bool ok = true;
  for (int n = 2; n <= 7; ++n) {
    auto v = brute_force_ex(n, Forbidden::clique(3)).value;
    d << "ex(" << n << ",K_3)=" << v << (n < 7 ? " " : "");
    ok = ok && v == n * n / 4;
  }
  return {ok, d.str()};
}

Outcome bounded_oracle() {
  std::ostringstream d;
  bool ok = true;
  for (int nu = 1; nu <= 3; ++nu)
    for (int delta = 1; delta <= 3; ++delta) {
      auto v = brute_force_f({nu, delta}).value;
      auto f = f_bounded({nu, delta});
      ok = ok && v == f;
      d << "f(" << nu << "," << delta << ")=" << v << (v == f ? "" : "!") << ' ';
    }
  return {ok, d.str()};
}

Outcome lower_bound_certificates() {
  int cells = 0, bad = 0;
  std::ostringstream first_bad;
  for (int kplus1 = 2; kplus1 <= 3; ++kplus1)
    for (int r = 3; r <= 4; ++r)
      for (int n = (kplus1 - 1) * (r - 1) + r; n <= 13; ++n) {
        ++cells;
        auto rep = verify_lower_bound(n, kplus1, r);
        bool ok = rep.passed() && rep.colors_used == ex_fan(n, FanSpec(kplus1 - 1, r)).value + 1;
        if (!ok && bad++ == 0)
          first_bad << " first failure n=" << n << " k+1=" << kplus1 << " r=" << r << " fan_free=" << rep.fan_free
                    << " rainbow_free=" << rep.rainbow_free << " colors=" << rep.colors_used;
      }
  std::ostringstream d;
  d << cells << " cells certified, " << bad << " failures" << first_bad.str();
  return {bad == 0 && cells > 0, d.str()};
}

Outcome tiny_anti_ramsey() {
  // The two-edge star K_{1,2} is F_{2,2}; its value is ex(n, F_{1,2}) + 2 = 0 + 2.
  std::ostringstream d;
  bool ok = true;
  for (int n = 3; n <= 5; ++n) {
    auto v = brute_force_ar(n, FanSpec(2, 2)).value;
    ok = ok && v == 2;
    d << "ar(" << n << ",K_{1,2})=" << v << ' ';
  }
  d << "| single edge F_{1,2}:";
  for (int n = 3; n <= 5; ++n) d << ' ' << brute_force_ar(n, FanSpec(1, 2)).value;
  return {ok, d.str()};
}

Outcome detector_equivalence() {
  std::vector<FanSpec> specs;
  for (int k = 1; k <= 4; ++k)
    for (int r = 2; r <= 5; ++r)
      if (FanSpec(k, r).vertex_count() <= 9) specs.emplace_back(k, r);

  std::vector<Graph> corpus;
  std::mt19937_64 rng(20241016);
  std::uniform_int_distribution<int> order(1, 9);
  std::uniform_real_distribution<double> density(0.15, 0.95);
  for (int i = 0; i < 300; ++i) corpus.push_back(testing::random_graph(order(rng), density(rng), rng));
  const int random_count = static_cast<int>(corpus.size());
  for (int n = 1; n <= 9; ++n) {
    corpus.push_back(complete(n));
    corpus.push_back(empty_graph(n));
    if (n >= 3) corpus.push_back(cycle(n));
    corpus.push_back(star(n - 1));
    for (int p = 1; p <= n; ++p) corpus.push_back(turan(n, p));
  }
  for (const auto& s : specs) corpus.push_back(fan(s));
  for (int k = 1; k <= 3; ++k)
    for (int r = 3; r <= 4; ++r)
      for (int n = 3; n <= 9; ++n)
        if (extremal_construction_fits(n, FanSpec(k, r))) corpus.push_back(construct_extremal_fan_free(n, FanSpec(k, r)));
  for (int p = 1; p <= 4; ++p) {
    auto bm = without_isolated(construct_bounded_max({p, 2}));
    if (bm.size() <= 9) corpus.push_back(bm);
  }

  int checks = 0, bad = 0, invalid = 0;
  for (const auto& g : corpus)
    for (const auto& s : specs) {
      ++checks;
      auto w = find_fan(g, s);
      if (w.has_value() != naive_fan_check(g, s)) ++bad;
      if (w && !is_valid_fan_witness(g, s, *w)) ++invalid;
    }
  std::ostringstream d;
  d << random_count << " random + " << corpus.size() - random_count << " constructed graphs x " << specs.size()
    << " fans = " << checks << " checks, " << bad << " disagreements, " << invalid << " invalid witnesses";
  return {bad == 0 && invalid == 0, d.str()};
}

Outcome greedy_extensions() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> parts_dist(2, 4), b_dist(0, 2), t_dist(1, 3), slack(0, 2);
  std::bernoulli_distribution coin(0.5);
  int ext_ok = 0, ext_total = 0, dis_ok = 0, dis_total = 0;
  std::string first_error;

  for (int i = 0; i < 100; ++i) {
    int m = parts_dist(rng), b = b_dist(rng), t = t_dist(rng);
    std::vector<int> sizes;
    for (int j = 0; j < m; ++j) sizes.push_back(m * b + 2 * t + slack(rng));
    auto inst = testing::deficient_multipartite(sizes, b, 0.3, rng);
    std::vector<VertexSet> seeds;
    for (int s = 0; s < t; ++s) seeds.push_back(testing::random_seed(inst.g, inst.classes, rng));
    PartitionClasses parts{inst.classes};
    ++ext_total;
    try {
      if (!is_deficiency_complete(inst.g, inst.classes, b)) throw std::logic_error("generator broke domination");
      auto d = extend_cliques(inst.g, parts, seeds, b);
      if (extension_postconditions_hold(inst.g, parts, seeds, d)) ++ext_ok;
    } catch (const std::exception& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }

  for (int i = 0; i < 100; ++i) {
    int m = parts_dist(rng), b = b_dist(rng), k = t_dist(rng) + 1;
    bool with_y0 = coin(rng);
    std::vector<int> sizes;
    if (with_y0) sizes.push_back(m * b + k + slack(rng));
    for (int j = 1; j <= m; ++j) sizes.push_back((j - 1) * b + k + slack(rng));
    auto inst = testing::deficient_multipartite(sizes, b, 0.3, rng);
    ++dis_total;
    try {
      if (!is_deficiency_complete(inst.g, inst.classes, b)) throw std::logic_error("generator broke domination");
      auto cliques = build_disjoint_cliques(inst.g, inst.classes, b, k, with_y0);
      if (disjoint_cliques_postconditions_hold(inst.g, inst.classes, k, cliques)) ++dis_ok;
    } catch (const std::exception& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  std::ostringstream d;
  d << "extension " << ext_ok << "/" << ext_total << ", disjoint cliques " << dis_ok << "/" << dis_total;
  if (!first_error.empty()) d << "; first error: " << first_error;
  return {ext_ok == ext_total && dis_ok == dis_total, d.str()};
}

Outcome deficit_bound() {
  std::mt19937_64 rng(8);
  int corpus = 0, tight = 0, violations = 0, rejected = 0;
  std::set<std::string> seen;
  for (int k = 1; k <= 3; ++k)
    for (int r = 3; r <= 5; ++r)
      for (int n = 2 * r; n <= 13; ++n) {
        FanSpec host(k + 1, r);  // graphs must be F_{k+1,r}-free
        if (!extremal_construction_fits(n, host)) continue;
        Graph base = construct_extremal_fan_free(n, host);
        PartitionClasses parts{extremal_partition(n, host)};
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int trial = 0; trial < 40; ++trial) {
          Graph g = base;
          // trial 0 is the construction itself; later trials edit random pairs
          for (int edit = 0; edit < 1 + trial % 8; ++edit) {
            int u = pick(rng), v = pick(rng);
            if (u == v) continue;
            if (g.adjacent(u, v))
              g.remove_edge(u, v);
            else if (edit % 3 == 0)
              g.add_edge(u, v);
            if (trial == 0) g = base;
          }
          if (!seen.insert(to_text(g)).second) continue;
          if (find_fan(g, host) || !verify_partition_properties(g, parts, k).all()) {
            ++rejected;
            continue;
          }
          ++corpus;
          auto rep = edgelow_deficit(g, parts, k);
          if (rep.deficit > rep.bound) ++violations;
          if (rep.deficit == rep.bound) ++tight;
        }
      }
  std::ostringstream d;
  d << corpus << " distinct qualifying graphs (" << rejected << " rejected), " << violations << " violations, " << tight
    << " tight";
  return {corpus >= 200 && violations == 0, d.str()};
}

}  // namespace

int main() {
  criterion(1, "construction edge count equals ex formula", 10, identity_grid);
  criterion(2, "triangle-free oracle matches floor(n^2/4)", 60, turan_oracle);
  criterion(3, "bounded-degree matching oracle matches f", 60, bounded_oracle);
  criterion(4, "lower-bound colorings are rainbow-fan-free", 120, lower_bound_certificates);
  criterion(5, "tiny anti-Ramsey values", 30, tiny_anti_ramsey);
  criterion(6, "fan detector equals naive search", 60, detector_equivalence);
  criterion(7, "greedy clique extension succeeds", 30, greedy_extensions);
  criterion(8, "deficit bound on fan-free corpus", 600, deficit_bound);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
