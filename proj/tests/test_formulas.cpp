#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fanar/detection.hpp"
#include "fanar/formulas.hpp"
#include "fanar/graph.hpp"
#include "support.hpp"

using namespace fanar;

TEST_CASE("turan_count") {
  CHECK(turan_count(9, 2) == 20);
  CHECK(turan_count(9, 1) == 0);
  CHECK(turan_count(7, 3) == 16);
  CHECK(turan_count(0, 3) == 0);
  CHECK(turan_count(3, 5) == 3);
  CHECK(turan_count(1000000, 2) == 250000000000LL);
  CHECK_THROWS_AS(turan_count(5, 0), std::invalid_argument);
}

TEST_CASE("f_bounded") {
  CHECK(f_bounded({1, 1}) == 1);
  CHECK(f_bounded({2, 3}) == 7);
  CHECK(f_bounded({3, 3}) == 10);
  CHECK(f_bounded({2, 2}) == 6);
  CHECK(f_bounded({1, 2}) == 3);
  CHECK(f_bounded({3, 2}) == 9);
  CHECK_THROWS_AS(BoundedPair(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(BoundedPair(1, 0), std::invalid_argument);

  for (int nu = 1; nu <= 10; ++nu)
    for (int d = 1; d <= 10; ++d) {
      auto v = f_bounded({nu, d});
      CHECK(v <= nu * d + nu);
      if (nu > 1) CHECK(f_bounded({nu - 1, d}) <= v);
      if (d > 1) CHECK(f_bounded({nu, d - 1}) <= v);
    }
}

TEST_CASE("parity identity") {
  CHECK(fan_embedded_edges(1) == 0);
  for (int k = 2; k <= 9; ++k) {
    std::int64_t expect = k % 2 == 1 ? k * k - k : k * k - 3 * k / 2;
    CHECK(f_bounded({k - 1, k - 1}) == expect);
    CHECK(fan_embedded_edges(k) == expect);
  }
}

TEST_CASE("ex_clique") {
  CHECK(ex_clique(9, 3).value == 20);
  CHECK(ex_clique(7, 3).value == 12);
  CHECK(ex_clique(10, 2).value == 0);
  auto e = ex_clique(11, 4);
  CHECK(e.value == turan_count(11, 3));
  CHECK(e.remainder == 2);
  // epsilon = l(r-1-l) / (2(r-1)) = 2/6
  CHECK(e.epsilon_numerator * 6 == 2 * e.epsilon_denominator);
  CHECK_THROWS_AS(ex_clique(5, 1), std::invalid_argument);
}

TEST_CASE("ex_fan and ar_fan") {
  CHECK(ex_fan(10, FanSpec(1, 3)).value == 25);
  auto v = ex_fan(9, FanSpec(2, 3));
  CHECK(v.value == 21);
  CHECK(v.parity_branch == Parity::kEven);
  CHECK(v.below_threshold);
  auto w = ex_fan(9, FanSpec(3, 4));
  CHECK(w.value == 33);
  CHECK(w.parity_branch == Parity::kOdd);
  CHECK(w.threshold == 16LL * 27 * 65536);
  CHECK_FALSE(ex_fan(w.threshold, FanSpec(3, 4)).below_threshold);
  CHECK(ex_fan(w.threshold - 1, FanSpec(3, 4)).below_threshold);
  CHECK_THROWS_AS(ex_fan(9, FanSpec(2, 2)), std::invalid_argument);

  CHECK(ar_fan(10, 2, 3).value == 27);
  CHECK(ar_fan(9, 3, 3).value == 23);
  CHECK(ar_fan(9, 4, 4).value == 35);
  CHECK(ar_fan(9, 4, 4).below_threshold);
  CHECK(anti_ramsey_threshold(2, 3) == 256LL * 32 * 43046721);
  CHECK(anti_ramsey_threshold(10, 20) == INT64_MAX);
  CHECK_THROWS_AS(ar_fan(9, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(ar_fan(9, 2, 2), std::invalid_argument);
}

TEST_CASE("turan_decrement") {
  CHECK(turan_decrement(9, 3) == 4);
  CHECK(turan_decrement(2, 3) == 1);
  CHECK(turan_decrement(7, 2) == 0);
  for (int n = 1; n <= 60; ++n)
    for (int r = 3; r <= 7; ++r) {
      // Adding a vertex to a smallest part: degree n - ceil(n/(r-1)) = floor((r-2)n/(r-1)).
      CHECK(turan_decrement(n, r) == (r - 2) * n / (r - 1));
    }
}

TEST_CASE("vertex removal keeps the excess") {
  // e(G) >= ex(n,K_r) + c and d(x) <= (r-2)n/(r-1) - (k+1) force
  // e(G - x) >= ex(n-1,K_r) + c + (k+1).
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> density(0.3, 0.95);
  int exercised = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    int n = 4 + trial % 7;
    int r = 3 + trial % 3;
    int k = trial % 3;
    Graph g = testing::random_graph(n, density(rng), rng);
    std::int64_t c = g.edge_count() - ex_clique(n, r).value;
    for (int x = 0; x < n; ++x) {
      // d(x) <= ((r-2)/(r-1)) n - (k+1), exactly
      if ((r - 1) * (g.degree(x) + k + 1) > (r - 2) * n) continue;
      ++exercised;
      CHECK(g.edge_count() - g.degree(x) >= ex_clique(n - 1, r).value + c + (k + 1));
    }
  }
  CHECK(exercised > 100);
}

TEST_CASE("construct_bounded_max") {
  Graph tri = construct_bounded_max({1, 2});
  CHECK(tri == complete(3));
  Graph two_tri = construct_bounded_max({2, 2});
  CHECK(two_tri.edge_count() == 6);
  CHECK(without_isolated(two_tri) == disjoint_union(complete(3), complete(3)));
  CHECK(construct_bounded_max({1, 1}) == complete(2));

  for (int nu = 1; nu <= 8; ++nu)
    for (int d = 1; d <= 8; ++d) {
      Graph g = construct_bounded_max({nu, d});
      CAPTURE(nu);
      CAPTURE(d);
      CHECK(g.edge_count() == f_bounded({nu, d}));
      CHECK(max_degree(g) <= d);
      CHECK(matching_number(g) <= nu);
    }
}

TEST_CASE("extremal fan-free construction") {
  Graph k55 = construct_extremal_fan_free(10, FanSpec(1, 3));
  CHECK(k55 == turan(10, 2));
  CHECK(k55.edge_count() == 25);

  Graph g = construct_extremal_fan_free(9, FanSpec(2, 3));
  CHECK(g.edge_count() == 21);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(find_fan(g, FanSpec(2, 3)).has_value());

  Graph h = construct_extremal_fan_free(12, FanSpec(2, 4));
  CHECK(h.edge_count() == 49);
  CHECK_FALSE(find_fan(h, FanSpec(2, 4)).has_value());

  CHECK(fan_embedded_order(1) == 0);
  CHECK(fan_embedded_order(2) == 2);
  CHECK(fan_embedded_order(3) == 6);  // 2K_3
  CHECK(fan_embedded_order(6) == 11);
  CHECK_FALSE(extremal_construction_fits(9, FanSpec(6, 3)));
  CHECK_THROWS_AS(construct_extremal_fan_free(9, FanSpec(6, 3)), std::invalid_argument);
  CHECK_THROWS_AS(construct_extremal_fan_free(9, FanSpec(2, 2)), std::invalid_argument);

  for (int k = 1; k <= 6; ++k)
    for (int r = 3; r <= 6; ++r)
      for (int n = 3 * r; n <= 120; n += 7) {
        if (!extremal_construction_fits(n, FanSpec(k, r))) continue;
        CHECK(construct_extremal_fan_free(n, FanSpec(k, r)).edge_count() == ex_fan(n, FanSpec(k, r)).value);
      }
}
