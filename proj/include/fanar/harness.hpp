#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fanar/detection.hpp"
#include "fanar/formulas.hpp"
#include "fanar/partition.hpp"

namespace fanar {

struct VerificationReport {
  int n = 0;
  int kplus1 = 0;
  int r = 0;
  std::int64_t colors_used = 0;
  std::int64_t construction_edge_count = 0;
  std::int64_t formula_value = 0;  // ex(n, F_{k,r})
  bool fan_free = false;           // host has no F_{k,r}
  bool rainbow_free = false;       // coloring has no rainbow F_{k+1,r}
  bool colors_match = false;       // colors_used == formula_value + 1
  bool below_threshold = false;
  double elapsed_seconds = 0.0;
  // Set when fan_free or rainbow_free fails.
  std::optional<FanWitness> failing_witness;

  bool passed() const { return fan_free && rainbow_free && colors_match; }
};

struct GridCell {
  int n = 0;
  int k = 0;
  int r = 0;
  std::int64_t construction_edges = 0;
  std::int64_t formula_value = 0;
  DeficitReport deficit;
  bool identity_holds = false;  // construction_edges == formula_value
  bool deficit_holds = false;   // deficit == f(k-1,k-1) and deficit <= f(k,k)

  bool passed() const { return identity_holds && deficit_holds; }
};

struct Range {
  int lo = 0;
  int hi = -1;  // inclusive; hi < lo is empty
};

// Rainbow-free exact coloring of K_n with ex(n, F_{k,r}) + 1 colors: the
// edges of the extremal F_{k,r}-free graph get distinct colors in
// lexicographic order, every other pair shares the last color.
EdgeColoring lower_bound_coloring(int n, const FanSpec& spec);

// Builds lower_bound_coloring(n, (kplus1-1, r)) and checks it certifies
// ar(n, F_{kplus1,r}) >= ex(n, F_{kplus1-1,r}) + 2 at this n.
VerificationReport verify_lower_bound(int n, int kplus1, int r);

// Construction/formula identity and deficit checks for every (k, r, n) in
// the ranges whose construction fits (r < 3 and non-fitting cells are
// skipped).
std::vector<GridCell> verify_formula_grid(Range k, Range r, Range n);

// Splits the shared color of lower_bound_coloring into two classes at random
// and reruns the rainbow detector for F_{k+1,r}. Observational only.
struct SplitProbe {
  EdgeColoring coloring;
  int colors_used = 0;
  bool rainbow_found = false;
  std::optional<FanWitness> witness;
};
SplitProbe probe_split_extra_color(int n, const FanSpec& spec, std::mt19937_64& rng);

}  // namespace fanar
