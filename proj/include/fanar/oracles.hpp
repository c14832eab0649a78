#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "fanar/detection.hpp"
#include "fanar/formulas.hpp"
#include "fanar/graph.hpp"

namespace fanar {

struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
  // Informational only; the node cap is what stops a search.
  double time_hint_seconds = 60.0;
};

// The excluded subgraph for brute_force_ex: a clique K_r or a fan F_{k,r}.
class Forbidden {
 public:
  static Forbidden clique(int r);
  static Forbidden fan(const FanSpec& spec);

  bool found_in(const Graph& g) const;
  std::string describe() const;
  bool is_clique() const { return clique_size_ > 0; }
  int clique_size() const { return clique_size_; }
  const FanSpec& fan_spec() const { return spec_; }

 private:
  Forbidden() = default;
  int clique_size_ = 0;
  FanSpec spec_;
};

struct OracleResult {
  std::int64_t value = 0;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
  std::optional<Graph> witness_graph;
  std::optional<EdgeColoring> witness_coloring;
};

// Exact ex(n, F). Plain enumeration of all 2^C(n,2) graphs for n <= 7,
// edge-by-edge branch and bound for n = 8, 9.
OracleResult brute_force_ex(int n, const Forbidden& forbidden, SearchBudget budget = {});

// Exact f(nu, Delta) for nu, Delta <= 3. Fixes a maximum matching M on a
// core of 2s vertices (s <= nu); every other vertex is an independent
// attachment described by its neighbor set in the core. By Berge's lemma the
// graph keeps nu = s iff no two attachments are joined by an M-alternating
// path, so the search runs over core edge sets and conflict-free multisets of
// attachment types.
OracleResult brute_force_f(const BoundedPair& p, SearchBudget budget = {});

// Exact ar(n, F_{k,r}) = (max colors of an exact rainbow-F-free coloring of
// K_n) + 1, enumerating set partitions of E(K_n) as restricted growth
// strings. n <= 5 visits every partition; n = 6 prunes on the best count so
// far and on rainbow copies among already-colored edges.
OracleResult brute_force_ar(int n, const FanSpec& spec, SearchBudget budget = {});

// Same maximum via all colorings E(K_n) -> [0, C(n,2)) with no canonical
// ordering. n <= 4; cross-check for the partition enumerator.
std::int64_t brute_force_ar_unpruned(int n, const FanSpec& spec);

// Witness side of brute_force_ar: the least (as a restricted growth string)
// exact coloring with ar - 1 colors and no rainbow F_{k,r}.
EdgeColoring max_rainbow_free_coloring(int n, const FanSpec& spec, SearchBudget budget = {});

// Calls visit(rgs) for every restricted growth string of length m, in
// lexicographic order. Returns the count (Bell(m)).
std::uint64_t for_each_set_partition(int m, const std::function<void(std::span<const int>)>& visit);

}  // namespace fanar
