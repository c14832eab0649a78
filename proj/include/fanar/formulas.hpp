#pragma once

#include <cstdint>
#include <vector>

#include "fanar/graph.hpp"

namespace fanar {

// Bounds for f(nu, Delta): the most edges a graph can have with matching
// number <= nu and maximum degree <= Delta.
struct BoundedPair {
  int nu = 1;
  int delta = 1;

  BoundedPair() = default;
  BoundedPair(int nu, int delta);
};

enum class Parity { kOdd, kEven };

struct ExtremalValue {
  std::int64_t value = 0;
  Parity parity_branch = Parity::kOdd;
  // n is below the range where the closed form is proven; the value is then
  // an extrapolation (still attained by the explicit construction).
  bool below_threshold = false;
  // Saturates at INT64_MAX.
  std::int64_t threshold = 0;
};

// Turán number of K_r with the rounding term exposed:
//   value = (r-2)/(2(r-1)) * n^2 - epsilon,
//   epsilon = l(r-1-l) / (2(r-1)),  l = n mod (r-1).
struct CliqueExtremal {
  std::int64_t value = 0;
  int remainder = 0;
  std::int64_t epsilon_numerator = 0;
  std::int64_t epsilon_denominator = 1;
};

// Edge count of T_{n,p}.
std::int64_t turan_count(std::int64_t n, int p);

// Chvatal-Hanson closed form. Throws std::logic_error if the value breaks
// the nu*Delta + nu ceiling.
std::int64_t f_bounded(const BoundedPair& p);

// f(k-1, k-1), with the k = 1 case (nothing embedded) giving 0.
std::int64_t fan_embedded_edges(int k);

CliqueExtremal ex_clique(std::int64_t n, int r);

// ex(n, F_{k,r}) for r >= 3.
ExtremalValue ex_fan(std::int64_t n, const FanSpec& spec);

// ar(n, F_{kplus1,r}) = ex(n, F_{kplus1-1,r}) + 2 for kplus1 >= 2, r >= 3.
ExtremalValue ar_fan(std::int64_t n, int kplus1, int r);

std::int64_t fan_free_threshold(const FanSpec& spec);
std::int64_t anti_ramsey_threshold(int kplus1, int r);

// ex(n, K_r) - ex(n-1, K_r).
std::int64_t turan_decrement(std::int64_t n, int r);

// A graph with nu(G) <= nu, Delta(G) <= Delta and exactly f(nu, Delta) edges,
// without isolated vertices. Built from near-regular odd blocks and stars;
// the result is re-verified before it is returned.
Graph construct_bounded_max(const BoundedPair& p);

// Vertex count of construct_bounded_max(k-1, k-1), 0 when k = 1.
int fan_embedded_order(int k);

// T_{n,r-1} with an f(k-1,k-1)-extremal graph placed in its first (largest)
// part. Requires r >= 3.
Graph construct_extremal_fan_free(int n, const FanSpec& spec);
bool extremal_construction_fits(int n, const FanSpec& spec);
// The Turán parts the construction is built on; class 0 hosts the embedding.
std::vector<VertexSet> extremal_partition(int n, const FanSpec& spec);

}  // namespace fanar
