#include "fanar/formulas.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "fanar/error.hpp"

namespace fanar {

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::int64_t sat_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

// n limited so that n^2 fits comfortably in 64 bits.
void check_count(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > (std::int64_t{1} << 31)) throw std::invalid_argument("vertex count too large for exact arithmetic");
}

// Odd-order graph on `order` vertices with maximum degree delta and
// floor(order*delta/2) edges: circulant offsets 1..delta/2, plus a
// near-perfect matching of long chords when delta is odd.
Graph near_regular_block(int order, int delta) {
  if (order % 2 == 0 || delta > order - 1) throw std::logic_error("near_regular_block: bad shape");
  Graph g(order);
  for (int d = 1; d <= delta / 2; ++d)
    for (int i = 0; i < order; ++i) g.add_edge(i, (i + d) % order);
  if (delta % 2 == 1) {
    int half = (order - 1) / 2;
    for (int i = 0; i < half; ++i) g.add_edge(i, i + half);
  }
  return g;
}

}  // namespace

BoundedPair::BoundedPair(int nu, int delta) : nu(nu), delta(delta) {
  if (nu < 1 || delta < 1) throw std::invalid_argument("f(nu, Delta) needs nu >= 1 and Delta >= 1");
}

std::int64_t turan_count(std::int64_t n, int p) {
  if (p < 1) throw std::invalid_argument("turan count needs p >= 1");
  check_count(n);
  std::int64_t base = n / p;
  std::int64_t extra = n % p;
  std::int64_t inside = extra * choose2(base + 1) + (p - extra) * choose2(base);
  return choose2(n) - inside;
}

std::int64_t f_bounded(const BoundedPair& p) {
  std::int64_t nu = p.nu;
  std::int64_t delta = p.delta;
  std::int64_t half_up = (delta + 1) / 2;
  std::int64_t value = nu * delta + (delta / 2) * (nu / half_up);
  if (value > nu * delta + nu) throw std::logic_error("f(nu, Delta) exceeds nu*Delta + nu");
  return value;
}

std::int64_t fan_embedded_edges(int k) {
  if (k < 1) throw std::invalid_argument("fan needs k >= 1");
  if (k == 1) return 0;
  return f_bounded(BoundedPair(k - 1, k - 1));
}

CliqueExtremal ex_clique(std::int64_t n, int r) {
  if (r < 2) throw std::invalid_argument("clique size must be >= 2");
  check_count(n);
  CliqueExtremal out;
  out.value = turan_count(n, r - 1);
  out.remainder = static_cast<int>(n % (r - 1));
  out.epsilon_numerator = std::int64_t{out.remainder} * (r - 1 - out.remainder);
  out.epsilon_denominator = 2 * std::int64_t{r - 1};
  // 2(r-1) * value == (r-2) n^2 - l(r-1-l)
  __int128 lhs = static_cast<__int128>(out.epsilon_denominator) * out.value;
  __int128 rhs = static_cast<__int128>(r - 2) * n * n - out.epsilon_numerator;
  if (lhs != rhs) throw std::logic_error("Turán count disagrees with the epsilon identity");
  return out;
}

std::int64_t fan_free_threshold(const FanSpec& spec) {
  return sat_mul(16, sat_mul(sat_pow(spec.k, 3), sat_pow(spec.r, 8)));
}

std::int64_t anti_ramsey_threshold(int kplus1, int r) {
  return sat_mul(256, sat_mul(sat_pow(kplus1, 5), sat_pow(r, 16)));
}

ExtremalValue ex_fan(std::int64_t n, const FanSpec& spec) {
  if (spec.r < 3) throw std::invalid_argument("closed form for ex(n, F_{k,r}) needs r >= 3");
  std::int64_t k = spec.k;
  ExtremalValue out;
  out.parity_branch = k % 2 == 1 ? Parity::kOdd : Parity::kEven;
  std::int64_t bonus = out.parity_branch == Parity::kOdd ? k * k - k : k * k - 3 * k / 2;
  out.value = ex_clique(n, spec.r).value + bonus;
  out.threshold = fan_free_threshold(spec);
  out.below_threshold = n < out.threshold;
  return out;
}

ExtremalValue ar_fan(std::int64_t n, int kplus1, int r) {
  if (kplus1 < 2) throw std::invalid_argument("ar(n, F_{k+1,r}) needs k+1 >= 2");
  if (r < 3) throw std::invalid_argument("closed form for ar(n, F_{k+1,r}) needs r >= 3; use the oracle for r = 2");
  ExtremalValue out = ex_fan(n, FanSpec(kplus1 - 1, r));
  out.value += 2;
  out.threshold = anti_ramsey_threshold(kplus1, r);
  out.below_threshold = n < out.threshold;
  return out;
}

std::int64_t turan_decrement(std::int64_t n, int r) {
  if (n < 1) throw std::invalid_argument("turan_decrement needs n >= 1");
  return ex_clique(n, r).value - ex_clique(n - 1, r).value;
}

Graph construct_bounded_max(const BoundedPair& p) {
  const int nu = p.nu;
  const int delta = p.delta;
  const int half_up = (delta + 1) / 2;
  const int blocks = nu / half_up;

  Graph g;
  if (blocks == 1) {
    // One odd block of order 2nu+1 already reaches f; nu(G) <= nu by parity.
    g = near_regular_block(2 * nu + 1, delta);
  } else {
    int stars = nu - blocks * half_up;
    int order = blocks * (2 * half_up + 1) + stars * (delta + 1);
    if (order > kMaxVertices) throw CapacityError("f(nu, Delta) construction exceeds capacity");
    for (int i = 0; i < blocks; ++i) g = disjoint_union(g, near_regular_block(2 * half_up + 1, delta));
    for (int i = 0; i < stars; ++i) g = disjoint_union(g, star(delta));
  }
  g = without_isolated(g);

  if (g.edge_count() != f_bounded(p) || max_degree(g) > delta || matching_number(g) > nu)
    throw ExtensionFailure("bounded-max construction missed f(" + std::to_string(nu) + "," +
                           std::to_string(delta) + ")");
  return g;
}

int fan_embedded_order(int k) {
  if (k < 1) throw std::invalid_argument("fan needs k >= 1");
  if (k == 1) return 0;
  return construct_bounded_max(BoundedPair(k - 1, k - 1)).size();
}

std::vector<VertexSet> extremal_partition(int n, const FanSpec& spec) {
  if (spec.r < 3) throw std::invalid_argument("extremal construction needs r >= 3");
  return turan_parts(n, spec.r - 1);
}

bool extremal_construction_fits(int n, const FanSpec& spec) {
  if (spec.r < 3 || n < 0 || n > kMaxVertices) return false;
  int order = fan_embedded_order(spec.k);
  if (order == 0) return true;
  auto parts = turan_parts(n, spec.r - 1);
  return !parts.empty() && parts.front().size() >= order;
}

Graph construct_extremal_fan_free(int n, const FanSpec& spec) {
  auto parts = extremal_partition(n, spec);
  Graph host = turan(n, spec.r - 1);
  if (spec.k == 1) return host;
  Graph pattern = construct_bounded_max(BoundedPair(spec.k - 1, spec.k - 1));
  if (parts.empty() || parts.front().size() < pattern.size())
    throw std::invalid_argument("largest Turán part is too small for the embedded graph");
  return embed_in_part(host, parts.front(), pattern);
}

}  // namespace fanar
