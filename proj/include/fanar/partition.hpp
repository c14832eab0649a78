#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fanar/graph.hpp"

namespace fanar {

// Ordered, disjoint classes covering V(G). Class 0 plays the distinguished
// role where one exists (the part hosting embedded edges, Y_0, ...).
struct PartitionClasses {
  std::vector<VertexSet> classes;

  int size() const { return static_cast<int>(classes.size()); }
  // Disjoint, covering 0..n-1, every member below n.
  bool is_partition_of(int n) const;
};

struct DeficitReport {
  std::int64_t inner_edges = 0;    // sum of e(G[V_i])
  std::int64_t cross_missing = 0;  // sum |V_i||V_j| - e(G_cr)
  std::int64_t deficit = 0;        // inner_edges - cross_missing
  std::int64_t bound = 0;          // f(k, k)
};

struct PartitionProperties {
  bool sizes = false;             // (i)  |V_i| >= n/(r-1) - (k+1)(2r-3)
  bool inner_matchings = false;   // (ii) sum_{j!=i} nu(G[V_j]) <= k and Delta(G[V_i]) <= k
  bool neighborhoods = false;     // (iii) d_{G[V_i]}(x) + sum_{j!=i} nu(G[N(x) cap V_j]) <= k
  bool all() const { return sizes && inner_matchings && neighborhoods; }
};

struct PeelResult {
  Graph remaining;                // relabelled in ascending order of the kept vertices
  std::vector<int> kept;          // original index of each remaining vertex
  std::vector<int> removed;       // original indices in removal order
  int steps() const { return static_cast<int>(removed.size()); }
};

// Every x in `x` has at least |y| - b neighbors in `y`. Sets must be disjoint.
bool dominates_with_deficiency(const Graph& g, const VertexSet& x, const VertexSet& y, int b);

// Every ordered pair of distinct classes dominates with b-deficiency.
bool is_deficiency_complete(const Graph& g, const std::vector<VertexSet>& classes, int b);

// Greedy clique extension over a b-deficiency complete partition
// {X_1..X_m}. Each seed C_i must be a clique with |C_i cap X_j| <= 2 for all
// j and equality for at most one j; every part needs |X_j| >= m*b + 2t.
// Returns D_i with C_i subset D_i, the sets D_i - C_i pairwise disjoint, and
// |D_i cap X_j| = 1 except where C_i already had 2. Seeds are handled in
// order; each missing part gets the least vertex adjacent to all current
// members and unused by other extensions.
std::vector<VertexSet> extend_cliques(const Graph& g, const PartitionClasses& parts,
                                      const std::vector<VertexSet>& seeds, int b);

// k vertex-disjoint cliques with one vertex in each of Y_1..Y_m, where
// classes = {Y_1, ..., Y_m} (with_y0 = false) or {Y_0, Y_1, ..., Y_m}
// (with_y0 = true, adding one vertex of Y_0 to every clique).
// Requires |Y_i| >= (i-1)b + k, |Y_0| >= m*b + k, and pairwise b-deficiency
// domination among the classes involved.
std::vector<VertexSet> build_disjoint_cliques(const Graph& g, const std::vector<VertexSet>& classes, int b, int k,
                                              bool with_y0);

// Structural checks for the two procedures above.
bool extension_postconditions_hold(const Graph& g, const PartitionClasses& parts,
                                   const std::vector<VertexSet>& seeds, const std::vector<VertexSet>& extended);
bool disjoint_cliques_postconditions_hold(const Graph& g, const std::vector<VertexSet>& classes, int k,
                                          const std::vector<VertexSet>& cliques);

DeficitReport edgelow_deficit(const Graph& g, const PartitionClasses& parts, int k);

// Conclusions (i)-(iii) for a partition into r-1 classes (r = classes + 1).
// The size bound is checked exactly via (r-1)|V_i| >= n - (r-1)(k+1)(2r-3).
PartitionProperties verify_partition_properties(const Graph& g, const PartitionClasses& parts, int k);

// Repeatedly deletes a minimum-degree vertex (least index on ties) while
// delta(G^t) <= ((r-2)/(r-1))(n-t) - (k+1).
PeelResult degenerate_peel(const Graph& g, int k, int r);

// Local search assigning each vertex to the class where it has the fewest
// neighbors. Deterministic; no optimality claim.
PartitionClasses heuristic_partition(const Graph& g, int classes);

// One line per class, space-separated vertex indices.
void write_partition(std::ostream& out, const PartitionClasses& parts);
PartitionClasses read_partition(std::istream& in, int n);
std::string to_text(const PartitionClasses& parts);
PartitionClasses partition_from_text(const std::string& text, int n);

}  // namespace fanar
