#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanar/vertex_set.hpp"

namespace fanar {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

// (k, r) identifies the fan F_{k,r}: k cliques of r vertices meeting in one
// common center.
struct FanSpec {
  int k = 1;
  int r = 2;

  FanSpec() = default;
  FanSpec(int k, int r);

  int vertex_count() const { return k * (r - 1) + 1; }
  int edge_count() const { return k * r * (r - 1) / 2; }
  bool operator==(const FanSpec&) const = default;
};

// Dense undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int size() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(0, n_); }

  // Edges (u < v) in ascending lexicographic order.
  std::vector<Edge> edges() const;

  // Both are no-ops when the edge is already present / absent.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
};

// ---- constructors -------------------------------------------------------

Graph complete(int n);
Graph empty_graph(int n);
Graph cycle(int n);
Graph star(int leaves);

// Complete p-partite graph with balanced parts. The first n mod p parts get
// ceil(n/p) vertices; parts are contiguous index ranges. p > n yields K_n.
Graph turan(int n, int p);
std::vector<VertexSet> turan_parts(int n, int p);

// F_{k,r}: vertex 0 is the center; clique i occupies 1+i(r-1) .. (i+1)(r-1).
Graph fan(const FanSpec& spec);

// Copies pattern's edges onto the first |pattern| members of part.
// part must be independent in host.
Graph embed_in_part(const Graph& host, const VertexSet& part, const Graph& pattern);

Graph disjoint_union(const Graph& a, const Graph& b);
// a + b with every vertex of a joined to every vertex of b.
Graph join(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

// Subgraph induced on `keep`, relabelled in ascending order. The second
// member maps new indices back to the original ones.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);
std::pair<Graph, std::vector<int>> neighborhood_subgraph(const Graph& g, int v);

// Drops isolated vertices and relabels the rest in ascending order.
Graph without_isolated(const Graph& g);

// ---- queries -------------------------------------------------------------

int max_degree(const Graph& g);
int min_degree(const Graph& g);
int edges_within(const Graph& g, const VertexSet& s);

// Exact matching number (Edmonds' blossom algorithm).
int matching_number(const Graph& g);
// Exhaustive enumeration of matchings; n <= 12 only.
int matching_number_exhaustive(const Graph& g);

// ---- text format ---------------------------------------------------------
//
//   n m
//   u v      (m lines, u < v, ascending lexicographic order)
//
// Lines starting with '#' are comments.

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
std::string to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

}  // namespace fanar
