#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fanar/graph.hpp"

namespace fanar {

// Total assignment of a color id in [0, num_colors) to every pair of K_n.
// Pairs are stored in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
class EdgeColoring {
 public:
  EdgeColoring() = default;
  // Every pair starts with color 0.
  EdgeColoring(int n, int num_colors);

  static EdgeColoring monochromatic(int n);
  static EdgeColoring all_distinct(int n);
  static EdgeColoring from_pair_colors(int n, int num_colors, std::vector<int> colors);

  int size() const { return n_; }
  int num_colors() const { return num_colors_; }
  int pair_count() const { return static_cast<int>(colors_.size()); }

  int color(int u, int v) const { return colors_[pair_index(u, v)]; }
  void set_color(int u, int v, int c);
  const std::vector<int>& pair_colors() const { return colors_; }

  // Every color id in [0, num_colors) is used at least once.
  bool is_exact() const;

  int pair_index(int u, int v) const;
  Edge pair_at(int index) const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  int n_ = 0;
  int num_colors_ = 0;
  std::vector<int> colors_;
};

// A center plus k cliques, each listing the center and r-1 further vertices.
// For rainbow witnesses, `colors` holds the colors of every fan edge, clique
// by clique, pairs in ascending order.
struct FanWitness {
  int center = -1;
  std::vector<VertexSet> cliques;
  std::vector<int> colors;
};

// Lexicographically least r-clique, if any.
std::optional<VertexSet> contains_clique(const Graph& g, int r);

// Exact F_{k,r} search. Centers are tried in ascending order; within a
// center the k cliques of G[N(v)] are chosen by backtracking in
// lexicographic order, so the first hit is the least witness.
std::optional<FanWitness> find_fan(const Graph& g, const FanSpec& spec);

// Exact rainbow F_{k,r} search over K_n, or over host's edges when given.
std::optional<FanWitness> find_rainbow_fan(const EdgeColoring& col, const FanSpec& spec);
std::optional<FanWitness> find_rainbow_fan(const EdgeColoring& col, const Graph& host, const FanSpec& spec);

// One edge per color class (the least one). Requires an exact coloring.
Graph representative_subgraph(const EdgeColoring& col);

// Exhaustive check over vertex subsets and groupings; n <= 10. Test oracle
// for find_fan.
bool naive_fan_check(const Graph& g, const FanSpec& spec);

bool is_valid_fan_witness(const Graph& g, const FanSpec& spec, const FanWitness& w);
bool is_valid_rainbow_witness(const EdgeColoring& col, const FanSpec& spec, const FanWitness& w);

// Coloring text format:
//   n c
//   u v color    (n(n-1)/2 lines, lexicographic pair order)
void write_coloring(std::ostream& out, const EdgeColoring& col);
EdgeColoring read_coloring(std::istream& in, bool require_exact = false);
std::string to_text(const EdgeColoring& col);
EdgeColoring coloring_from_text(const std::string& text, bool require_exact = false);

}  // namespace fanar
