#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "fanar/graph.hpp"
#include "fanar/partition.hpp"

namespace fanar::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline int degree_sum(const Graph& g) {
  int s = 0;
  for (int v = 0; v < g.size(); ++v) s += g.degree(v);
  return s;
}

// Complete multipartite graph on consecutive classes of the given sizes, with
// random cross deletions such that no vertex misses more than b vertices of
// any other class, and random edges inside classes with probability p_inner.
struct MultipartiteInstance {
  Graph g;
  std::vector<VertexSet> classes;
};

inline MultipartiteInstance deficient_multipartite(const std::vector<int>& sizes, int b, double p_inner,
                                                   std::mt19937_64& rng) {
  MultipartiteInstance out;
  int n = 0;
  std::vector<int> owner;
  for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
    out.classes.push_back(VertexSet::range(n, n + sizes[i]));
    for (int j = 0; j < sizes[i]; ++j) owner.push_back(i);
    n += sizes[i];
  }
  out.g = Graph(n);
  std::bernoulli_distribution inner(p_inner);
  std::vector<Edge> cross;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (owner[u] != owner[v]) {
        out.g.add_edge(u, v);
        cross.push_back({u, v});
      } else if (inner(rng)) {
        out.g.add_edge(u, v);
      }
    }
  std::shuffle(cross.begin(), cross.end(), rng);
  const int m = static_cast<int>(sizes.size());
  std::vector<int> missing(static_cast<std::size_t>(n * m), 0);
  std::bernoulli_distribution drop(0.5);
  for (const auto& e : cross) {
    int& mu = missing[e.u * m + owner[e.v]];
    int& mv = missing[e.v * m + owner[e.u]];
    if (mu < b && mv < b && drop(rng)) {
      out.g.remove_edge(e.u, e.v);
      ++mu;
      ++mv;
    }
  }
  return out;
}

// A random clique with at most two vertices in any class and at most one
// class holding two.
inline VertexSet random_seed(const Graph& g, const std::vector<VertexSet>& classes, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  VertexSet seed;
  bool doubled = false;
  for (const auto& cls : classes) {
    if (!coin(rng)) continue;
    int want = (!doubled && coin(rng)) ? 2 : 1;
    for (int taken = 0; taken < want; ++taken) {
      VertexSet pool = cls - seed;
      for (int v : seed) pool &= g.neighbors(v);
      std::vector<int> options = pool.members();
      if (options.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      seed.insert(options[pick(rng)]);
      if (taken == 1) doubled = true;
    }
  }
  return seed;
}

}  // namespace fanar::testing
