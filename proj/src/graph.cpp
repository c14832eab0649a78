#include "fanar/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "fanar/error.hpp"

namespace fanar {

FanSpec::FanSpec(int k, int r) : k(k), r(r) {
  if (k < 1) throw std::invalid_argument("fan needs k >= 1");
  if (r < 2) throw std::invalid_argument("fan needs r >= 2");
}

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) throw CapacityError("graph exceeds " + std::to_string(kMaxVertices) + " vertices");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (rows_[u].contains(v)) return;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!rows_[u].contains(v)) return;
  rows_[u].erase(v);
  rows_[v].erase(u);
  --m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) out.push_back({u, v});
  return out;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

std::vector<VertexSet> turan_parts(int n, int p) {
  if (p < 1) throw std::invalid_argument("turan graph needs p >= 1");
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) throw CapacityError("graph exceeds capacity");
  std::vector<VertexSet> parts;
  int parts_used = std::min(n, p);
  if (parts_used == 0) return parts;
  int base = n / parts_used;
  int extra = n % parts_used;
  int start = 0;
  for (int i = 0; i < parts_used; ++i) {
    int size = base + (i < extra ? 1 : 0);
    parts.push_back(VertexSet::range(start, start + size));
    start += size;
  }
  return parts;
}

Graph turan(int n, int p) {
  auto parts = turan_parts(n, p);
  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    for (int v : parts[i]) part_of[v] = i;
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph fan(const FanSpec& spec) {
  Graph g(spec.vertex_count());
  for (int i = 0; i < spec.k; ++i) {
    std::vector<int> clique{0};
    for (int j = 0; j < spec.r - 1; ++j) clique.push_back(1 + i * (spec.r - 1) + j);
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) g.add_edge(clique[a], clique[b]);
  }
  return g;
}

Graph embed_in_part(const Graph& host, const VertexSet& part, const Graph& pattern) {
  if (!part.within(host.size())) throw std::out_of_range("part has vertices outside the host");
  if (pattern.size() > part.size()) throw std::invalid_argument("pattern does not fit in the part");
  for (int v : part)
    if (host.neighbors(v).intersects(part)) throw std::invalid_argument("part is not independent in host");
  auto slots = part.members();
  Graph out = host;
  for (const auto& e : pattern.edges()) out.add_edge(slots[e.u], slots[e.v]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.size() + b.size());
  for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) g.add_edge(a.size() + e.u, a.size() + e.v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < b.size(); ++v) g.add_edge(u, a.size() + v);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (!keep.within(g.size())) throw std::out_of_range("vertex set outside the graph");
  auto back = keep.members();
  std::vector<int> fwd(static_cast<std::size_t>(g.size()), -1);
  for (int i = 0; i < static_cast<int>(back.size()); ++i) fwd[back[i]] = i;
  Graph h(static_cast<int>(back.size()));
  for (int i = 0; i < static_cast<int>(back.size()); ++i)
    for (int w : g.neighbors(back[i]) & keep)
      if (fwd[w] > i) h.add_edge(i, fwd[w]);
  return {std::move(h), std::move(back)};
}

std::pair<Graph, std::vector<int>> neighborhood_subgraph(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) throw std::out_of_range("vertex index out of range");
  return induced_subgraph(g, g.neighbors(v));
}

Graph without_isolated(const Graph& g) {
  VertexSet keep;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) > 0) keep.insert(v);
  return induced_subgraph(g, keep).first;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.size(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.size() == 0) return 0;
  int best = g.size();
  for (int v = 0; v < g.size(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int edges_within(const Graph& g, const VertexSet& s) {
  int twice = 0;
  for (int v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

namespace {

// Edmonds' algorithm with explicit blossom contraction via base[].
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.size()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  int run() {
    // Greedy start; augmenting phase fixes the rest.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : g_.neighbors(v)) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_path(root);
      while (v != -1) {
        int pv = parent_[v];
        int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    int size = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) ++size;
    return size;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

int exhaustive_matching(const Graph& g, VertexSet remaining) {
  int v = remaining.first();
  if (v == -1) return 0;
  remaining.erase(v);
  int best = exhaustive_matching(g, remaining);
  for (int w : g.neighbors(v) & remaining) {
    VertexSet rest = remaining;
    rest.erase(w);
    best = std::max(best, 1 + exhaustive_matching(g, rest));
  }
  return best;
}

}  // namespace

int matching_number(const Graph& g) { return BlossomMatcher(g).run(); }

int matching_number_exhaustive(const Graph& g) {
  if (g.size() > 12) throw std::invalid_argument("exhaustive matching is limited to 12 vertices");
  return exhaustive_matching(g, g.vertices());
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

namespace {

// Next non-comment, non-blank line; false at EOF.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void format_error(int line_no, const std::string& what) {
  throw FormatError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) format_error(line_no, "missing header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) format_error(line_no, "header must be 'n m'");
  }
  if (n < 0 || m < 0) format_error(line_no, "negative count in header");
  if (n > kMaxVertices) throw CapacityError("graph exceeds " + std::to_string(kMaxVertices) + " vertices");
  if (m > n * (n - 1) / 2) format_error(line_no, "more edges than vertex pairs");
  Graph g(static_cast<int>(n));
  Edge prev{-1, -1};
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no)) format_error(line_no, "expected " + std::to_string(m) + " edges");
    std::istringstream ls(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) format_error(line_no, "edge line must be 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) format_error(line_no, "vertex index out of range");
    if (u == v) format_error(line_no, "self-loop");
    if (u > v) format_error(line_no, "edge endpoints must satisfy u < v");
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (e == prev) format_error(line_no, "duplicate edge");
    if (e < prev) format_error(line_no, "edges must be in ascending lexicographic order");
    g.add_edge(e.u, e.v);
    prev = e;
  }
  if (next_data_line(in, line, line_no)) format_error(line_no, "trailing data after edge list");
  return g;
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

}  // namespace fanar
