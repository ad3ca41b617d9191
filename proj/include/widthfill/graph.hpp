#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace widthfill {

using edge = std::pair<vertex, vertex>;

/// Simple undirected graph on the vertices 1..n. Immutable once built;
/// "modifications" return new graphs.
class graph {
 public:
  graph() = default;

  /// Edgeless graph on n vertices.
  explicit graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {}

  /// Throws input_error on self-loops, duplicate edges or endpoints outside 1..n.
  graph(int n, std::span<const edge> edges) : graph(n) {
    for (auto [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw input_error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range 1.." +
                          std::to_string(n));
      if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
      if (adj_[u - 1].contains(v))
        throw input_error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      adj_[u - 1].insert(v);
      adj_[v - 1].insert(u);
      ++m_;
    }
  }
  graph(int n, std::initializer_list<edge> edges) : graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] int size() const noexcept { return m_; }
  [[nodiscard]] vertex_set vertices() const noexcept { return vertex_set::full(n_); }
  [[nodiscard]] vertex_set neighbors(vertex v) const { return adj_[v - 1]; }
  [[nodiscard]] int degree(vertex v) const { return adj_[v - 1].size(); }
  [[nodiscard]] bool has_edge(vertex u, vertex v) const { return adj_[u - 1].contains(v); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (vertex u = 1; u <= n_; ++u)
      for (vertex v : adj_[u - 1])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// This graph plus the given edges; edges already present are ignored.
  [[nodiscard]] graph with_edges(std::span<const edge> extra) const {
    graph out = *this;
    for (auto [u, v] : extra) {
      if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
        throw input_error("cannot add edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      if (!out.adj_[u - 1].contains(v)) {
        out.adj_[u - 1].insert(v);
        out.adj_[v - 1].insert(u);
        ++out.m_;
      }
    }
    return out;
  }

  /// Makes every set in `cliques` a clique.
  [[nodiscard]] graph with_cliques(std::span<const vertex_set> cliques) const {
    std::vector<edge> extra;
    for (vertex_set c : cliques)
      for (vertex u : c)
        for (vertex v : c)
          if (u < v) extra.emplace_back(u, v);
    return with_edges(extra);
  }

  friend bool operator==(const graph&, const graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > max_vertices)
      throw input_error("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    return n;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<vertex_set> adj_;
};

/// Induced subgraph with its vertices renumbered 1..|X|; `original[i-1]` is
/// the id in the parent graph of new vertex i (increasing order).
struct induced_graph {
  graph subgraph;
  std::vector<vertex> original;
};

inline induced_graph induced_subgraph(const graph& g, vertex_set x) {
  induced_graph out;
  out.original = x.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) local[out.original[i]] = static_cast<int>(i) + 1;
  std::vector<edge> edges;
  for (vertex u : x)
    for (vertex w : g.neighbors(u) & x)
      if (u < w) edges.emplace_back(local[u], local[w]);
  out.subgraph = graph(static_cast<int>(out.original.size()), edges);
  return out;
}

/// True iff E(small) is a subset of E(big). Both graphs must have the same order.
inline bool is_supergraph(const graph& big, const graph& small) {
  if (big.order() != small.order())
    throw argument_error("is_supergraph: vertex counts differ (" + std::to_string(big.order()) + " vs " +
                         std::to_string(small.order()) + ")");
  for (vertex v = 1; v <= small.order(); ++v)
    if (!small.neighbors(v).subset_of(big.neighbors(v))) return false;
  return true;
}

/// Number of vertices of `s` with a neighbour outside `s`.
inline int boundary(const graph& g, vertex_set s) {
  int count = 0;
  for (vertex u : s)
    if (!g.neighbors(u).subset_of(s)) ++count;
  return count;
}

/// Maximum cardinality search. Returns vertices in visit order; the reverse
/// is a perfect elimination ordering iff the graph is chordal.
inline std::vector<vertex> maximum_cardinality_search(const graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  vertex_set unvisited = g.vertices();
  while (!unvisited.empty()) {
    vertex best = unvisited.front();
    for (vertex v : unvisited)
      if (weight[v] > weight[best]) best = v;
    visit.push_back(best);
    unvisited.erase(best);
    for (vertex w : g.neighbors(best) & unvisited) ++weight[w];
  }
  return visit;
}

/// True iff `elimination` (first element eliminated first) is a perfect
/// elimination ordering: every vertex's later neighbours form a clique.
inline bool is_perfect_elimination_ordering(const graph& g, std::span<const vertex> elimination) {
  vertex_set remaining = g.vertices();
  for (vertex v : elimination) {
    remaining.erase(v);
    const vertex_set later = g.neighbors(v) & remaining;
    if (later.empty()) continue;
    // Only the earliest-eliminated later neighbour needs checking.
    vertex parent = 0;
    for (vertex w : elimination) {
      if (later.contains(w)) {
        parent = w;
        break;
      }
    }
    vertex_set rest = later;
    rest.erase(parent);
    if (!rest.subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

inline bool is_chordal(const graph& g) {
  std::vector<vertex> order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_ordering(g, order);
}

namespace detail {

inline void max_clique_search(const graph& g, vertex_set current, vertex_set candidates, vertex_set excluded,
                              int& best) {
  if (candidates.empty()) {
    best = std::max(best, current.size());
    return;
  }
  if (current.size() + candidates.size() <= best) return;
  // Tomita pivot: maximise |candidates ∩ N(pivot)|.
  vertex pivot = 0;
  int pivot_hits = -1;
  for (vertex u : candidates | excluded) {
    const int hits = (candidates & g.neighbors(u)).size();
    if (hits > pivot_hits) {
      pivot_hits = hits;
      pivot = u;
    }
  }
  for (vertex v : candidates - g.neighbors(pivot)) {
    vertex_set with_v = current;
    with_v.insert(v);
    max_clique_search(g, with_v, candidates & g.neighbors(v), excluded & g.neighbors(v), best);
    candidates.erase(v);
    excluded.insert(v);
  }
}

}  // namespace detail

/// Clique number by pivoting Bron-Kerbosch; intended for small graphs.
inline int max_clique_size(const graph& g) {
  int best = 0;
  detail::max_clique_search(g, vertex_set{}, g.vertices(), vertex_set{}, best);
  return best;
}

/// True iff `s` induces a clique in `g`.
inline bool is_clique(const graph& g, vertex_set s) {
  for (vertex v : s) {
    vertex_set others = s;
    others.erase(v);
    if (!others.subset_of(g.neighbors(v))) return false;
  }
  return true;
}

/// Vertices reachable from `from` using only vertices of `within` (the
/// start vertices themselves need not belong to `within`).
inline vertex_set reachable(const graph& g, vertex_set from, vertex_set within) {
  vertex_set seen = from;
  vertex_set frontier = from;
  while (!frontier.empty()) {
    vertex_set next;
    for (vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace widthfill
