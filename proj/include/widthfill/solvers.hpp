#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "interval.hpp"
#include "ordering.hpp"
#include "subset_dp.hpp"

namespace widthfill {

/// An optimal parameter value with the ordering that attains it. Layout
/// solvers also carry the greedy representation built from the witness.
struct solver_result {
  long long value = 0;
  vertex_ordering witness;
  std::optional<canonical_repr> representation;
};

enum class frontier_problem { ppm, tfm };

inline std::string to_string(frontier_problem p) { return p == frontier_problem::ppm ? "ppm" : "tfm"; }

/// One non-dominated (k, c) pair. For PPM, k bounds the clique number of an
/// interval supergraph with c edges and `witness` is its left-endpoint
/// layout; for TFM, k bounds the clique number of a chordal supergraph with c
/// edges and `witness` is an elimination order producing it.
struct frontier_point {
  int k = 0;
  long long cost = 0;
  vertex_ordering witness;
  std::optional<canonical_repr> representation;
};

/// Points sorted by strictly increasing k and strictly decreasing cost.
struct pareto_frontier {
  frontier_problem problem = frontier_problem::ppm;
  std::vector<frontier_point> points;
};

// ---------------------------------------------------------------------------
// Objective evaluation for a fixed ordering.

/// Sum over i = 1..n of boundary(g, first i vertices of f).
inline long long prefix_boundary_sum(const graph& g, const vertex_ordering& f) {
  long long total = 0;
  vertex_set prefix;
  for (vertex v : f.sequence()) {
    prefix.insert(v);
    total += boundary(g, prefix);
  }
  return total;
}

/// Sum over v of f(v) - min f over {v} ∪ N(v) (backward spans).
inline long long layout_profile(const graph& g, const vertex_ordering& f) {
  long long total = 0;
  for (vertex v = 1; v <= g.order(); ++v) {
    int first = f.position(v);
    for (vertex u : g.neighbors(v)) first = std::min(first, f.position(u));
    total += f.position(v) - first;
  }
  return total;
}

/// Max over prefixes of f of the prefix boundary.
inline int vertex_separation(const graph& g, const vertex_ordering& f) {
  int worst = 0;
  vertex_set prefix;
  for (vertex v : f.sequence()) {
    prefix.insert(v);
    worst = std::max(worst, boundary(g, prefix));
  }
  return worst;
}

struct elimination_outcome {
  int max_bag = 0;  ///< largest |Q(S, v)| over the elimination
  long long fill = 0;
  graph filled;  ///< g plus all fill edges (chordal)
};

/// Plays the elimination game on g in the given order.
inline elimination_outcome eliminate(const graph& g, const vertex_ordering& elim) {
  elimination_outcome out;
  std::vector<edge> added;
  std::vector<vertex_set> adj(static_cast<std::size_t>(g.order()) + 1);
  for (vertex v = 1; v <= g.order(); ++v) adj[v] = g.neighbors(v);
  vertex_set remaining = g.vertices();
  for (vertex v : elim.sequence()) {
    remaining.erase(v);
    const vertex_set bag = adj[v] & remaining;
    out.max_bag = std::max(out.max_bag, bag.size());
    for (vertex x : bag)
      for (vertex y : bag)
        if (x < y && !adj[x].contains(y)) {
          adj[x].insert(y);
          adj[y].insert(x);
          added.emplace_back(x, y);
        }
  }
  out.fill = static_cast<long long>(added.size());
  out.filled = g.with_edges(added);
  return out;
}

// ---------------------------------------------------------------------------
// Exact solvers.

namespace detail {

inline constexpr int unreachable = std::numeric_limits<int>::max() / 4;

/// Min-sum layout DP over prefixes: value(S) = boundary(S) + min over the
/// last vertex. States with boundary > `max_boundary` are forbidden.
inline solver_result profile_dp(const graph& g, const std::vector<std::uint8_t>& bnd, int max_boundary) {
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<int> best(total, unreachable);
  std::vector<std::uint8_t> last(total, 0);
  best[0] = 0;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (bnd[mask] > max_boundary) continue;
    int choice = unreachable;
    for (vertex v : vertex_set(mask)) {
      const int prev = best[mask & ~(std::uint64_t{1} << (v - 1))];
      if (prev < choice) {
        choice = prev;
        last[mask] = static_cast<std::uint8_t>(v);
      }
    }
    if (choice < unreachable) best[mask] = choice + bnd[mask];
  }
  solver_result r;
  r.value = best[total - 1];
  if (r.value >= unreachable) return r;
  r.witness = vertex_ordering(unwind(last, n));
  r.representation = greedy_representation(g, r.witness);
  return r;
}

/// Elimination DP: cost(S) = min over the last eliminated v of
/// cost(S - v) + fill(S - v, v), restricted to bags of size <= max_bag.
inline solver_result fill_dp(const graph& g, const elimination_table& table, int max_bag) {
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<int> best(total, unreachable);
  std::vector<std::uint8_t> last(total, 0);
  best[0] = 0;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    for (vertex v : vertex_set(mask)) {
      const std::uint64_t before = mask & ~(std::uint64_t{1} << (v - 1));
      if (best[before] >= unreachable || table.bag(before, v) > max_bag) continue;
      const int candidate = best[before] + table.fill(before, v);
      if (candidate < best[mask]) {
        best[mask] = candidate;
        last[mask] = static_cast<std::uint8_t>(v);
      }
    }
  }
  solver_result r;
  r.value = best[total - 1];
  if (r.value < unreachable) r.witness = vertex_ordering(unwind(last, n));
  return r;
}

}  // namespace detail

/// Minimum over layouts of the summed backward spans, i.e. the minimum edge
/// count of an interval supergraph.
inline solver_result profile_exact(const graph& g, const solver_config& cfg = {}) {
  detail::require_capacity("profile", g.order(), cfg.max_n);
  const auto bnd = detail::boundary_table(g, cfg);
  return detail::profile_dp(g, bnd, g.order());
}

/// Pathwidth via vertex separation: min over layouts of the largest prefix
/// boundary.
inline solver_result pathwidth_exact(const graph& g, const solver_config& cfg = {}) {
  detail::require_capacity("pathwidth", g.order(), cfg.max_n);
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  const auto bnd = detail::boundary_table(g, cfg);
  std::vector<std::uint8_t> best(total, 0);
  std::vector<std::uint8_t> last(total, 0);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    int choice = detail::unreachable;
    for (vertex v : vertex_set(mask)) {
      const int prev = best[mask & ~(std::uint64_t{1} << (v - 1))];
      if (prev < choice) {
        choice = prev;
        last[mask] = static_cast<std::uint8_t>(v);
      }
    }
    best[mask] = static_cast<std::uint8_t>(std::max<int>(choice, bnd[mask]));
  }
  solver_result r;
  r.value = best[total - 1];
  r.witness = vertex_ordering(detail::unwind(last, n));
  r.representation = greedy_representation(g, r.witness);
  return r;
}

/// Smallest width of a canonical representation of an interval supergraph:
/// pathwidth + 1, and 0 for the empty graph.
inline int iwid_exact(const graph& g, const solver_config& cfg = {}) {
  if (g.order() == 0) return 0;
  return static_cast<int>(pathwidth_exact(g, cfg).value) + 1;
}

/// Treewidth: min over elimination orders of the largest bag.
inline solver_result treewidth_exact(const graph& g, const solver_config& cfg = {}) {
  detail::require_capacity("treewidth", g.order(), cfg.max_n);
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  const detail::elimination_table table(g, cfg);
  std::vector<std::uint8_t> best(total, 0);
  std::vector<std::uint8_t> last(total, 0);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    int choice = detail::unreachable;
    for (vertex v : vertex_set(mask)) {
      const std::uint64_t before = mask & ~(std::uint64_t{1} << (v - 1));
      const int candidate = std::max<int>(best[before], table.bag(before, v));
      if (candidate < choice) {
        choice = candidate;
        last[mask] = static_cast<std::uint8_t>(v);
      }
    }
    best[mask] = static_cast<std::uint8_t>(choice);
  }
  solver_result r;
  r.value = best[total - 1];
  r.witness = vertex_ordering(detail::unwind(last, n));
  return r;
}

/// Minimum fill-in: fewest edges whose addition makes g chordal.
inline solver_result fillin_exact(const graph& g, const solver_config& cfg = {}) {
  detail::require_capacity("fillin", g.order(), cfg.max_n);
  const detail::elimination_table table(g, cfg);
  return detail::fill_dp(g, table, g.order());
}

/// Pareto frontier of (clique bound k, edge count) over interval supergraphs.
inline pareto_frontier ppm_frontier(const graph& g, const solver_config& cfg = {}) {
  detail::require_capacity("ppm_frontier", g.order(), cfg.max_frontier_n);
  pareto_frontier out{frontier_problem::ppm, {}};
  const int n = g.order();
  if (n == 0) {
    out.points.push_back({0, 0, vertex_ordering{}, canonical_repr{}});
    return out;
  }
  const auto bnd = detail::boundary_table(g, cfg);
  const long long floor = detail::profile_dp(g, bnd, n).value;
  for (int k = 1; k <= n; ++k) {
    // The greedy layout has width (max proper-prefix boundary) + 1.
    solver_result r = detail::profile_dp(g, bnd, k - 1);
    if (r.value >= detail::unreachable) continue;
    if (out.points.empty() || r.value < out.points.back().cost)
      out.points.push_back({k, r.value, std::move(r.witness), std::move(r.representation)});
    if (out.points.back().cost == floor) break;
  }
  return out;
}

/// Pareto frontier of (clique bound k, edge count) over chordal supergraphs.
inline pareto_frontier tfm_frontier(const graph& g, const solver_config& cfg = {}) {
  detail::require_capacity("tfm_frontier", g.order(), cfg.max_frontier_n);
  pareto_frontier out{frontier_problem::tfm, {}};
  const int n = g.order();
  if (n == 0) {
    out.points.push_back({0, 0, vertex_ordering{}, std::nullopt});
    return out;
  }
  const detail::elimination_table table(g, cfg);
  const long long floor = detail::fill_dp(g, table, n).value;
  for (int k = 1; k <= n; ++k) {
    solver_result r = detail::fill_dp(g, table, k - 1);
    if (r.value >= detail::unreachable) continue;
    const long long cost = g.size() + r.value;
    if (out.points.empty() || cost < out.points.back().cost)
      out.points.push_back({k, cost, std::move(r.witness), std::nullopt});
    if (r.value == floor) break;
  }
  return out;
}

}  // namespace widthfill
