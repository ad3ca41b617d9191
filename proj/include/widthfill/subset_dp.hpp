#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace widthfill {

/// Largest vertex count any subset table may be built for (2^n entries).
inline constexpr int max_table_order = 30;

/// Runtime limits and execution mode for the exponential solvers.
struct solver_config {
  /// Limit for profile, pathwidth, treewidth and fill-in.
  int max_n = 20;
  /// Limit for the Pareto frontier solvers.
  int max_frontier_n = 15;
  /// Evaluate per-subset quantities on several threads. Results are
  /// identical to the sequential mode.
  bool parallel = false;
  /// Thread count for parallel mode; 0 picks hardware_concurrency.
  unsigned threads = 0;
};

namespace detail {

inline void require_capacity(const char* solver, int n, int limit) {
  if (limit < 1 || limit > max_table_order)
    throw argument_error(std::string(solver) + ": capacity limit must be in 1.." + std::to_string(max_table_order));
  if (n > limit) throw capacity_error(solver, n, limit);
}

/// Calls fn(mask) for every mask in [0, 2^n). fn must only write state
/// owned by its own mask.
template <typename Fn>
void for_each_subset(int n, const solver_config& cfg, Fn&& fn) {
  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned workers = cfg.parallel ? (cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency()) : 1U;
  workers = std::max(1U, workers);
  if (workers == 1 || total < 4096) {
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(mask);
    return;
  }
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t mask = lo; mask < hi; ++mask) fn(mask);
    });
  }
}

/// boundary(g, S) for every S ⊆ V.
inline std::vector<std::uint8_t> boundary_table(const graph& g, const solver_config& cfg) {
  const int n = g.order();
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for_each_subset(n, cfg, [&](std::uint64_t mask) {
    table[mask] = static_cast<std::uint8_t>(boundary(g, vertex_set(mask)));
  });
  return table;
}

/// Neighbourhoods in the graph obtained from g by eliminating the vertices of
/// `eliminated`: x ~ y iff they are adjacent in g or joined by a path whose
/// internal vertices all lie in `eliminated`. Entries for eliminated
/// vertices are left empty.
inline std::vector<vertex_set> eliminated_neighborhoods(const graph& g, vertex_set eliminated) {
  const int n = g.order();
  std::vector<vertex_set> h(static_cast<std::size_t>(n) + 1);
  const vertex_set alive = g.vertices() - eliminated;
  for (vertex x : alive) h[x] = g.neighbors(x) & alive;
  vertex_set rest = eliminated;
  while (!rest.empty()) {
    const vertex_set component = reachable(g, vertex_set::single(rest.front()), eliminated);
    rest -= component;
    vertex_set attached;
    for (vertex c : component) attached |= g.neighbors(c);
    attached &= alive;
    for (vertex x : attached) h[x] |= attached;
  }
  for (vertex x : alive) h[x].erase(x);
  return h;
}

/// Per (eliminated set S, next vertex v ∉ S): the size of v's bag Q(S, v)
/// and the number of fill edges its elimination creates.
class elimination_table {
 public:
  elimination_table(const graph& g, const solver_config& cfg)
      : n_(g.order()),
        bag_((std::size_t{1} << n_) * static_cast<std::size_t>(n_)),
        fill_((std::size_t{1} << n_) * static_cast<std::size_t>(n_)) {
    for_each_subset(n_, cfg, [&](std::uint64_t mask) {
      const vertex_set s(mask);
      const auto h = eliminated_neighborhoods(g, s);
      for (vertex v : g.vertices() - s) {
        const vertex_set q = h[v];
        const int size = q.size();
        int adjacent_twice = 0;
        for (vertex x : q) adjacent_twice += (h[x] & q).size();
        const std::size_t at = index(mask, v);
        bag_[at] = static_cast<std::uint8_t>(size);
        fill_[at] = static_cast<std::uint16_t>(size * (size - 1) / 2 - adjacent_twice / 2);
      }
    });
  }

  [[nodiscard]] int bag(std::uint64_t eliminated, vertex v) const { return bag_[index(eliminated, v)]; }
  [[nodiscard]] int fill(std::uint64_t eliminated, vertex v) const { return fill_[index(eliminated, v)]; }

 private:
  [[nodiscard]] std::size_t index(std::uint64_t mask, vertex v) const {
    return static_cast<std::size_t>(mask) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
  }

  int n_;
  std::vector<std::uint8_t> bag_;
  std::vector<std::uint16_t> fill_;
};

/// Rebuilds an ordering from per-subset "last vertex" choices.
inline std::vector<vertex> unwind(const std::vector<std::uint8_t>& last, int n) {
  std::vector<vertex> seq(static_cast<std::size_t>(n));
  std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (int i = n; i >= 1; --i) {
    const vertex v = last[mask];
    seq[static_cast<std::size_t>(i) - 1] = v;
    mask &= ~(std::uint64_t{1} << (v - 1));
  }
  return seq;
}

}  // namespace detail
}  // namespace widthfill
