#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "interval.hpp"
#include "rational.hpp"
#include "solvers.hpp"

namespace widthfill {

/// One refinement of the interval-completion loop. Integer points i..j are
/// a maximal run whose coverage exceeds k/t; the rebuilt window is the open
/// interval (i-1, j+1) bounded by the two low points around the run.
/// `sub_vertices` are the vertices whose intervals lay inside that window,
/// re-laid out by `sub_repr` (on vertices 1..|sub_vertices| in increasing
/// original id).
struct ic_iteration {
  int q = 0;
  int i = 0;
  int j = 0;
  int p = 0;  ///< intervals holding j+1 but not i-1 (re-anchored at i-1, i, ...)
  vertex_set sub_vertices;
  canonical_repr sub_repr;
  canonical_repr before;
  canonical_repr spliced;
};

struct ic_trace {
  int t = 0;
  int k = 0;  ///< iwid of the input graph
  canonical_repr initial;
  std::vector<ic_iteration> iterations;
  canonical_repr final_repr;
};

struct ic_result {
  canonical_repr representation;
  ic_trace trace;
};

namespace detail {

/// Rebuilds `cur` inside the window (lo, hi) = (i-1, j+1): intervals holding
/// both lo and hi or missing the window stay; those holding only lo stretch
/// to hi; those holding only hi are re-anchored at lo, lo+1, ... in
/// left-endpoint order; the rest (contained in the window) are replaced by a
/// width-optimal layout of the subgraph of g they induce, shifted onto the
/// freed left endpoints. Coverage at every integer point outside i..j is
/// unchanged.
inline ic_iteration splice_window(const graph& g, const canonical_repr& cur, int q, int i, int j,
                                  const solver_config& cfg) {
  ic_iteration it;
  it.q = q;
  it.i = i;
  it.j = j;
  it.before = cur;
  canonical_repr next = cur;
  const int lo = i - 1;
  const int hi = j + 1;

  std::vector<vertex> right_straddlers;
  for (vertex v = 1; v <= cur.order(); ++v) {
    const interval iv = cur[v];
    const bool has_lo = iv.left < lo && lo < iv.right;
    const bool has_hi = iv.left < hi && hi < iv.right;
    if (has_lo && has_hi) continue;
    if (iv.right <= lo || iv.left >= hi) continue;
    if (has_lo) {
      next[v].right = hi;
    } else if (has_hi) {
      right_straddlers.push_back(v);
    } else {
      it.sub_vertices.insert(v);
    }
  }

  std::stable_sort(right_straddlers.begin(), right_straddlers.end(),
                   [&](vertex a, vertex b) { return cur[a].left < cur[b].left; });
  it.p = static_cast<int>(right_straddlers.size());
  for (int s = 0; s < it.p; ++s) next[right_straddlers[s]].left = lo + s;

  // Left endpoints lo..hi-1 belonged to the re-anchored and the inner
  // intervals; the inner ones take lo+p..hi-1.
  if (it.sub_vertices.size() != hi - lo - it.p)
    throw std::logic_error("interval completion: window (" + std::to_string(lo) + "," + std::to_string(hi) +
                           ") holds " + std::to_string(it.sub_vertices.size()) + " inner intervals, expected " +
                           std::to_string(hi - lo - it.p));
  if (!it.sub_vertices.empty()) {
    const induced_graph sub = induced_subgraph(g, it.sub_vertices);
    const solver_result layout = pathwidth_exact(sub.subgraph, cfg);
    it.sub_repr = *layout.representation;
    const int offset = lo + it.p - 1;
    for (vertex x = 1; x <= sub.subgraph.order(); ++x) {
      const interval local = it.sub_repr[x];
      next[sub.original[x - 1]] = interval{local.left + offset, local.right + offset};
    }
  }
  it.spliced = std::move(next);
  return it;
}

}  // namespace detail

/// Interval completion with tradeoff parameter t in 1..iwid(g). Starts from a
/// profile-optimal representation and narrows every maximal run of integer
/// points whose coverage exceeds iwid(g)/t, scanning left to right.
inline ic_result run_ic(const graph& g, int t, const solver_config& cfg = {}) {
  const int k = iwid_exact(g, cfg);
  if (t < 1 || t > k)
    throw argument_error("interval completion: t = " + std::to_string(t) + " outside 1.." + std::to_string(k));

  ic_result out;
  out.trace.t = t;
  out.trace.k = k;
  out.trace.initial = *profile_exact(g, cfg).representation;
  canonical_repr cur = out.trace.initial;

  // Exact form of m * 1 > k / t.
  auto exceeds = [&](int point) { return static_cast<long long>(coverage(cur, half_point::at(point))) * t > k; };

  int q = 1;
  for (;;) {
    const int top = cur.max_right();
    int i = q;
    while (i < top && !exceeds(i)) ++i;
    if (i >= top) break;  // coverage is zero from max_right on
    if (exceeds(i - 1)) throw std::logic_error("interval completion: run does not start after a low point");
    int j = i;
    while (exceeds(j + 1)) ++j;

    ic_iteration it = detail::splice_window(g, cur, q, i, j, cfg);
    const validation_report check = validate_canonical(it.spliced);
    if (!check.valid()) throw std::logic_error("interval completion produced " + check.violations.front());
    cur = it.spliced;
    out.trace.iterations.push_back(std::move(it));
    q = j + 1;
  }
  out.trace.final_repr = cur;
  out.representation = std::move(cur);
  return out;
}

/// Actual width and cost of a representation against the tradeoff bounds
/// (1 + 2/t)(pw + 1) and (t + 2) * profile.
struct tradeoff_report {
  int t = 0;
  int pathwidth = 0;
  long long profile = 0;
  rational width_bound;
  int width_actual = 0;
  long long cost_bound = 0;
  long long cost_actual = 0;
  bool width_ok = false;
  bool cost_ok = false;

  [[nodiscard]] bool satisfied() const noexcept { return width_ok && cost_ok; }
};

inline tradeoff_report check_tradeoff(const graph& g, int t, const canonical_repr& r, const solver_config& cfg = {}) {
  if (r.order() != g.order()) throw input_error("representation has " + std::to_string(r.order()) +
                                                " intervals, graph has " + std::to_string(g.order()) + " vertices");
  const validation_report valid = validate_canonical(r);
  if (!valid.valid()) throw input_error("representation is not canonical: " + valid.violations.front());
  if (!is_supergraph(to_interval_graph(r), g)) throw input_error("representation does not cover every edge");

  tradeoff_report rep;
  rep.t = t;
  rep.pathwidth = static_cast<int>(pathwidth_exact(g, cfg).value);
  if (t < 1 || t > rep.pathwidth + 1)
    throw argument_error("t = " + std::to_string(t) + " outside 1.." + std::to_string(rep.pathwidth + 1));
  rep.profile = profile_exact(g, cfg).value;
  rep.width_bound = rational(static_cast<long long>(t + 2) * (rep.pathwidth + 1), t);
  rep.cost_bound = static_cast<long long>(t + 2) * rep.profile;
  rep.width_actual = wid(r);
  rep.cost_actual = icost(r);
  rep.width_ok = rational(rep.width_actual) <= rep.width_bound;
  rep.cost_ok = rep.cost_actual <= rep.cost_bound;
  return rep;
}

}  // namespace widthfill
