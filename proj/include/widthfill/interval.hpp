#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_io.hpp"
#include "ordering.hpp"

namespace widthfill {

/// Open interval (left, right) with integer endpoints.
struct interval {
  int left = 0;
  int right = 0;

  [[nodiscard]] bool intersects(const interval& o) const noexcept {
    return std::max(left, o.left) < std::min(right, o.right);
  }
  friend bool operator==(const interval&, const interval&) = default;
};

/// A point of the real line that is an integer or a half-integer, stored
/// doubled so all arithmetic stays integral.
class half_point {
 public:
  static constexpr half_point at(int x) noexcept { return half_point(2 * x); }
  /// x + 1/2
  static constexpr half_point after(int x) noexcept { return half_point(2 * x + 1); }

  [[nodiscard]] constexpr int doubled() const noexcept { return twice_; }
  [[nodiscard]] constexpr bool inside(const interval& i) const noexcept {
    return 2 * i.left < twice_ && twice_ < 2 * i.right;
  }

 private:
  constexpr explicit half_point(int twice) : twice_(twice) {}
  int twice_;
};

/// One interval per vertex 1..n. Canonical when every interval is non-empty
/// and the left endpoints are exactly {1, ..., n}; see validate_canonical.
class canonical_repr {
 public:
  canonical_repr() = default;
  explicit canonical_repr(int n) : intervals_(static_cast<std::size_t>(n)) {}
  explicit canonical_repr(std::vector<interval> by_vertex) : intervals_(std::move(by_vertex)) {}

  [[nodiscard]] int order() const noexcept { return static_cast<int>(intervals_.size()); }
  [[nodiscard]] const interval& operator[](vertex v) const { return intervals_[static_cast<std::size_t>(v) - 1]; }
  interval& operator[](vertex v) { return intervals_[static_cast<std::size_t>(v) - 1]; }
  [[nodiscard]] const std::vector<interval>& intervals() const noexcept { return intervals_; }

  [[nodiscard]] int max_right() const {
    int r = 0;
    for (const interval& i : intervals_) r = std::max(r, i.right);
    return r;
  }

  friend bool operator==(const canonical_repr&, const canonical_repr&) = default;

 private:
  std::vector<interval> intervals_;
};

struct validation_report {
  std::vector<std::string> violations;
  [[nodiscard]] bool valid() const noexcept { return violations.empty(); }
};

inline validation_report validate_canonical(const canonical_repr& r) {
  validation_report report;
  const int n = r.order();
  std::vector<vertex> owner(static_cast<std::size_t>(n) + 1, 0);
  for (vertex v = 1; v <= n; ++v) {
    const interval& iv = r[v];
    if (iv.left >= iv.right)
      report.violations.push_back("vertex " + std::to_string(v) + ": empty interval (" + std::to_string(iv.left) +
                                  "," + std::to_string(iv.right) + ")");
    if (iv.left < 1 || iv.left > n) {
      report.violations.push_back("vertex " + std::to_string(v) + ": left endpoint " + std::to_string(iv.left) +
                                  " outside 1.." + std::to_string(n));
    } else if (owner[iv.left] != 0) {
      report.violations.push_back("vertex " + std::to_string(v) + ": duplicate left endpoint " +
                                  std::to_string(iv.left) + " (also vertex " + std::to_string(owner[iv.left]) + ")");
    } else {
      owner[iv.left] = v;
    }
  }
  return report;
}

/// Number of open intervals strictly containing p.
inline int coverage(const canonical_repr& r, half_point p) {
  int m = 0;
  for (const interval& iv : r.intervals())
    if (p.inside(iv)) ++m;
  return m;
}

/// Sum over vertices of the coverage at the vertex's left endpoint; equals
/// the edge count of the represented interval graph.
inline long long icost(const canonical_repr& r) {
  long long total = 0;
  for (const interval& iv : r.intervals()) total += coverage(r, half_point::at(iv.left));
  return total;
}

/// Maximum coverage over the real line. Coverage is constant on each open
/// unit segment between integers and no larger at the integers themselves,
/// so sampling j + 1/2 suffices.
inline int wid(const canonical_repr& r) {
  int best = 0;
  const int top = r.max_right();
  for (int j = 0; j <= top; ++j) best = std::max(best, coverage(r, half_point::after(j)));
  return best;
}

inline graph to_interval_graph(const canonical_repr& r) {
  const int n = r.order();
  std::vector<edge> edges;
  for (vertex u = 1; u <= n; ++u)
    for (vertex v = u + 1; v <= n; ++v)
      if (r[u].intersects(r[v])) edges.emplace_back(u, v);
  return graph(n, edges);
}

/// left_v = f(v); right_v = 1 + max(f(v), f(u) for later neighbours u).
inline canonical_repr greedy_representation(const graph& g, const vertex_ordering& f) {
  if (f.size() != g.order()) throw argument_error("greedy_representation: ordering size differs from graph order");
  canonical_repr r(g.order());
  for (vertex v = 1; v <= g.order(); ++v) {
    int last = f.position(v);
    for (vertex u : g.neighbors(v)) last = std::max(last, f.position(u));
    r[v] = interval{f.position(v), last + 1};
  }
  return r;
}

/// Vertices sorted by left endpoint. Requires distinct left endpoints.
inline vertex_ordering left_endpoint_ordering(const canonical_repr& r) {
  std::vector<vertex> seq(static_cast<std::size_t>(r.order()));
  for (vertex v = 1; v <= r.order(); ++v) seq[v - 1] = v;
  std::stable_sort(seq.begin(), seq.end(), [&](vertex a, vertex b) { return r[a].left < r[b].left; });
  return vertex_ordering(std::move(seq));
}

/// Text format: a line `n`, then n lines `v left right`. Only the structure
/// (each vertex exactly once, integer fields) is checked here; callers run
/// validate_canonical for the canonical-form invariants.
inline canonical_repr read_representation(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<long long> nums;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!detail::is_blank(line)) return true;
    }
    return false;
  };
  if (!next_line()) throw input_error("empty representation file", 1);
  if (!detail::parse_ints(line, nums) || nums.size() != 1 || nums[0] < 0 || nums[0] > max_vertices)
    throw input_error("expected header `n`", line_no);
  const int n = static_cast<int>(nums[0]);
  canonical_repr r(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int k = 0; k < n; ++k) {
    if (!next_line()) throw input_error("expected " + std::to_string(n) + " intervals", line_no + 1);
    if (!detail::parse_ints(line, nums) || nums.size() != 3) throw input_error("expected `v left right`", line_no);
    if (nums[0] < 1 || nums[0] > n) throw input_error("vertex out of range 1.." + std::to_string(n), line_no);
    const auto v = static_cast<vertex>(nums[0]);
    if (seen[v]) throw input_error("vertex " + std::to_string(v) + " listed twice", line_no);
    seen[v] = true;
    r[v] = interval{static_cast<int>(nums[1]), static_cast<int>(nums[2])};
  }
  if (next_line()) throw input_error("unexpected content after the last interval", line_no);
  return r;
}

inline void write_representation(std::ostream& out, const canonical_repr& r) {
  out << r.order() << '\n';
  for (vertex v = 1; v <= r.order(); ++v) out << v << ' ' << r[v].left << ' ' << r[v].right << '\n';
}

inline std::string to_text(const canonical_repr& r) {
  std::ostringstream out;
  write_representation(out, r);
  return out.str();
}

}  // namespace widthfill
