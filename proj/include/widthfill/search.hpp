#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_io.hpp"
#include "interval.hpp"
#include "ordering.hpp"
#include "solvers.hpp"

namespace widthfill {

/// Active fugitives recontaminate from anywhere; inert ones only flee from
/// the vertex a searcher is about to land on.
enum class search_flavor { active, inert };

inline std::string to_string(search_flavor f) { return f == search_flavor::active ? "active" : "inert"; }

/// State after a step: the cleared vertices and the guarded ones.
struct search_step {
  vertex_set cleared;
  vertex_set guarded;
  friend bool operator==(const search_step&, const search_step&) = default;
};

/// Steps 0..m; step 0 is the empty start.
struct search_strategy {
  search_flavor flavor = search_flavor::active;
  std::vector<search_step> steps;
};

struct strategy_metrics {
  long long cost = 0;      ///< sum of |Z_i|
  int searchers = 0;       ///< max |Z_i|
  /// Largest number of searchers on the graph while a step is executed:
  /// max over i of |Z_{i-1} ∪ Z_i ∪ (A_i \ A_{i-1})|. This counts the searcher
  /// placed on the newly cleared vertex together with the guards still
  /// standing, which is the usual node-search count.
  int peak_searchers = 0;
  bool monotone = true;    ///< A_i ⊆ A_{i+1} for every i
};

inline strategy_metrics metrics(const search_strategy& s) {
  strategy_metrics m;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const search_step& cur = s.steps[i];
    m.cost += cur.guarded.size();
    m.searchers = std::max(m.searchers, cur.guarded.size());
    m.peak_searchers = std::max(m.peak_searchers, cur.guarded.size());
    if (i == 0) continue;
    const search_step& prev = s.steps[i - 1];
    if (!prev.cleared.subset_of(cur.cleared)) m.monotone = false;
    const vertex_set during = prev.guarded | cur.guarded | (cur.cleared - prev.cleared);
    m.peak_searchers = std::max(m.peak_searchers, during.size());
  }
  return m;
}

struct strategy_check_options {
  /// Require v_i ∈ Z_i at every step but the last.
  bool strict = false;
  /// Read "has an internal vertex in Z_{i-1}" literally: a guarded endpoint
  /// does not block, so every cleared neighbour of contamination is lost.
  bool literal_paths = false;
};

struct strategy_report {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  [[nodiscard]] bool valid() const noexcept { return violations.empty(); }
};

namespace detail {

inline std::string set_text(vertex_set s) {
  std::string out = "{";
  bool first = true;
  for (vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

/// Vertices of `cleared` the fugitive can reach from `origins` given the
/// guards. A path blocks when some vertex other than its origin is guarded
/// (relaxed) or when some internal vertex is guarded (literal).
inline vertex_set recontaminated(const graph& g, vertex_set origins, vertex_set guards, vertex_set cleared,
                                 bool literal) {
  const vertex_set reach = reachable(g, origins, g.vertices() - guards);
  vertex_set hit = reach;
  if (literal)
    for (vertex x : reach) hit |= g.neighbors(x);
  return hit & cleared;
}

}  // namespace detail

/// Checks the search axioms for the strategy's flavour. Structural problems
/// are reported as violations, never thrown.
inline strategy_report validate_strategy(const graph& g, const search_strategy& s,
                                         const strategy_check_options& opt = {}) {
  strategy_report rep;
  const vertex_set all = g.vertices();
  auto violation = [&](std::size_t i, const std::string& what) {
    rep.violations.push_back("step " + std::to_string(i) + ": " + what);
  };
  if (s.steps.empty()) {
    rep.violations.emplace_back("strategy has no steps");
    return rep;
  }
  const std::size_t m = s.steps.size() - 1;
  for (std::size_t i = 0; i <= m; ++i) {
    if (!s.steps[i].cleared.subset_of(all)) violation(i, "cleared set leaves the vertex set");
    if (!s.steps[i].guarded.subset_of(all)) violation(i, "guarded set leaves the vertex set");
  }
  if (!s.steps[0].cleared.empty() || !s.steps[0].guarded.empty()) violation(0, "must start with nothing cleared or guarded");
  if (s.steps[m].cleared != all) violation(m, "final step leaves " + detail::set_text(all - s.steps[m].cleared) + " contaminated");
  if (!s.steps[m].guarded.empty()) violation(m, "final step still guards " + detail::set_text(s.steps[m].guarded));

  for (std::size_t i = 1; i <= m; ++i) {
    const search_step& prev = s.steps[i - 1];
    const search_step& cur = s.steps[i];
    const vertex_set fresh = cur.cleared - prev.cleared;
    if (fresh.size() != 1) {
      violation(i, "clears " + detail::set_text(fresh) + ", expected exactly one new vertex");
      continue;
    }
    const vertex v = fresh.front();
    vertex_set allowed = prev.cleared;
    allowed.insert(v);
    if (!cur.guarded.subset_of(allowed))
      violation(i, "guards uncleared vertices " + detail::set_text(cur.guarded - allowed));
    if (opt.strict && !cur.guarded.contains(v)) {
      if (i == m)
        rep.notes.push_back("step " + std::to_string(i) + ": final step exempt from v_i in Z_i (final guard set is empty)");
      else
        violation(i, "cleared vertex " + std::to_string(v) + " is not guarded");
    }
    const vertex_set origins = s.flavor == search_flavor::active ? all - prev.cleared : vertex_set::single(v);
    const vertex_set lost = detail::recontaminated(g, origins, prev.guarded, prev.cleared, opt.literal_paths);
    vertex_set expected = prev.cleared - lost;
    expected.insert(v);
    if (cur.cleared != expected)
      violation(i, "cleared set " + detail::set_text(cur.cleared) + " but recontamination leaves " +
                       detail::set_text(expected));
  }
  return rep;
}

namespace detail {

/// Clears vertices in the given order, guarding after each step the cleared
/// vertices that still have a neighbour outside the cleared set in `h`.
inline search_strategy boundary_strategy(const graph& h, std::span<const vertex> clearing_order, search_flavor flavor) {
  search_strategy s;
  s.flavor = flavor;
  s.steps.push_back({});
  vertex_set cleared;
  for (vertex v : clearing_order) {
    cleared.insert(v);
    vertex_set guards;
    for (vertex u : cleared)
      if (!h.neighbors(u).subset_of(cleared)) guards.insert(u);
    s.steps.push_back({cleared, guards});
  }
  return s;
}

}  // namespace detail

/// Active monotone strategy clearing vertices by left endpoint; guards are
/// boundaries in the interval graph of r, so the cost equals icost(r).
inline search_strategy active_from_representation(const graph& g, const canonical_repr& r) {
  if (r.order() != g.order()) throw argument_error("representation and graph differ in vertex count");
  const validation_report valid = validate_canonical(r);
  if (!valid.valid()) throw input_error("representation is not canonical: " + valid.violations.front());
  const graph h = to_interval_graph(r);
  if (!is_supergraph(h, g)) throw input_error("representation does not cover every edge of the graph");
  const vertex_ordering order = left_endpoint_ordering(r);
  return detail::boundary_strategy(h, order.sequence(), search_flavor::active);
}

/// Inert strategy together with the quantities it is compared against.
struct inert_derivation {
  search_strategy strategy;
  strategy_metrics metrics;
  long long chordal_edges = 0;  ///< |E(g)| + fill of the elimination order
  int max_bag_plus_one = 0;     ///< clique number of the filled graph
};

/// Inert monotone strategy clearing vertices in reverse elimination order;
/// guards are boundaries in the filled (chordal) graph of the order.
inline inert_derivation inert_from_elimination(const graph& g, const vertex_ordering& elim) {
  if (elim.size() != g.order()) throw argument_error("elimination order and graph differ in vertex count");
  const elimination_outcome filled = eliminate(g, elim);
  const vertex_ordering clearing = elim.reversed();
  inert_derivation d;
  d.strategy = detail::boundary_strategy(filled.filled, clearing.sequence(), search_flavor::inert);
  d.metrics = metrics(d.strategy);
  d.chordal_edges = filled.filled.size();
  d.max_bag_plus_one = g.order() == 0 ? 0 : filled.max_bag + 1;
  return d;
}

/// One line per step: `i | A_i | Z_i`, sets as space-separated sorted
/// vertex lists. A leading `# flavor: active|inert` comment records the
/// flavour; other `#` lines and blank lines are ignored.
inline void write_strategy(std::ostream& out, const search_strategy& s) {
  out << "# flavor: " << to_string(s.flavor) << '\n';
  auto list = [&](vertex_set set) {
    bool first = true;
    for (vertex v : set) {
      out << (first ? "" : " ") << v;
      first = false;
    }
  };
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    out << i << " | ";
    list(s.steps[i].cleared);
    out << " | ";
    list(s.steps[i].guarded);
    out << '\n';
  }
}

inline std::string to_text(const search_strategy& s) {
  std::ostringstream out;
  write_strategy(out, s);
  return out.str();
}

inline search_strategy read_strategy(std::istream& in, search_flavor fallback = search_flavor::active) {
  search_strategy s;
  s.flavor = fallback;
  std::string line;
  int line_no = 0;
  std::vector<long long> nums;
  auto parse_set = [&](const std::string& field) {
    if (!detail::parse_ints(field, nums)) throw input_error("expected a vertex list", line_no);
    vertex_set out;
    for (long long v : nums) {
      if (v < 1 || v > max_vertices) throw input_error("vertex " + std::to_string(v) + " out of range", line_no);
      if (out.contains(static_cast<vertex>(v))) throw input_error("vertex " + std::to_string(v) + " repeated", line_no);
      out.insert(static_cast<vertex>(v));
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) continue;
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') {
      const auto key = line.find("flavor:");
      if (key != std::string::npos) {
        std::istringstream rest(line.substr(key + 7));
        std::string word;
        rest >> word;
        if (word == "active") s.flavor = search_flavor::active;
        else if (word == "inert") s.flavor = search_flavor::inert;
        else throw input_error("unknown flavor `" + word + "`", line_no);
      }
      continue;
    }
    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string::npos ? std::string::npos : line.find('|', bar1 + 1);
    if (bar2 == std::string::npos || line.find('|', bar2 + 1) != std::string::npos)
      throw input_error("expected `i | A_i | Z_i`", line_no);
    if (!detail::parse_ints(line.substr(0, bar1), nums) || nums.size() != 1)
      throw input_error("expected a step index", line_no);
    if (nums[0] != static_cast<long long>(s.steps.size()))
      throw input_error("step index " + std::to_string(nums[0]) + ", expected " + std::to_string(s.steps.size()),
                        line_no);
    search_step step;
    step.cleared = parse_set(line.substr(bar1 + 1, bar2 - bar1 - 1));
    step.guarded = parse_set(line.substr(bar2 + 1));
    s.steps.push_back(step);
  }
  if (s.steps.empty()) throw input_error("strategy file has no steps", line_no > 0 ? line_no : 1);
  return s;
}

}  // namespace widthfill
