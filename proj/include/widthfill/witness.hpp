#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "solvers.hpp"

namespace widthfill {

/// Block sizes of the four-block witness graph: |A| = a, |B| = |B'| = b,
/// |C| = c, subject to a < b < c and a*c > b^2.
struct witness_spec {
  int a = 0;
  int b = 0;
  int c = 0;

  [[nodiscard]] int order() const noexcept { return a + 2 * b + c; }
  friend bool operator==(const witness_spec&, const witness_spec&) = default;
};

/// A witness_spec that breaks one of its constraints; `inequality()` names it.
class witness_spec_error : public argument_error {
 public:
  witness_spec_error(const witness_spec& s, std::string inequality)
      : argument_error("witness (" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.c) +
                       ") violates " + inequality),
        inequality_(std::move(inequality)) {}

  [[nodiscard]] const std::string& inequality() const noexcept { return inequality_; }

 private:
  std::string inequality_;
};

inline void validate(const witness_spec& s) {
  if (s.a < 1) throw witness_spec_error(s, "a >= 1");
  if (!(s.a < s.b)) throw witness_spec_error(s, "a < b");
  if (!(s.b < s.c)) throw witness_spec_error(s, "b < c");
  if (!(static_cast<long long>(s.a) * s.c > static_cast<long long>(s.b) * s.b)) throw witness_spec_error(s, "a*c > b^2");
  if (s.order() > max_vertices) throw witness_spec_error(s, "a + 2b + c <= " + std::to_string(max_vertices));
}

enum class block { a, b, b_prime, c };

inline const char* block_name(block k) {
  switch (k) {
    case block::a: return "A";
    case block::b: return "B";
    case block::b_prime: return "B'";
    case block::c: return "C";
  }
  return "?";
}

/// The witness graph with its block labelling. Vertices are numbered block
/// by block: A first, then B, B', C.
struct witness_graph {
  witness_spec spec;
  graph g;
  vertex_set a_block;
  vertex_set b_block;
  vertex_set b_prime_block;
  vertex_set c_block;

  [[nodiscard]] block block_of(vertex v) const {
    if (a_block.contains(v)) return block::a;
    if (b_block.contains(v)) return block::b;
    if (b_prime_block.contains(v)) return block::b_prime;
    return block::c;
  }
};

/// A∪B, A∪B', B∪C and B'∪C are cliques; there are no other edges.
inline witness_graph build_witness(const witness_spec& spec) {
  validate(spec);
  witness_graph w;
  w.spec = spec;
  vertex next = 1;
  auto take = [&](int count) {
    vertex_set s;
    for (int k = 0; k < count; ++k) s.insert(next++);
    return s;
  };
  w.a_block = take(spec.a);
  w.b_block = take(spec.b);
  w.b_prime_block = take(spec.b);
  w.c_block = take(spec.c);
  const vertex_set cliques[] = {w.a_block | w.b_block, w.a_block | w.b_prime_block, w.b_block | w.c_block,
                                w.b_prime_block | w.c_block};
  w.g = graph(spec.order()).with_cliques(cliques);
  return w;
}

enum class completion_mode {
  ac,  ///< join A to C: clique number a+b+c, a*c extra edges
  bb   ///< join B to B': clique number 2b+c, b^2 extra edges
};

inline graph build_completion(const witness_graph& w, completion_mode mode) {
  std::vector<edge> extra;
  const vertex_set left = mode == completion_mode::ac ? w.a_block : w.b_block;
  const vertex_set right = mode == completion_mode::ac ? w.c_block : w.b_prime_block;
  for (vertex u : left)
    for (vertex v : right) extra.emplace_back(std::min(u, v), std::max(u, v));
  return w.g.with_edges(extra);
}

namespace detail {

/// `x ∪ y` induces a clique, or (x and y being cliques) has no x-y edge.
inline bool clique_or_two_cliques(const graph& h, vertex_set x, vertex_set y) {
  if (is_clique(h, x | y)) return true;
  if (!is_clique(h, x) || !is_clique(h, y)) return false;
  for (vertex u : x)
    if (h.neighbors(u).intersects(y)) return false;
  return true;
}

}  // namespace detail

/// True iff both h[A∪C] and h[B∪B'] are a clique or two disjoint cliques.
inline bool satisfies_all_or_nothing(const witness_graph& w, const graph& h) {
  return detail::clique_or_two_cliques(h, w.a_block, w.c_block) &&
         detail::clique_or_two_cliques(h, w.b_block, w.b_prime_block);
}

/// h is a chordal supergraph of g from which no single added edge can be
/// dropped without losing chordality (equivalent to inclusion-minimality).
inline bool is_minimal_chordal_supergraph(const graph& g, const graph& h) {
  if (!is_supergraph(h, g) || !is_chordal(h)) return false;
  for (auto [u, v] : h.edges()) {
    if (g.has_edge(u, v)) continue;
    std::vector<edge> rest;
    for (const edge& e : h.edges())
      if (e != edge{u, v}) rest.push_back(e);
    if (is_chordal(graph(h.order(), rest))) return false;
  }
  return true;
}

struct all_or_nothing_report {
  enum class status { holds, violated, limit_exhausted };
  status outcome = status::holds;
  std::uint64_t candidates = 0;      ///< supergraphs examined
  std::uint64_t minimal_found = 0;   ///< of which minimal chordal
  std::optional<graph> counterexample;
};

/// Enumerates every supergraph obtained by adding a subset of the missing
/// edges, keeps the minimal chordal ones and checks the all-or-nothing
/// property on each. Refuses (limit_exhausted) when there are more than
/// `limit` candidates.
inline all_or_nothing_report verify_all_or_nothing(const witness_graph& w, std::uint64_t limit) {
  all_or_nothing_report rep;
  std::vector<edge> missing;
  for (vertex u = 1; u <= w.g.order(); ++u)
    for (vertex v = u + 1; v <= w.g.order(); ++v)
      if (!w.g.has_edge(u, v)) missing.emplace_back(u, v);
  if (missing.size() >= 63 || (std::uint64_t{1} << missing.size()) > limit) {
    rep.outcome = all_or_nothing_report::status::limit_exhausted;
    return rep;
  }
  const std::uint64_t total = std::uint64_t{1} << missing.size();
  std::vector<edge> chosen;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    chosen.clear();
    for (std::size_t e = 0; e < missing.size(); ++e)
      if ((mask >> e) & 1U) chosen.push_back(missing[e]);
    const graph h = w.g.with_edges(chosen);
    ++rep.candidates;
    if (!is_chordal(h) || !is_minimal_chordal_supergraph(w.g, h)) continue;
    ++rep.minimal_found;
    if (!satisfies_all_or_nothing(w, h)) {
      rep.outcome = all_or_nothing_report::status::violated;
      rep.counterexample = h;
      return rep;
    }
  }
  return rep;
}

/// Both frontiers of a witness graph and whether they show that the two
/// optima are never attained by one supergraph.
struct orthogonality_report {
  witness_spec spec;
  graph witness;
  pareto_frontier ppm;
  pareto_frontier tfm;
  bool ppm_gap = false;
  bool tfm_gap = false;
  /// The minimum clique bound equals a+b+c.
  bool width_formula_holds = false;
  /// The minimum edge count equals |E| + min(a*c, b^2).
  bool cost_formula_holds = false;

  [[nodiscard]] bool confirmed() const noexcept {
    return ppm_gap && tfm_gap && width_formula_holds && cost_formula_holds;
  }
};

namespace detail {

/// At least two points, the width-optimal one costs more than the
/// cost-optimal one, and the cost-optimal one is wider.
inline bool has_gap(const pareto_frontier& f) {
  if (f.points.size() < 2) return false;
  const frontier_point& narrow = f.points.front();
  const frontier_point& cheap = f.points.back();
  return narrow.cost > cheap.cost && cheap.k > narrow.k;
}

}  // namespace detail

inline orthogonality_report verify_orthogonality(const witness_spec& spec, const solver_config& cfg = {}) {
  const witness_graph w = build_witness(spec);
  orthogonality_report rep;
  rep.spec = spec;
  rep.witness = w.g;
  rep.ppm = ppm_frontier(w.g, cfg);
  rep.tfm = tfm_frontier(w.g, cfg);
  rep.ppm_gap = detail::has_gap(rep.ppm);
  rep.tfm_gap = detail::has_gap(rep.tfm);
  const long long extra = std::min(static_cast<long long>(spec.a) * spec.c, static_cast<long long>(spec.b) * spec.b);
  const int width = spec.a + spec.b + spec.c;
  rep.width_formula_holds = rep.ppm.points.front().k == width && rep.tfm.points.front().k == width;
  rep.cost_formula_holds =
      rep.ppm.points.back().cost == w.g.size() + extra && rep.tfm.points.back().cost == w.g.size() + extra;
  return rep;
}

}  // namespace widthfill
