#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ic.hpp"
#include "search.hpp"
#include "solvers.hpp"
#include "witness.hpp"

namespace widthfill {

using json = nlohmann::json;

inline json intervals_json(const canonical_repr& r) {
  json out = json::array();
  for (const interval& iv : r.intervals()) out.push_back({iv.left, iv.right});
  return out;
}

inline canonical_repr intervals_from_json(const json& j) {
  std::vector<interval> ivs;
  for (const json& pair : j) ivs.push_back(interval{pair.at(0).get<int>(), pair.at(1).get<int>()});
  return canonical_repr(std::move(ivs));
}

inline json sequence_json(const vertex_ordering& f) { return json(std::vector<vertex>(f.sequence().begin(), f.sequence().end())); }

inline void to_json(json& j, const solver_result& r) {
  j = {{"value", r.value}, {"witness", sequence_json(r.witness)}};
  if (r.representation) j["representation"] = intervals_json(*r.representation);
}

inline void to_json(json& j, const frontier_point& p) {
  j = {{"k", p.k}, {"cost", p.cost}, {"witness", sequence_json(p.witness)}};
  if (p.representation) j["representation"] = intervals_json(*p.representation);
}

inline void from_json(const json& j, frontier_point& p) {
  p.k = j.at("k").get<int>();
  p.cost = j.at("cost").get<long long>();
  p.witness = vertex_ordering(j.at("witness").get<std::vector<vertex>>());
  if (j.contains("representation")) p.representation = intervals_from_json(j.at("representation"));
  else p.representation.reset();
}

inline void to_json(json& j, const pareto_frontier& f) {
  j = {{"problem", to_string(f.problem)}, {"points", f.points}};
}

inline void from_json(const json& j, pareto_frontier& f) {
  const auto name = j.at("problem").get<std::string>();
  if (name != "ppm" && name != "tfm") throw input_error("unknown frontier problem `" + name + "`");
  f.problem = name == "ppm" ? frontier_problem::ppm : frontier_problem::tfm;
  f.points = j.at("points").get<std::vector<frontier_point>>();
}

inline void to_json(json& j, const rational& q) {
  j = {{"num", q.num()}, {"den", q.den()}, {"text", q.str()}, {"decimal", q.decimal()}};
}

inline void from_json(const json& j, rational& q) { q = rational(j.at("num").get<long long>(), j.at("den").get<long long>()); }

inline void to_json(json& j, const tradeoff_report& r) {
  j = {{"t", r.t},
       {"pathwidth", r.pathwidth},
       {"profile", r.profile},
       {"width_bound", r.width_bound},
       {"width_actual", r.width_actual},
       {"cost_bound", r.cost_bound},
       {"cost_actual", r.cost_actual},
       {"width_ok", r.width_ok},
       {"cost_ok", r.cost_ok}};
}

inline void from_json(const json& j, tradeoff_report& r) {
  r.t = j.at("t").get<int>();
  r.pathwidth = j.at("pathwidth").get<int>();
  r.profile = j.at("profile").get<long long>();
  r.width_bound = j.at("width_bound").get<rational>();
  r.width_actual = j.at("width_actual").get<int>();
  r.cost_bound = j.at("cost_bound").get<long long>();
  r.cost_actual = j.at("cost_actual").get<long long>();
  r.width_ok = j.at("width_ok").get<bool>();
  r.cost_ok = j.at("cost_ok").get<bool>();
}

inline void to_json(json& j, const ic_trace& t) {
  j = {{"t", t.t}, {"k", t.k}, {"initial", to_text(t.initial)}, {"iterations", json::array()}};
  for (const ic_iteration& it : t.iterations) {
    j["iterations"].push_back({{"q", it.q},
                               {"i", it.i},
                               {"j", it.j},
                               {"p", it.p},
                               {"sub_vertices", it.sub_vertices.to_vector()},
                               {"sub_repr", to_text(it.sub_repr)},
                               {"spliced", to_text(it.spliced)}});
  }
  j["final"] = to_text(t.final_repr);
}

inline void to_json(json& j, const witness_spec& s) { j = {{"a", s.a}, {"b", s.b}, {"c", s.c}}; }

inline void from_json(const json& j, witness_spec& s) {
  s.a = j.at("a").get<int>();
  s.b = j.at("b").get<int>();
  s.c = j.at("c").get<int>();
}

inline void to_json(json& j, const orthogonality_report& r) {
  j = {{"spec", r.spec},
       {"vertices", r.witness.order()},
       {"edges", r.witness.size()},
       {"ppm", r.ppm},
       {"tfm", r.tfm},
       {"ppm_gap", r.ppm_gap},
       {"tfm_gap", r.tfm_gap},
       {"width_formula_holds", r.width_formula_holds},
       {"cost_formula_holds", r.cost_formula_holds},
       {"confirmed", r.confirmed()}};
}

inline void to_json(json& j, const strategy_metrics& m) {
  j = {{"cost", m.cost}, {"searchers", m.searchers}, {"peak_searchers", m.peak_searchers}, {"monotone", m.monotone}};
}

inline void from_json(const json& j, strategy_metrics& m) {
  m.cost = j.at("cost").get<long long>();
  m.searchers = j.at("searchers").get<int>();
  m.peak_searchers = j.at("peak_searchers").get<int>();
  m.monotone = j.at("monotone").get<bool>();
}

inline void to_json(json& j, const strategy_report& r) {
  j = {{"valid", r.valid()}, {"violations", r.violations}, {"notes", r.notes}};
}

}  // namespace widthfill
