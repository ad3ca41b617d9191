// widthfill: command-line front end for the width/fill solvers.
//
// Exit codes: 0 success, 1 a checked property or validation failed,
// 2 bad input or usage, 3 a solver capacity limit was exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <widthfill/report_json.hpp>
#include <widthfill/widthfill.hpp>

namespace {

using namespace widthfill;

enum class output_format { table, csv, json };

struct run_config {
  solver_config solver;
  output_format format = output_format::table;
  std::uint64_t seed = 1;
  bool trace = false;
};

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_capacity = 3;

std::string join(std::span<const vertex> xs, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join(vertex_set s, char sep = ' ') {
  const std::vector<vertex> v = s.to_vector();
  return join(std::span<const vertex>(v), sep);
}

std::string rational_text(const rational& q) { return q.str() + " (" + q.decimal() + ")"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

graph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const run_config& cfg, const std::string& path, const std::string& which) {
  const graph g = load_graph(path);
  solver_result r;
  if (which == "profile") r = profile_exact(g, cfg.solver);
  else if (which == "pathwidth") r = pathwidth_exact(g, cfg.solver);
  else if (which == "treewidth") r = treewidth_exact(g, cfg.solver);
  else r = fillin_exact(g, cfg.solver);

  switch (cfg.format) {
    case output_format::json: {
      json j = r;
      j["solver"] = which;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case output_format::csv:
      std::cout << "solver,value,witness\n" << which << ',' << r.value << ',' << join(r.witness.sequence()) << '\n';
      break;
    case output_format::table:
      std::cout << "solver   " << which << '\n'
                << "value    " << r.value << '\n'
                << "witness  " << join(r.witness.sequence()) << '\n';
      if (r.representation) {
        std::cout << "representation (wid " << wid(*r.representation) << ", icost " << icost(*r.representation)
                  << ")\n";
        write_representation(std::cout, *r.representation);
      }
      break;
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// frontier

void print_frontier(const pareto_frontier& f, output_format format, bool header = true) {
  switch (format) {
    case output_format::json:
      std::cout << json(f).dump(2) << '\n';
      break;
    case output_format::csv:
      if (header) std::cout << "problem,k,cost,witness\n";
      for (const frontier_point& p : f.points)
        std::cout << to_string(f.problem) << ',' << p.k << ',' << p.cost << ',' << join(p.witness.sequence()) << '\n';
      break;
    case output_format::table:
      std::cout << std::left << std::setw(9) << "problem" << std::setw(5) << "k" << std::setw(8) << "cost"
                << "witness\n";
      for (const frontier_point& p : f.points)
        std::cout << std::setw(9) << to_string(f.problem) << std::setw(5) << p.k << std::setw(8) << p.cost
                  << join(p.witness.sequence()) << '\n';
      std::cout << std::right;
      break;
  }
}

int cmd_frontier(const run_config& cfg, const std::string& path, const std::string& problem) {
  const graph g = load_graph(path);
  const pareto_frontier f = problem == "ppm" ? ppm_frontier(g, cfg.solver) : tfm_frontier(g, cfg.solver);
  print_frontier(f, cfg.format);
  return exit_ok;
}

// ---------------------------------------------------------------------------
// ic

void print_trace_text(const ic_trace& t) {
  std::cout << "# trace t=" << t.t << " k=" << t.k << " iterations=" << t.iterations.size() << '\n';
  for (const ic_iteration& it : t.iterations) {
    std::cout << "# iteration q=" << it.q << " i=" << it.i << " j=" << it.j << " p=" << it.p << " inner={"
              << join(it.sub_vertices, ',') << "}\n";
    std::cout << "# inner representation\n";
    write_representation(std::cout, it.sub_repr);
    std::cout << "# spliced representation\n";
    write_representation(std::cout, it.spliced);
  }
}

int cmd_ic(const run_config& cfg, const std::string& path, int t, bool sweep) {
  const graph g = load_graph(path);
  std::vector<int> ts;
  if (sweep) {
    const int k = iwid_exact(g, cfg.solver);
    for (int s = 1; s <= k; ++s) ts.push_back(s);
  } else {
    ts.push_back(t);
  }

  std::vector<ic_result> runs;
  std::vector<tradeoff_report> reports;
  for (int s : ts) {
    runs.push_back(run_ic(g, s, cfg.solver));
    reports.push_back(check_tradeoff(g, s, runs.back().representation, cfg.solver));
  }

  bool all_ok = true;
  for (const tradeoff_report& r : reports) all_ok = all_ok && r.satisfied();

  switch (cfg.format) {
    case output_format::json: {
      json out = json::array();
      for (std::size_t i = 0; i < runs.size(); ++i) {
        json j = reports[i];
        j["representation"] = to_text(runs[i].representation);
        if (cfg.trace) j["trace"] = runs[i].trace;
        out.push_back(std::move(j));
      }
      std::cout << out.dump(2) << '\n';
      break;
    }
    case output_format::csv:
      std::cout << "t,pathwidth,profile,width_actual,width_bound,width_bound_decimal,width_ok,cost_actual,cost_bound,"
                   "cost_ok,iterations\n";
      for (std::size_t i = 0; i < runs.size(); ++i) {
        const tradeoff_report& r = reports[i];
        std::cout << r.t << ',' << r.pathwidth << ',' << r.profile << ',' << r.width_actual << ','
                  << r.width_bound.str() << ',' << r.width_bound.decimal() << ',' << r.width_ok << ','
                  << r.cost_actual << ',' << r.cost_bound << ',' << r.cost_ok << ','
                  << runs[i].trace.iterations.size() << '\n';
      }
      break;
    case output_format::table:
      for (std::size_t i = 0; i < runs.size(); ++i) {
        const tradeoff_report& r = reports[i];
        std::cout << "t = " << r.t << "  (pw " << r.pathwidth << ", profile " << r.profile << ", "
                  << runs[i].trace.iterations.size() << " refinements)\n"
                  << "  width  " << r.width_actual << " <= " << rational_text(r.width_bound) << "  "
                  << (r.width_ok ? "ok" : "VIOLATED") << '\n'
                  << "  cost   " << r.cost_actual << " <= " << r.cost_bound << "  " << (r.cost_ok ? "ok" : "VIOLATED")
                  << '\n';
        if (cfg.trace) print_trace_text(runs[i].trace);
        if (cfg.trace || !sweep) {
          std::cout << "# representation\n";
          write_representation(std::cout, runs[i].representation);
        }
      }
      break;
  }
  return all_ok ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// witness

int cmd_witness(const run_config& cfg, const witness_spec& spec, const std::string& graph_out) {
  const witness_graph w = build_witness(spec);
  const orthogonality_report rep = verify_orthogonality(spec, cfg.solver);
  if (!graph_out.empty()) {
    std::ofstream out(graph_out);
    if (!out) throw input_error("cannot write " + graph_out);
    write_graph(out, w.g);
  }

  switch (cfg.format) {
    case output_format::json: {
      json j = rep;
      j["graph"] = to_edge_list(w.g);
      json blocks;
      blocks["A"] = w.a_block.to_vector();
      blocks["B"] = w.b_block.to_vector();
      blocks["B'"] = w.b_prime_block.to_vector();
      blocks["C"] = w.c_block.to_vector();
      j["blocks"] = blocks;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case output_format::csv:
      std::cout << "problem,k,cost,witness\n";
      print_frontier(rep.ppm, output_format::csv, false);
      print_frontier(rep.tfm, output_format::csv, false);
      break;
    case output_format::table:
      if (graph_out.empty()) write_graph(std::cout, w.g);
      std::cout << "# witness (" << spec.a << "," << spec.b << "," << spec.c << "): " << w.g.order() << " vertices, "
                << w.g.size() << " edges\n"
                << "# blocks A={" << join(w.a_block, ',') << "} B={" << join(w.b_block, ',') << "} B'={"
                << join(w.b_prime_block, ',') << "} C={" << join(w.c_block, ',') << "}\n";
      for (const pareto_frontier* f : {&rep.ppm, &rep.tfm}) {
        std::cout << "# " << to_string(f->problem) << " frontier:";
        for (const frontier_point& p : f->points) std::cout << " (" << p.k << ", " << p.cost << ")";
        std::cout << "  gap " << yes_no(f == &rep.ppm ? rep.ppm_gap : rep.tfm_gap) << '\n';
      }
      std::cout << "# width formula a+b+c holds: " << yes_no(rep.width_formula_holds) << '\n'
                << "# cost formula |E|+min(ac,b^2) holds: " << yes_no(rep.cost_formula_holds) << '\n'
                << "# no supergraph attains both optima: " << yes_no(rep.confirmed()) << '\n';
      break;
  }
  return rep.confirmed() ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// strategy

json strategy_json(const search_strategy& s) {
  json steps = json::array();
  for (const search_step& st : s.steps)
    steps.push_back({{"cleared", st.cleared.to_vector()}, {"guarded", st.guarded.to_vector()}});
  return {{"flavor", to_string(s.flavor)}, {"steps", steps}};
}

int cmd_strategy_derive(const run_config& cfg, const graph& g, const std::string& flavor, const std::string& optimize) {
  search_strategy s;
  json extra = json::object();
  std::vector<std::string> comments;
  if (flavor == "active") {
    const solver_result r = optimize == "width" ? pathwidth_exact(g, cfg.solver) : profile_exact(g, cfg.solver);
    s = active_from_representation(g, *r.representation);
    extra["icost"] = icost(*r.representation);
    extra["wid"] = wid(*r.representation);
    comments.push_back("representation icost " + std::to_string(icost(*r.representation)) + ", wid " +
                       std::to_string(wid(*r.representation)));
  } else {
    const solver_result r = optimize == "width" ? treewidth_exact(g, cfg.solver) : fillin_exact(g, cfg.solver);
    const inert_derivation d = inert_from_elimination(g, r.witness);
    s = d.strategy;
    extra["elimination"] = sequence_json(r.witness);
    extra["chordal_edges"] = d.chordal_edges;
    extra["max_bag_plus_one"] = d.max_bag_plus_one;
    comments.push_back("elimination " + join(r.witness.sequence()));
    comments.push_back("chordal supergraph edges " + std::to_string(d.chordal_edges) + ", max bag + 1 " +
                       std::to_string(d.max_bag_plus_one));
  }
  const strategy_metrics m = metrics(s);
  const strategy_report check = validate_strategy(g, s);

  switch (cfg.format) {
    case output_format::json: {
      json j = strategy_json(s);
      j["metrics"] = m;
      j["validation"] = check;
      j["derivation"] = extra;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case output_format::csv:
      std::cout << "flavor,optimize,cost,searchers,peak_searchers,monotone,valid\n"
                << flavor << ',' << optimize << ',' << m.cost << ',' << m.searchers << ',' << m.peak_searchers << ','
                << m.monotone << ',' << check.valid() << '\n';
      break;
    case output_format::table:
      write_strategy(std::cout, s);
      for (const std::string& c : comments) std::cout << "# " << c << '\n';
      std::cout << "# cost " << m.cost << '\n'
                << "# searchers " << m.searchers << " (largest guard set)\n"
                << "# peak_searchers " << m.peak_searchers << " (guards plus the searcher clearing a vertex)\n"
                << "# monotone " << yes_no(m.monotone) << '\n'
                << "# valid " << yes_no(check.valid()) << '\n';
      break;
  }
  return check.valid() && m.monotone ? exit_ok : exit_failed;
}

int cmd_strategy_validate(const run_config& cfg, const graph& g, const std::string& path, const std::string& flavor,
                          const strategy_check_options& opt) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  search_strategy s;
  try {
    s = read_strategy(in);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
  if (flavor == "active") s.flavor = search_flavor::active;
  if (flavor == "inert") s.flavor = search_flavor::inert;
  const strategy_report rep = validate_strategy(g, s, opt);
  const strategy_metrics m = metrics(s);

  switch (cfg.format) {
    case output_format::json: {
      json j = rep;
      j["flavor"] = to_string(s.flavor);
      j["metrics"] = m;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case output_format::csv:
      std::cout << "valid,flavor,cost,searchers,peak_searchers,monotone,violations\n"
                << rep.valid() << ',' << to_string(s.flavor) << ',' << m.cost << ',' << m.searchers << ','
                << m.peak_searchers << ',' << m.monotone << ',' << rep.violations.size() << '\n';
      break;
    case output_format::table:
      std::cout << (rep.valid() ? "valid" : "invalid") << ' ' << to_string(s.flavor) << " strategy\n";
      for (const std::string& v : rep.violations) std::cout << "  violation: " << v << '\n';
      for (const std::string& n : rep.notes) std::cout << "  note: " << n << '\n';
      std::cout << "cost " << m.cost << ", searchers " << m.searchers << ", peak_searchers " << m.peak_searchers
                << ", monotone " << yes_no(m.monotone) << '\n';
      break;
  }
  return rep.valid() ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(const run_config& cfg, int n, double p) {
  const graph g = generators::random_graph(n, p, cfg.seed);
  if (cfg.format == output_format::json) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    std::cout << json{{"n", n}, {"p", p}, {"seed", cfg.seed}, {"edges", edges}}.dump(2) << '\n';
  } else if (cfg.format == output_format::csv) {
    std::cout << "u,v\n";
    for (auto [u, v] : g.edges()) std::cout << u << ',' << v << '\n';
  } else {
    write_graph(std::cout, g);
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and tradeoff solvers for width and fill graph parameters"};
  app.require_subcommand(1);
  app.fallthrough();

  run_config cfg;
  std::string format = "table";
  int threads = 0;
  app.add_option("--max-n", cfg.solver.max_n, "Vertex limit for single-value solvers")
      ->check(CLI::Range(1, max_table_order))
      ->capture_default_str();
  app.add_option("--max-frontier-n", cfg.solver.max_frontier_n, "Vertex limit for frontier solvers")
      ->check(CLI::Range(1, max_table_order))
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_flag("--trace", cfg.trace, "Emit per-iteration records");
  app.add_option("--threads", threads, "Fill solver tables with this many threads (0: sequential)")
      ->check(CLI::NonNegativeNumber);

  std::string graph_path;
  std::string which;
  auto* solve = app.add_subcommand("solve", "Compute profile, pathwidth, treewidth or fill-in exactly");
  solve->add_option("graph", graph_path, "Graph file")->required();
  solve->add_option("--which", which, "Parameter")
      ->required()
      ->check(CLI::IsMember({"profile", "pathwidth", "treewidth", "fillin"}));

  std::string problem;
  auto* frontier = app.add_subcommand("frontier", "Pareto frontier of (clique bound, edge count)");
  frontier->add_option("graph", graph_path, "Graph file")->required();
  frontier->add_option("--problem", problem, "Supergraph class: interval (ppm) or chordal (tfm)")
      ->required()
      ->check(CLI::IsMember({"ppm", "tfm"}));

  int t = 0;
  bool sweep = false;
  auto* ic = app.add_subcommand("ic", "Interval completion with tradeoff parameter t");
  ic->add_option("graph", graph_path, "Graph file")->required();
  auto* t_opt = ic->add_option("--t", t, "Tradeoff parameter, 1..iwid");
  auto* sweep_opt = ic->add_flag("--sweep", sweep, "Run every t from 1 to iwid");
  t_opt->excludes(sweep_opt);

  std::vector<int> abc;
  std::string graph_out;
  auto* witness = app.add_subcommand("witness", "Build and verify the orthogonality witness for a b c");
  witness->add_option("abc", abc, "Block sizes a b c")->required()->expected(3);
  witness->add_option("--graph-out", graph_out, "Also write the witness graph to this file");

  std::string derive;
  std::string validate_path;
  std::string optimize = "cost";
  std::string flavor_override;
  strategy_check_options check_opt;
  auto* strategy = app.add_subcommand("strategy", "Derive or validate node-search strategies");
  strategy->add_option("graph", graph_path, "Graph file")->required();
  auto* derive_opt = strategy->add_option("--derive", derive, "Derive a strategy of this flavour")
                         ->check(CLI::IsMember({"active", "inert"}));
  auto* validate_opt = strategy->add_option("--validate", validate_path, "Strategy file to validate");
  derive_opt->excludes(validate_opt);
  strategy->add_option("--optimize", optimize, "Derive from a cost-optimal or width-optimal layout")
      ->check(CLI::IsMember({"cost", "width"}))
      ->capture_default_str();
  strategy->add_option("--flavor", flavor_override, "Override the flavour recorded in the strategy file")
      ->check(CLI::IsMember({"active", "inert"}));
  strategy->add_flag("--strict-axioms", check_opt.strict, "Require every cleared vertex to be guarded");
  strategy->add_flag("--literal-paths", check_opt.literal_paths, "Guarded endpoints do not block recontamination");

  int gen_n = 0;
  double gen_p = 0.5;
  auto* generate = app.add_subcommand("generate", "Random graph with independent edges");
  generate->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::Range(0, max_vertices));
  generate->add_option("--p", gen_p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  cfg.format = format == "json" ? output_format::json : format == "csv" ? output_format::csv : output_format::table;
  if (threads > 0) {
    cfg.solver.parallel = true;
    cfg.solver.threads = static_cast<unsigned>(threads);
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, graph_path, which);
    if (frontier->parsed()) return cmd_frontier(cfg, graph_path, problem);
    if (ic->parsed()) {
      if (!sweep && t_opt->count() == 0) throw argument_error("ic needs --t or --sweep");
      if (!sweep && t < 1) throw argument_error("--t must be at least 1");
      return cmd_ic(cfg, graph_path, t, sweep);
    }
    if (witness->parsed()) return cmd_witness(cfg, {abc[0], abc[1], abc[2]}, graph_out);
    if (strategy->parsed()) {
      const graph g = load_graph(graph_path);
      if (derive_opt->count() == 0 && validate_opt->count() == 0)
        throw argument_error("strategy needs --derive or --validate");
      if (!derive.empty()) return cmd_strategy_derive(cfg, g, derive, optimize);
      return cmd_strategy_validate(cfg, g, validate_path, flavor_override, check_opt);
    }
    if (generate->parsed()) return cmd_generate(cfg, gen_n, gen_p);
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << " (raise --max-n or --max-frontier-n)\n";
    return exit_capacity;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
