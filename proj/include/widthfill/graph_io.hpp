#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace widthfill {

namespace detail {

/// Reads whitespace-separated integers from one line; fails on trailing junk.
inline bool parse_ints(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream in(line);
  long long x = 0;
  while (in >> x) out.push_back(x);
  if (!in.eof()) return false;
  return true;
}

inline bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace detail

/// Edge-list format: a header line `n m`, then m lines `u v`. Blank lines are
/// skipped. Errors carry the 1-based line number.
inline graph read_graph(std::istream& in) {
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

  if (!next_line()) throw input_error("empty graph file", line_no > 0 ? line_no : 1);
  if (!detail::parse_ints(line, nums) || nums.size() != 2) throw input_error("expected header `n m`", line_no);
  const long long n = nums[0];
  const long long m = nums[1];
  if (n < 0 || n > max_vertices)
    throw input_error("vertex count must be in 0.." + std::to_string(max_vertices), line_no);
  if (m < 0 || m > n * (n - 1) / 2) throw input_error("edge count out of range", line_no);

  graph g(static_cast<int>(n));
  std::vector<edge> edges;
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) throw input_error("expected " + std::to_string(m) + " edges, got " + std::to_string(e), line_no + 1);
    if (!detail::parse_ints(line, nums) || nums.size() != 2) throw input_error("expected edge `u v`", line_no);
    const long long u = nums[0];
    const long long v = nums[1];
    if (u < 1 || u > n || v < 1 || v > n) throw input_error("endpoint out of range 1.." + std::to_string(n), line_no);
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u), line_no);
    const auto a = static_cast<vertex>(std::min(u, v));
    const auto b = static_cast<vertex>(std::max(u, v));
    if (g.has_edge(a, b)) throw input_error("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}", line_no);
    const edge one[] = {{a, b}};
    g = g.with_edges(one);
  }
  if (next_line()) throw input_error("unexpected content after the last edge", line_no);
  return g;
}

inline graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace widthfill
