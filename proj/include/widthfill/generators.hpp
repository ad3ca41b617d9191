#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "graph.hpp"

namespace widthfill::generators {

inline graph complete(int n) {
  std::vector<edge> e;
  for (vertex u = 1; u <= n; ++u)
    for (vertex v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return graph(n, e);
}

inline graph path(int n) {
  std::vector<edge> e;
  for (vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return graph(n, e);
}

inline graph cycle(int n) {
  std::vector<edge> e;
  for (vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  if (n >= 3) e.emplace_back(1, n);
  return graph(n, e);
}

/// K_{1,leaves} with centre 1.
inline graph star(int leaves) {
  std::vector<edge> e;
  for (vertex v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return graph(leaves + 1, e);
}

/// Erdos-Renyi G(n, p). Each pair {u,v}, u < v in lexicographic order, is
/// kept iff the next raw 64-bit draw of a mt19937_64 is below p * 2^64.
/// Using the raw engine output (no std distributions) keeps corpora
/// identical across standard library implementations.
inline graph random_graph(int n, double p, std::mt19937_64& rng) {
  const bool always = p >= 1.0;
  const auto threshold = always ? std::numeric_limits<std::uint64_t>::max()
                                : static_cast<std::uint64_t>(std::ldexp(std::max(p, 0.0), 64));
  std::vector<edge> e;
  for (vertex u = 1; u <= n; ++u)
    for (vertex v = u + 1; v <= n; ++v)
      if (const std::uint64_t draw = rng(); always || draw < threshold) e.emplace_back(u, v);
  return graph(n, e);
}

inline graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_graph(n, p, rng);
}

}  // namespace widthfill::generators
