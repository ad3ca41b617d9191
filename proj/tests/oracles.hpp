#pragma once

// Brute-force reference implementations. They work on adjacency matrices and
// enumerate orderings or subsets directly, sharing no code with the solvers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <widthfill/widthfill.hpp>

namespace oracle {

using widthfill::graph;

using matrix = std::vector<std::vector<char>>;

inline matrix adjacency(const graph& g) {
  const int n = g.order();
  matrix m(n + 1, std::vector<char>(n + 1, 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do fn(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
}

/// Sum over v of pos(v) - min pos over the closed neighbourhood.
inline long long backward_spans(const matrix& m, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i + 1;
  long long total = 0;
  for (int v = 1; v <= n; ++v) {
    int first = pos[v];
    for (int u = 1; u <= n; ++u)
      if (m[v][u]) first = std::min(first, pos[u]);
    total += pos[v] - first;
  }
  return total;
}

/// Sum over v of max pos over the closed neighbourhood - pos(v).
inline long long forward_spans(const matrix& m, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i + 1;
  long long total = 0;
  for (int v = 1; v <= n; ++v) {
    int last = pos[v];
    for (int u = 1; u <= n; ++u)
      if (m[v][u]) last = std::max(last, pos[u]);
    total += last - pos[v];
  }
  return total;
}

inline int separation(const matrix& m, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int a = 0; a < i; ++a) {
      bool out = false;
      for (int b = i; b < n && !out; ++b) out = m[perm[a]][perm[b]];
      count += out;
    }
    best = std::max(best, count);
  }
  return best;
}

inline long long profile(const graph& g) {
  if (g.order() == 0) return 0;
  const matrix m = adjacency(g);
  long long best = -1;
  for_each_permutation(g.order(), [&](const std::vector<int>& p) {
    const long long c = backward_spans(m, p);
    if (best < 0 || c < best) best = c;
  });
  return best;
}

inline int pathwidth(const graph& g) {
  if (g.order() == 0) return 0;
  const matrix m = adjacency(g);
  int best = g.order();
  for_each_permutation(g.order(), [&](const std::vector<int>& p) { best = std::min(best, separation(m, p)); });
  return best;
}

struct elimination {
  int max_bag = 0;  ///< largest higher neighbourhood at elimination time
  int fill = 0;
};

/// Eliminates vertices one by one on an explicit matrix, turning each
/// remaining neighbourhood into a clique.
inline elimination eliminate(matrix m, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> gone(n + 1, 0);
  elimination out;
  for (int v : perm) {
    std::vector<int> nb;
    for (int u = 1; u <= n; ++u)
      if (!gone[u] && u != v && m[v][u]) nb.push_back(u);
    out.max_bag = std::max(out.max_bag, static_cast<int>(nb.size()));
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!m[nb[a]][nb[b]]) {
          m[nb[a]][nb[b]] = m[nb[b]][nb[a]] = 1;
          ++out.fill;
        }
    gone[v] = 1;
  }
  return out;
}

struct elimination_optima {
  int treewidth = 0;
  int fill = 0;
};

inline elimination_optima elimination_bruteforce(const graph& g) {
  if (g.order() == 0) return {};
  const matrix m = adjacency(g);
  elimination_optima best{g.order(), g.order() * g.order()};
  for_each_permutation(g.order(), [&](const std::vector<int>& p) {
    const elimination e = eliminate(m, p);
    best.treewidth = std::min(best.treewidth, e.max_bag);
    best.fill = std::min(best.fill, e.fill);
  });
  return best;
}

/// No induced cycle on four or more vertices.
inline bool chordal_by_induced_cycles(const graph& g) {
  const int n = g.order();
  const matrix m = adjacency(g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> sub;
    for (int v = 1; v <= n; ++v)
      if ((mask >> (v - 1)) & 1U) sub.push_back(v);
    if (sub.size() < 4) continue;
    bool two_regular = true;
    for (int v : sub) {
      int d = 0;
      for (int u : sub) d += m[v][u];
      two_regular = two_regular && d == 2;
    }
    if (!two_regular) continue;
    // A connected 2-regular graph is a cycle.
    std::vector<int> seen{sub[0]};
    for (std::size_t k = 0; k < seen.size(); ++k)
      for (int u : sub)
        if (m[seen[k]][u] && std::find(seen.begin(), seen.end(), u) == seen.end()) seen.push_back(u);
    if (seen.size() == sub.size()) return false;
  }
  return true;
}

inline int max_clique(const graph& g) {
  const int n = g.order();
  const matrix m = adjacency(g);
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 1; u <= n && ok; ++u)
      for (int v = u + 1; v <= n && ok; ++v)
        if (((mask >> (u - 1)) & 1U) && ((mask >> (v - 1)) & 1U) && !m[u][v]) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Edge count of the graph of open integer intervals, by pairwise test.
inline long long interval_edges(const widthfill::canonical_repr& r) {
  long long count = 0;
  for (int u = 1; u <= r.order(); ++u)
    for (int v = u + 1; v <= r.order(); ++v)
      if (std::max(r[u].left, r[v].left) < std::min(r[u].right, r[v].right)) ++count;
  return count;
}

/// Uniform random left endpoints; right endpoints anywhere up to n + 2.
inline widthfill::canonical_repr random_canonical(int n, std::mt19937_64& rng) {
  std::vector<int> lefts(n);
  std::iota(lefts.begin(), lefts.end(), 1);
  std::shuffle(lefts.begin(), lefts.end(), rng);
  widthfill::canonical_repr r(n);
  for (int v = 1; v <= n; ++v) {
    const int l = lefts[v - 1];
    std::uniform_int_distribution<int> len(1, n + 2 - l);
    r[v] = widthfill::interval{l, l + len(rng)};
  }
  return r;
}

/// Random subgraph of g keeping each edge with probability p.
inline graph random_subgraph(const graph& g, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<widthfill::edge> kept;
  for (const auto& e : g.edges())
    if (keep(rng)) kept.push_back(e);
  return graph(g.order(), kept);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
