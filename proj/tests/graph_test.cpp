#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace widthfill;

namespace {

graph c4() { return graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

}  // namespace

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(graph(3, {{1, 1}}), input_error);
  EXPECT_THROW(graph(3, {{1, 2}, {2, 1}}), input_error);
  EXPECT_THROW(graph(3, {{1, 4}}), input_error);
  EXPECT_THROW(graph(3, {{0, 2}}), input_error);
  EXPECT_THROW(graph(65), input_error);
}

TEST(Graph, BasicQueries) {
  const graph g = c4();
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(g.has_edge(4, 1));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_EQ(g.edges().front(), (edge{1, 2}));
  EXPECT_EQ(g.with_edges(std::vector<edge>{{1, 3}, {1, 2}}).size(), 5);
}

TEST(InducedSubgraph, Examples) {
  const induced_graph k2 = induced_subgraph(generators::complete(3), vertex_set::of({1, 2}));
  EXPECT_EQ(k2.subgraph, generators::complete(2));
  EXPECT_EQ(k2.original, (std::vector<vertex>{1, 2}));

  const graph g = c4();
  EXPECT_EQ(induced_subgraph(g, g.vertices()).subgraph, g);

  const induced_graph p = induced_subgraph(g, vertex_set::of({1, 2, 3}));
  EXPECT_EQ(p.subgraph, generators::path(3));

  const induced_graph shifted = induced_subgraph(g, vertex_set::of({2, 4}));
  EXPECT_EQ(shifted.subgraph.size(), 0);
  EXPECT_EQ(shifted.original, (std::vector<vertex>{2, 4}));

  EXPECT_EQ(induced_subgraph(g, vertex_set{}).subgraph.order(), 0);
}

TEST(InducedSubgraph, LiftsBackIntoOriginal) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const graph g = generators::random_graph(8, 0.5, rng);
    const vertex_set x{rng() & 0xFF};
    const induced_graph sub = induced_subgraph(g, x);
    ASSERT_EQ(sub.subgraph.order(), x.size());
    std::vector<edge> lifted;
    for (auto [u, v] : sub.subgraph.edges()) lifted.emplace_back(sub.original[u - 1], sub.original[v - 1]);
    EXPECT_TRUE(is_supergraph(g, graph(g.order(), lifted)));
    for (vertex u : x)
      for (vertex v : x)
        if (u < v && g.has_edge(u, v)) {
          EXPECT_TRUE(std::find(lifted.begin(), lifted.end(), edge{u, v}) != lifted.end());
        }
  }
}

TEST(Supergraph, Examples) {
  EXPECT_TRUE(is_supergraph(generators::complete(3), generators::path(3)));
  EXPECT_FALSE(is_supergraph(generators::path(3), generators::complete(3)));
  EXPECT_TRUE(is_supergraph(c4().with_edges(std::vector<edge>{{1, 3}}), c4()));
  EXPECT_THROW((void)is_supergraph(generators::complete(3), generators::complete(4)), argument_error);
}

TEST(Chordal, Examples) {
  EXPECT_FALSE(is_chordal(c4()));
  EXPECT_TRUE(is_chordal(generators::star(5)));
  EXPECT_TRUE(is_chordal(generators::path(7)));
  EXPECT_TRUE(is_chordal(generators::cycle(5).with_edges(std::vector<edge>{{1, 3}, {1, 4}})));
  EXPECT_TRUE(is_chordal(graph(0)));
  EXPECT_TRUE(is_chordal(generators::complete(6)));
}

TEST(Chordal, AgreesWithInducedCycleOracle) {
  std::mt19937_64 rng(7);
  int chordal = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const double p = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const graph g = generators::random_graph(n, p, rng);
    const bool expected = oracle::chordal_by_induced_cycles(g);
    ASSERT_EQ(is_chordal(g), expected) << to_edge_list(g);
    chordal += expected;
  }
  EXPECT_GT(chordal, 50);
  EXPECT_LT(chordal, 550);
}

TEST(Boundary, Examples) {
  const graph g = c4();
  EXPECT_EQ(boundary(g, {}), 0);
  EXPECT_EQ(boundary(g, g.vertices()), 0);
  EXPECT_EQ(boundary(g, vertex_set::of({1, 2})), 2);
  EXPECT_EQ(boundary(generators::star(3), vertex_set::of({1})), 1);
}

TEST(Boundary, AtMostSetSize) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const graph g = generators::random_graph(10, 0.3, rng);
    const vertex_set s{rng() & 0x3FF};
    EXPECT_LE(boundary(g, s), s.size());
  }
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique_size(generators::complete(5)), 5);
  EXPECT_EQ(max_clique_size(c4()), 2);
  EXPECT_EQ(max_clique_size(graph(3)), 1);
  EXPECT_EQ(max_clique_size(graph(0)), 0);
}

TEST(MaxClique, AgreesWithSubsetOracleAndDegreeBound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const graph g = generators::random_graph(n, 0.6, rng);
    const int w = max_clique_size(g);
    ASSERT_EQ(w, oracle::max_clique(g)) << to_edge_list(g);
    int max_degree = 0;
    for (vertex v : g.vertices()) max_degree = std::max(max_degree, g.degree(v));
    EXPECT_LE(w, max_degree + 1);
  }
}

TEST(GraphIO, RoundTrip) {
  std::mt19937_64 rng(9);
  const graph g = generators::random_graph(9, 0.4, rng);
  std::istringstream in(to_edge_list(g));
  EXPECT_EQ(read_graph(in), g);
}

TEST(GraphIO, ReportsLineNumbers) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      (void)read_graph(in);
    } catch (const input_error& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("3 2\n1 2\n1 1\n"), 3);
  EXPECT_EQ(line_of("3 2\n1 2\n2 1\n"), 3);
  EXPECT_EQ(line_of("3 1\n1 4\n"), 2);
  EXPECT_EQ(line_of("3 1\nx y\n"), 2);
  EXPECT_EQ(line_of("3\n"), 1);
  EXPECT_GT(line_of("3 2\n1 2\n"), 0);
  EXPECT_EQ(line_of("3 1\n1 2\n2 3\n"), 3);
  EXPECT_EQ(line_of("3 1\n\n1 2\n"), -1);
}

TEST(Generators, DeterministicAndShaped) {
  EXPECT_EQ(generators::random_graph(12, 0.3, 42), generators::random_graph(12, 0.3, 42));
  EXPECT_EQ(generators::random_graph(6, 1.0, 1), generators::complete(6));
  EXPECT_EQ(generators::random_graph(6, 0.0, 1).size(), 0);
  EXPECT_EQ(generators::cycle(6).size(), 6);
  EXPECT_EQ(generators::star(4).degree(1), 4);
}
