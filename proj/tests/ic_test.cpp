#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace widthfill;

namespace {

/// Integer points i..j covered by some refinement in the trace.
bool inside_run(const ic_iteration& it, int point) { return it.i <= point && point <= it.j; }

void check_run(const graph& g, int t) {
  SCOPED_TRACE(to_edge_list(g) + " t=" + std::to_string(t));
  const ic_result res = run_ic(g, t);
  const canonical_repr& r = res.representation;
  ASSERT_TRUE(validate_canonical(r).valid());
  ASSERT_TRUE(is_supergraph(to_interval_graph(r), g));

  const tradeoff_report rep = check_tradeoff(g, t, r);
  EXPECT_TRUE(rep.width_ok) << rep.width_actual << " > " << rep.width_bound.str();
  EXPECT_TRUE(rep.cost_ok) << rep.cost_actual << " > " << rep.cost_bound;
  EXPECT_EQ(rep.pathwidth, oracle::pathwidth(g));
  EXPECT_EQ(rep.profile, oracle::profile(g));

  EXPECT_EQ(icost(res.trace.initial), oracle::profile(g));
  EXPECT_LE(res.trace.iterations.size(), static_cast<std::size_t>(g.order()));
  int last_q = 0;
  for (const ic_iteration& it : res.trace.iterations) {
    EXPECT_GT(it.q, last_q);
    last_q = it.q;
    EXPECT_TRUE(validate_canonical(it.spliced).valid());
    const int top = std::max(it.before.max_right(), it.spliced.max_right());
    for (int p = 0; p <= top + 1; ++p)
      if (!inside_run(it, p)) {
        EXPECT_EQ(coverage(it.before, half_point::at(p)), coverage(it.spliced, half_point::at(p))) << "point " << p;
      }
    EXPECT_EQ(wid(it.sub_repr), iwid_exact(induced_subgraph(g, it.sub_vertices).subgraph));
  }
}

}  // namespace

TEST(RunIc, CliqueIsUntouched) {
  for (int n = 1; n <= 6; ++n) {
    const graph k = generators::complete(n);
    const ic_result res = run_ic(k, 1);
    EXPECT_TRUE(res.trace.iterations.empty());
    EXPECT_EQ(res.representation, *profile_exact(k).representation);
  }
}

TEST(RunIc, PathIsUntouched) {
  const graph p4 = generators::path(4);
  for (int t = 1; t <= 2; ++t) {
    const ic_result res = run_ic(p4, t);
    EXPECT_EQ(res.representation, res.trace.initial);
    EXPECT_EQ(wid(res.representation), 2);
    EXPECT_EQ(icost(res.representation), 3);
  }
}

TEST(RunIc, RejectsOutOfRangeT) {
  EXPECT_THROW((void)run_ic(generators::cycle(4), 0), argument_error);
  EXPECT_THROW((void)run_ic(generators::cycle(4), 4), argument_error);
  EXPECT_NO_THROW((void)run_ic(generators::cycle(4), 3));
}

TEST(RunIc, WitnessGraphBounds) {
  const witness_graph w = build_witness({2, 3, 5});
  const ic_result res = run_ic(w.g, 1);
  const tradeoff_report rep = check_tradeoff(w.g, 1, res.representation);
  EXPECT_EQ(rep.width_bound, rational(30));
  EXPECT_EQ(rep.cost_bound, 204);
  EXPECT_TRUE(rep.satisfied());
  EXPECT_TRUE(is_supergraph(to_interval_graph(res.representation), w.g));
}

TEST(RunIc, RefinesWhenCoverageExceedsThreshold) {
  // A profile-optimal layout of this graph is wider than iwid, so small t
  // must trigger at least one refinement somewhere in the corpus.
  std::mt19937_64 rng(1234);
  int refined = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const graph g = generators::random_graph(9, 0.35, rng);
    const int k = iwid_exact(g);
    for (int t = 1; t <= k; ++t) refined += !run_ic(g, t).trace.iterations.empty();
  }
  EXPECT_GT(refined, 0);
}

TEST(CheckTradeoff, Examples) {
  const graph k4 = generators::complete(4);
  const tradeoff_report kr = check_tradeoff(k4, 1, *profile_exact(k4).representation);
  EXPECT_EQ(kr.width_actual, 4);
  EXPECT_EQ(kr.width_bound, rational(12));
  EXPECT_EQ(kr.cost_actual, 6);
  EXPECT_EQ(kr.cost_bound, 18);
  EXPECT_TRUE(kr.satisfied());

  const graph c4 = generators::cycle(4);
  const tradeoff_report cr = check_tradeoff(c4, 2, run_ic(c4, 2).representation);
  EXPECT_EQ(cr.width_bound, rational(6));
  EXPECT_EQ(cr.cost_bound, 20);
  EXPECT_TRUE(cr.satisfied());

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const graph g = generators::random_graph(8, 0.4, rng);
    const int pw = static_cast<int>(pathwidth_exact(g).value);
    const tradeoff_report r = check_tradeoff(g, pw + 1, run_ic(g, pw + 1).representation);
    EXPECT_EQ(r.width_bound, rational(pw + 3));
  }
}

TEST(CheckTradeoff, RejectsBadRepresentations) {
  const graph c4 = generators::cycle(4);
  canonical_repr broken = *profile_exact(c4).representation;
  broken[1].left = broken[2].left;
  EXPECT_THROW((void)check_tradeoff(c4, 1, broken), input_error);
  const canonical_repr disjoint(std::vector<interval>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_THROW((void)check_tradeoff(c4, 1, disjoint), input_error);
  EXPECT_THROW((void)check_tradeoff(c4, 0, *profile_exact(c4).representation), argument_error);
}

TEST(RunIc, TradeoffPropertyOnRandomCorpus) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    const graph g = generators::random_graph(n, p, rng);
    const int k = iwid_exact(g);
    for (int t = 1; t <= k; ++t) check_run(g, t);
  }
}
