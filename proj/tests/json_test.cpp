#include <gtest/gtest.h>

#include <widthfill/report_json.hpp>

#include "oracles.hpp"

using namespace widthfill;

TEST(Json, FrontierRoundTrip) {
  const witness_graph w = build_witness({2, 3, 5});
  for (const pareto_frontier& f : {ppm_frontier(w.g), tfm_frontier(w.g)}) {
    const json j = f;
    const pareto_frontier back = json::parse(j.dump()).get<pareto_frontier>();
    EXPECT_EQ(back.problem, f.problem);
    ASSERT_EQ(back.points.size(), f.points.size());
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      EXPECT_EQ(back.points[i].k, f.points[i].k);
      EXPECT_EQ(back.points[i].cost, f.points[i].cost);
      EXPECT_EQ(back.points[i].witness, f.points[i].witness);
      EXPECT_EQ(back.points[i].representation, f.points[i].representation);
    }
  }
  EXPECT_THROW((void)json({{"problem", "xyz"}, {"points", json::array()}}).get<pareto_frontier>(), input_error);
}

TEST(Json, TradeoffReportRoundTrip) {
  const graph g = generators::random_graph(8, 0.4, 5);
  const tradeoff_report r = check_tradeoff(g, 2, run_ic(g, 2).representation);
  const json j = r;
  EXPECT_EQ(j.at("width_bound").at("text"), r.width_bound.str());
  const tradeoff_report back = json::parse(j.dump()).get<tradeoff_report>();
  EXPECT_EQ(back.width_bound, r.width_bound);
  EXPECT_EQ(back.cost_bound, r.cost_bound);
  EXPECT_EQ(back.width_actual, r.width_actual);
  EXPECT_EQ(back.cost_actual, r.cost_actual);
  EXPECT_EQ(back.satisfied(), r.satisfied());
}

TEST(Json, SmallValues) {
  EXPECT_EQ(json(rational(10, 4)).get<rational>(), rational(5, 2));
  EXPECT_EQ(json(rational(10, 4)).at("decimal"), "2.5000");
  const witness_spec s{2, 3, 5};
  EXPECT_EQ(json(s).get<witness_spec>(), s);
  strategy_metrics m;
  m.cost = 7;
  m.searchers = 2;
  m.peak_searchers = 3;
  const strategy_metrics back = json(m).get<strategy_metrics>();
  EXPECT_EQ(back.cost, 7);
  EXPECT_EQ(back.peak_searchers, 3);
  EXPECT_TRUE(back.monotone);
}

TEST(Json, ReportsCarryTheirFields) {
  const json o = verify_orthogonality({2, 3, 5});
  EXPECT_EQ(o.at("edges"), 59);
  EXPECT_TRUE(o.at("confirmed").get<bool>());
  EXPECT_EQ(o.at("ppm").at("points").size(), 2u);

  const graph c4 = generators::cycle(4);
  const json trace = run_ic(c4, 1).trace;
  EXPECT_EQ(trace.at("k"), 3);
  EXPECT_TRUE(trace.at("iterations").is_array());

  const json sr = profile_exact(c4);
  EXPECT_EQ(sr.at("value"), 5);
  EXPECT_EQ(intervals_from_json(sr.at("representation")), *profile_exact(c4).representation);
}
