#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "mnlbandit/error.hpp"
#include "mnlbandit/feedback.hpp"
#include "mnlbandit/pairwise_stats.hpp"

using namespace mnlbandit;

TEST(PairwiseStats, SingleOutcome) {
  PairwiseStats s(4);
  const std::vector<PairwiseOutcome> one{{0, 1}};
  s.record(one);
  EXPECT_EQ(s.wins(0, 1), 1u);
  EXPECT_EQ(s.wins(1, 0), 0u);
  EXPECT_EQ(s.comparisons(0, 1), 1u);
  EXPECT_EQ(s.comparisons(1, 0), 1u);
  EXPECT_DOUBLE_EQ(s.empirical_pref(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(s.empirical_pref(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(s.empirical_pref(2, 3), 0.5);
}

TEST(PairwiseStats, FullRankingFillsSixCells) {
  PairwiseStats s(4);
  s.record(rank_break({{0, 1, 2, 3}, {1, 0, 2, 3}}));
  const std::pair<Item, Item> cells[] = {{1, 0}, {1, 2}, {1, 3}, {0, 2}, {0, 3}, {2, 3}};
  for (auto [w, l] : cells) {
    EXPECT_EQ(s.wins(w, l), 1u);
    EXPECT_EQ(s.wins(l, w), 0u);
  }
  EXPECT_EQ(s.total_comparisons(), 6u);
}

TEST(PairwiseStats, EmptyRecordIsIdentity) {
  PairwiseStats s(3);
  s.record(std::vector<PairwiseOutcome>{{2, 0}});
  std::ostringstream before, after;
  s.dump_csv(before);
  s.record({});
  s.dump_csv(after);
  EXPECT_EQ(before.str(), after.str());
}

TEST(PairwiseStats, InvalidOutcomeLeavesStatsUntouched) {
  PairwiseStats s(3);
  const std::vector<PairwiseOutcome> bad{{0, 1}, {2, 2}};
  try {
    s.record(bad);
    FAIL() << "self-comparison accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_outcome);
  }
  EXPECT_EQ(s.total_comparisons(), 0u);
}

TEST(PairwiseStats, DumpCsvIsOneBased) {
  PairwiseStats s(3);
  s.record(std::vector<PairwiseOutcome>{{0, 2}, {0, 2}, {1, 0}});
  std::ostringstream os;
  s.dump_csv(os);
  EXPECT_EQ(os.str(), "i,j,wins\n1,3,2\n2,1,1\n");
}

TEST(Ucb, DiagonalAndSentinel) {
  PairwiseStats s(3);
  EXPECT_DOUBLE_EQ(ucb(s, 1, 1, 5, 0.51), 0.5);
  EXPECT_EQ(ucb(s, 0, 1, 5, 0.51), std::numeric_limits<double>::infinity());
  const UcbView view(s, 5, 0.51);
  EXPECT_DOUBLE_EQ(view(2, 2), 0.5);
  EXPECT_TRUE(std::isinf(view(0, 2)));
  EXPECT_FALSE(view.above_half(1, 1));
  EXPECT_TRUE(view.above_half(0, 2));
}

TEST(Ucb, RadiusArithmetic) {
  PairwiseStats s(2);
  std::vector<PairwiseOutcome> outcomes(50, {0, 1});
  outcomes.insert(outcomes.end(), 50, {1, 0});
  s.record(outcomes);
  // ln t = 2 sits between t = 7 and t = 8.
  const double at_e2 = 0.5 + std::sqrt(0.51 * 2.0 / 100.0);
  EXPECT_NEAR(at_e2, 0.60099, 1e-5);
  EXPECT_LT(ucb(s, 0, 1, 7, 0.51), at_e2);
  EXPECT_GT(ucb(s, 0, 1, 8, 0.51), at_e2);
  EXPECT_NEAR(ucb(s, 0, 1, 7, 0.51), 0.5 + std::sqrt(0.51 * std::log(7.0) / 100.0), 1e-15);
  EXPECT_DOUBLE_EQ(UcbView(s, 7, 0.51)(0, 1), ucb(s, 0, 1, 7, 0.51));
}

TEST(Ucb, RejectsAlphaAtOrBelowHalf) {
  PairwiseStats s(2);
  for (double alpha : {0.5, 0.2, -1.0, std::nan("")}) {
    try {
      ucb(s, 0, 1, 3, alpha);
      ADD_FAILURE() << "alpha " << alpha << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_parameter);
    }
  }
}

TEST(Ucb, AboveHalfAgreesWithValue) {
  PairwiseStats s(2);
  std::vector<PairwiseOutcome> outcomes;
  for (int w = 0; w < 40; ++w) {
    outcomes.push_back({1, 0});
    if (w % 3 == 0) outcomes.push_back({0, 1});
    s.record(outcomes);
    outcomes.clear();
    for (Round t : {1u, 2u, 10u, 100u, 10000u}) {
      const UcbView v(s, t, 0.51);
      EXPECT_EQ(v.above_half(0, 1), v(0, 1) > 0.5) << "t=" << t << " w=" << w;
      EXPECT_EQ(v.above_half(1, 0), v(1, 0) > 0.5) << "t=" << t << " w=" << w;
    }
  }
}
