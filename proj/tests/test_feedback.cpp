#include <gtest/gtest.h>

#include "mnlbandit/error.hpp"
#include "mnlbandit/feedback.hpp"

using namespace mnlbandit;

namespace {

// a, b, c, d
constexpr Item a = 0, b = 1, c = 2, d = 3;

std::vector<PairwiseOutcome> pairs(std::initializer_list<std::pair<Item, Item>> list) {
  std::vector<PairwiseOutcome> out;
  for (auto [w, l] : list) out.push_back({w, l});
  return out;
}

}  // namespace

TEST(RankBreak, FullRankingGivesSixPairs) {
  const RankingFeedback fb{{a, b, c, d}, {b, a, c, d}};
  EXPECT_EQ(rank_break(fb), pairs({{b, a}, {b, c}, {b, d}, {a, c}, {a, d}, {c, d}}));
}

TEST(RankBreak, TopTwoGivesFivePairs) {
  const RankingFeedback fb{{a, b, c, d}, {b, a}};
  EXPECT_EQ(rank_break(fb), pairs({{b, a}, {b, c}, {b, d}, {a, c}, {a, d}}));
}

TEST(RankBreak, RankingWithoutLastItemMatchesFull) {
  const RankingFeedback full{{a, b, c, d}, {b, a, c, d}};
  const RankingFeedback partial{{a, b, c, d}, {b, a, c}};
  EXPECT_EQ(rank_break(full), rank_break(partial));
}

TEST(RankBreak, CountFormula) {
  const RankingFeedback fb{{4, 0, 3, 1, 2}, {3, 0, 2}};
  EXPECT_EQ(rank_break(fb).size(), 9u);
  EXPECT_EQ(rank_break_count(5, 3), 9u);
  EXPECT_EQ(rank_break_count(4, 4), 6u);
  EXPECT_EQ(rank_break_count(1, 1), 0u);
}

TEST(RankBreak, LosersInIndexOrderRegardlessOfListing) {
  const RankingFeedback fb{{9, 2, 5}, {5}};
  EXPECT_EQ(rank_break(fb), pairs({{5, 2}, {5, 9}}));
}

TEST(RankBreak, SingletonYieldsNothing) {
  const RankingFeedback fb{{4}, {4}};
  EXPECT_TRUE(rank_break(fb).empty());
}

TEST(RankBreak, InvalidFeedbackRejected) {
  auto code_of = [](const RankingFeedback& fb) {
    try {
      rank_break(fb);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;
  };
  EXPECT_EQ(code_of({{a, b}, {}}), Errc::invalid_ranking);
  EXPECT_EQ(code_of({{a, b}, {a, a}}), Errc::invalid_ranking);
  EXPECT_EQ(code_of({{a, b}, {c}}), Errc::invalid_ranking);
  EXPECT_EQ(code_of({{a, b}, {a, b, c}}), Errc::invalid_ranking);
  EXPECT_EQ(code_of({{a, a, b}, {a}}), Errc::invalid_subset);
}
