#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <map>

#include "mnlbandit/environments.hpp"
#include "mnlbandit/error.hpp"
#include "mnlbandit/mnl.hpp"

using namespace mnlbandit;

namespace {

MnlInstance g1() { return make_environment("g1"); }

void expect_errc(Errc code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected error " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(MnlInstance, RejectsBadUtilities) {
  expect_errc(Errc::invalid_parameter, [] { MnlInstance({1.0}); });
  expect_errc(Errc::invalid_parameter, [] { MnlInstance({1.0, 0.0}); });
  expect_errc(Errc::invalid_parameter, [] { MnlInstance({1.0, -0.5}); });
  expect_errc(Errc::invalid_parameter,
              [] { MnlInstance({1.0, std::numeric_limits<double>::infinity()}); });
  expect_errc(Errc::invalid_parameter, [] { MnlInstance({1.0, std::nan("")}); });
}

TEST(ChoiceProb, BestAgainstOneOther) {
  const ItemList s{0, 1};
  EXPECT_NEAR(choice_prob(g1(), 0, s), 0.8, 1e-15);
}

TEST(ChoiceProb, SingletonIsCertain) {
  const auto inst = make_environment("geo");
  for (Item i = 0; i < inst.size(); ++i) {
    const ItemList s{i};
    EXPECT_DOUBLE_EQ(choice_prob(inst, i, s), 1.0);
  }
}

TEST(ChoiceProb, UniformIsSymmetric) {
  const MnlInstance inst(std::vector<double>(6, 0.3));
  const ItemList s{0, 2, 3, 5};
  for (Item i : s) EXPECT_NEAR(choice_prob(inst, i, s), 0.25, 1e-15);
}

TEST(ChoiceProb, Errors) {
  const auto inst = g1();
  expect_errc(Errc::invalid_subset, [&] { choice_prob(inst, 0, ItemList{}); });
  expect_errc(Errc::invalid_subset, [&] { choice_prob(inst, 0, ItemList{0, 0, 1}); });
  expect_errc(Errc::index_out_of_range, [&] { choice_prob(inst, 0, ItemList{0, 16}); });
  EXPECT_EQ(choice_prob(inst, 2, ItemList{0, 1}), 0.0);
}

TEST(RankingProb, FullRankingOfPair) {
  EXPECT_NEAR(ranking_prob(g1(), ItemList{0, 1}, ItemList{0, 1}), 0.8, 1e-15);
}

TEST(RankingProb, WeakItemFirst) {
  EXPECT_NEAR(ranking_prob(g1(), ItemList{1, 0}, ItemList{0, 1, 2}), 0.2 / 1.2 * 0.8, 1e-15);
  EXPECT_NEAR(ranking_prob(g1(), ItemList{1, 0}, ItemList{0, 1, 2}), 0.13333333333333333, 1e-15);
}

TEST(RankingProb, UniformOrderedPairs) {
  const MnlInstance inst(std::vector<double>(3, 2.0));
  const ItemList s{0, 1, 2};
  for (Item a : s) {
    for (Item b : s) {
      if (a != b) {
        EXPECT_NEAR(ranking_prob(inst, ItemList{a, b}, s), 1.0 / 6.0, 1e-15);
      }
    }
  }
}

TEST(RankingProb, Errors) {
  const auto inst = g1();
  expect_errc(Errc::invalid_ranking, [&] { ranking_prob(inst, ItemList{0, 0}, ItemList{0, 1}); });
  expect_errc(Errc::invalid_ranking, [&] { ranking_prob(inst, ItemList{0, 3}, ItemList{0, 1}); });
  expect_errc(Errc::invalid_ranking, [&] { ranking_prob(inst, ItemList{0, 1, 2}, ItemList{0, 1}); });
}

TEST(SampleTopM, SingletonReturnsItself) {
  Rng rng(3);
  const ItemList s{7};
  for (std::size_t m = 1; m <= 4; ++m) EXPECT_EQ(sample_top_m(g1(), s, m, rng), ItemList{7});
}

TEST(SampleTopM, GoldenSeed42) {
  const ItemList s{0, 1, 2, 3};
  Rng a(42), b(42);
  const auto first = sample_top_m(g1(), s, 2, a);
  EXPECT_EQ(first, sample_top_m(g1(), s, 2, b));
  EXPECT_EQ(first, (ItemList{2, 0}));
}

TEST(SampleTopM, WinnerFrequency) {
  Rng rng(7);
  const ItemList s{0, 1};
  int wins = 0;
  for (int d = 0; d < 100000; ++d) wins += sample_top_m(g1(), s, 1, rng).front() == 0;
  EXPECT_NEAR(wins / 1e5, 0.8, 0.01);
}

TEST(SampleTopM, FullLengthAppendsLastItem) {
  Rng rng(11);
  const ItemList s{3, 1, 4, 9};
  for (int rep = 0; rep < 100; ++rep) {
    auto order = sample_top_m(g1(), s, 4, rng);
    ASSERT_EQ(order.size(), 4u);
    std::sort(order.begin(), order.end());
    EXPECT_EQ(order, (ItemList{1, 3, 4, 9}));
  }
}

TEST(SampleTopM, ZeroLengthRejected) {
  Rng rng(1);
  expect_errc(Errc::invalid_parameter, [&] { sample_top_m(g1(), ItemList{0, 1}, 0, rng); });
}

TEST(Scale, IdentityAndRatios) {
  const auto inst = g1();
  EXPECT_EQ(inst.scale(1.0), inst);
  const auto big = inst.scale(5.0);
  EXPECT_NEAR(choice_prob(big, 0, ItemList{0, 1}), 0.8, 1e-15);
  EXPECT_NEAR(big.winner_gap(1), 3.0, 1e-12);
  expect_errc(Errc::invalid_scale, [&] { inst.scale(0.0); });
  expect_errc(Errc::invalid_scale, [&] { inst.scale(-2.0); });
}

TEST(InstanceStats, TopSetsAndGaps) {
  const auto g4 = make_environment("g4");
  EXPECT_EQ(g4.best_item(), 0u);
  EXPECT_EQ(g4.top_k_set(6), (ItemList{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(g4.top_k_set(5), (ItemList{0, 1, 2, 3, 4}));
  EXPECT_TRUE(g4.degenerate_for_top_k(5));
  EXPECT_NEAR(g4.gap_k(6), 0.2, 1e-12);
  EXPECT_FALSE(g4.degenerate_for_top_k(6));
  EXPECT_NEAR(g4.pair_prob(0, 6), 1.0 / 1.5, 1e-15);
}

TEST(InstanceStats, TiesBreakByLowestIndex) {
  const MnlInstance inst({0.5, 0.9, 0.9, 0.2, 0.9});
  EXPECT_EQ(inst.best_item(), 1u);
  EXPECT_EQ(inst.top_k_set(2), (ItemList{1, 2}));
  EXPECT_EQ(inst.ranked_items(), (ItemList{1, 2, 4, 0, 3}));
}

TEST(InstanceText, RoundTrip) {
  for (const auto& name : environment_names()) {
    const auto inst = make_environment(name);
    EXPECT_EQ(parse_instance(format_instance(inst)), inst) << name;
  }
}

TEST(InstanceText, SizeMismatchRejected) {
  expect_errc(Errc::config_error, [] { parse_instance("n = 3\ntheta = 1, 2\n"); });
}
