#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mnlbandit/environments.hpp"
#include "mnlbandit/error.hpp"
#include "mnlbandit/maxmin_ucb.hpp"
#include "mnlbandit/rec_maxmin_ucb.hpp"
#include "mnlbandit/regret.hpp"

using namespace mnlbandit;

TEST(RecMaxMinUcb, ParameterChecks) {
  EXPECT_THROW(RecMaxMinUcb(16, {16, 0.51}), Error);
  EXPECT_THROW(RecMaxMinUcb(16, {1, 0.51}), Error);
  EXPECT_THROW(RecMaxMinUcb(16, {5, 0.4}), Error);
  EXPECT_NO_THROW(RecMaxMinUcb(16, {15, 0.51}));
}

TEST(RecMaxMinUcb, FirstRoundPlaysLowestIndices) {
  const auto env = make_environment("geo");
  RecMaxMinUcb learner(env.size(), {5, 0.51});
  Rng rng(1);
  const auto r = learner.step(env, rng);
  ItemList played = r.feedback.played_set;
  std::sort(played.begin(), played.end());
  EXPECT_EQ(played, (ItemList{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.feedback.order.size(), 5u);
  EXPECT_TRUE(r.early_exit);
  EXPECT_EQ(r.slots[0], Item{0});
  EXPECT_EQ(learner.stats().total_comparisons(), 10u);
}

TEST(RecMaxMinUcb, RoundInvariants) {
  for (const char* name : {"g4", "arith"}) {
    const auto env = make_environment(name);
    const std::size_t k = 5;
    RecMaxMinUcb learner(env.size(), {k, 0.51});
    Rng rng(23);
    for (int t = 0; t < 3000; ++t) {
      const auto prev_slots = learner.slots();
      const UcbView u(learner.stats(), learner.round(), 0.51);
      const auto before = learner.stats().total_comparisons();
      const auto r = learner.step(env, rng);

      const std::set<Item> distinct(r.feedback.played_set.begin(), r.feedback.played_set.end());
      ASSERT_EQ(r.feedback.played_set.size(), k);
      ASSERT_EQ(distinct.size(), k);
      EXPECT_EQ(learner.stats().total_comparisons() - before, k * (k - 1) / 2);

      ItemList held;
      for (const auto& s : r.slots) {
        if (s) held.push_back(*s);
      }
      const std::set<Item> held_set(held.begin(), held.end());
      EXPECT_EQ(held_set.size(), held.size()) << "two slots hold one item";

      // Persistence along the prefix of slots that kept their item.
      ItemList pool(env.size());
      std::iota(pool.begin(), pool.end(), Item{0});
      for (std::size_t h = 0; h + 1 < k; ++h) {
        const auto cand = candidate_set(u, pool);
        if (!prev_slots[h] || std::find(cand.begin(), cand.end(), *prev_slots[h]) == cand.end()) break;
        ASSERT_EQ(r.slots[h], prev_slots[h]) << name << " t=" << r.t << " slot " << h;
        std::erase(pool, *prev_slots[h]);
      }
    }
  }
}

TEST(RecMaxMinUcb, DeterministicUnderSeed) {
  const auto env = make_environment("har");
  RecMaxMinUcb a(env.size(), {4, 0.51}), b(env.size(), {4, 0.51});
  Rng ra(7), rb(7);
  for (int t = 0; t < 500; ++t) {
    const auto x = a.step(env, ra);
    const auto y = b.step(env, rb);
    ASSERT_EQ(x.feedback.played_set, y.feedback.played_set);
    ASSERT_EQ(x.feedback.order, y.feedback.order);
    ASSERT_EQ(x.slots, y.slots);
  }
}

TEST(RecMaxMinUcb, SettlesOnTopSetWithClearGaps) {
  const MnlInstance env({8.0, 4.0, 2.0, 0.5, 0.25, 0.125});
  RecMaxMinUcb learner(env.size(), {3, 0.51});
  Rng rng(3);
  double late_regret = 0.0;
  for (int t = 1; t <= 20000; ++t) {
    const auto r = learner.step(env, rng);
    if (t > 18000) late_regret += instant_regret_topk(env, r.feedback.played_set, 3);
  }
  // The last slot is only assigned when a single candidate is left in the
  // residual pool, which needs comparisons the steady play never makes.
  EXPECT_EQ(learner.slots()[0], Item{0});
  EXPECT_EQ(learner.slots()[1], Item{1});
  EXPECT_LT(late_regret / 2000.0, 0.05);
}
