#include <benchmark/benchmark.h>

#include <numeric>

#include "mnlbandit/environments.hpp"
#include "mnlbandit/feedback.hpp"
#include "mnlbandit/maxmin_ucb.hpp"
#include "mnlbandit/rec_maxmin_ucb.hpp"
#include "mnlbandit/self_sparring.hpp"

using namespace mnlbandit;

static void BM_SampleTopM(benchmark::State& state) {
  const auto env = make_environment("arithb");
  ItemList s(static_cast<std::size_t>(state.range(0)));
  std::iota(s.begin(), s.end(), Item{0});
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_top_m(env, s, s.size(), rng));
}
BENCHMARK(BM_SampleTopM)->Arg(4)->Arg(10)->Arg(40);

static void BM_RankBreak(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  ItemList s(k);
  std::iota(s.begin(), s.end(), Item{0});
  const RankingFeedback fb{s, s};
  for (auto _ : state) benchmark::DoNotOptimize(rank_break(fb));
}
BENCHMARK(BM_RankBreak)->Arg(10)->Arg(40);

// Warm statistics so candidate sets are realistic rather than all-sentinel.
static PairwiseStats warm_stats(const MnlInstance& env, std::size_t k, Round rounds) {
  PairwiseStats stats(env.size());
  Rng rng(2);
  ItemList all(env.size());
  std::iota(all.begin(), all.end(), Item{0});
  for (Round t = 0; t < rounds; ++t) {
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + uniform_index(rng, all.size() - i)]);
    const ItemList s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    stats.record(rank_break({s, sample_top_m(env, s, k, rng)}));
  }
  return stats;
}

static void BM_BuildS(benchmark::State& state) {
  const auto env = make_environment("arithb");
  const auto ell = static_cast<std::size_t>(state.range(0));
  const auto stats = warm_stats(env, 10, 2000);
  const UcbView u(stats, 2001, 0.51);
  ItemList pool(env.size() - 1);
  std::iota(pool.begin(), pool.end(), Item{1});
  for (auto _ : state) benchmark::DoNotOptimize(build_s(u, {0}, pool, ell));
}
BENCHMARK(BM_BuildS)->Arg(1)->Arg(5)->Arg(20);

static void BM_MaxMinStep(benchmark::State& state) {
  const auto env = make_environment(state.range(0) == 0 ? "g1" : "arithb");
  const auto k = static_cast<std::size_t>(state.range(1));
  MaxMinUcb learner(env.size(), {k, k / 2, 0.51});
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(learner.step(env, rng));
}
BENCHMARK(BM_MaxMinStep)->Args({0, 10})->Args({1, 40});

static void BM_RecMaxMinStep(benchmark::State& state) {
  const auto env = make_environment(state.range(0) == 0 ? "g4" : "arithb");
  RecMaxMinUcb learner(env.size(), {static_cast<std::size_t>(state.range(1)), 0.51});
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(learner.step(env, rng));
}
BENCHMARK(BM_RecMaxMinStep)->Args({0, 5})->Args({1, 10});

static void BM_SelfSparringStep(benchmark::State& state) {
  const auto env = make_environment("g1");
  SelfSparringTs learner(env.size(), {10, 5, Objective::winner});
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(learner.step(env, rng));
}
BENCHMARK(BM_SelfSparringStep);
BENCHMARK_MAIN();
