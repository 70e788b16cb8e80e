#include "mnlbandit/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "mnlbandit/error.hpp"
#include "mnlbandit/feedback.hpp"
#include "mnlbandit/maxmin_ucb.hpp"
#include "mnlbandit/rec_maxmin_ucb.hpp"
#include "mnlbandit/self_sparring.hpp"

namespace mnlbandit {

namespace {

double charge(const MnlInstance& env, Objective objective, const ItemList& played, std::size_t k) {
  return objective == Objective::winner ? instant_regret_winner(env, played)
                                        : instant_regret_topk(env, played, k);
}

}  // namespace

RegretTrajectory run_trajectory(const ExperimentConfig& cfg, const MnlInstance& env,
                                std::size_t run_index, std::vector<Round> checkpoints,
                                PairwiseStats* final_stats) {
  RegretTrajectory traj(cfg.objective, std::move(checkpoints));
  Rng rng(cfg.seed + run_index);
  const std::size_t n = env.size();

  switch (cfg.algorithm) {
    case Algorithm::maxmin: {
      MaxMinUcb learner(n, {cfg.k, cfg.m, cfg.alpha});
      for (Round t = 1; t <= cfg.horizon; ++t) {
        const auto r = learner.step(env, rng);
        traj.add(charge(env, cfg.objective, r.feedback.played_set, cfg.k));
      }
      if (final_stats) *final_stats = learner.stats();
      break;
    }
    case Algorithm::rec_maxmin: {
      RecMaxMinUcb learner(n, {cfg.k, cfg.alpha});
      for (Round t = 1; t <= cfg.horizon; ++t) {
        const auto r = learner.step(env, rng);
        traj.add(charge(env, cfg.objective, r.feedback.played_set, cfg.k));
      }
      if (final_stats) *final_stats = learner.stats();
      break;
    }
    case Algorithm::sp_ts: {
      SelfSparringTs learner(n, {cfg.k, cfg.m, cfg.objective});
      if (final_stats) *final_stats = PairwiseStats(n);
      for (Round t = 1; t <= cfg.horizon; ++t) {
        const auto fb = learner.step(env, rng);
        traj.add(charge(env, cfg.objective, fb.played_set, cfg.k));
        if (final_stats) final_stats->record(rank_break(fb));
      }
      break;
    }
  }
  return traj;
}

AggregateResult run_experiment(const ExperimentConfig& cfg) {
  return run_experiment(cfg, checkpoint_schedule(cfg.horizon, cfg.checkpoints));
}

AggregateResult run_experiment(const ExperimentConfig& cfg, std::vector<Round> checkpoints) {
  validate_config(cfg);
  if (checkpoints.empty() || checkpoints.back() != cfg.horizon) {
    throw Error(Errc::invalid_parameter, "checkpoint schedule must end at the horizon");
  }
  const MnlInstance env = config_instance(cfg);

  std::vector<std::vector<double>> per_run(cfg.runs);
  std::size_t workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  workers = std::min(workers, cfg.runs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t r = next++; r < cfg.runs; r = next++) {
      try {
        per_run[r] = run_trajectory(cfg, env, r, checkpoints).cumulative();
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  AggregateResult out;
  out.config = cfg;
  out.checkpoints = std::move(checkpoints);
  const std::size_t c = out.checkpoints.size();
  out.mean.assign(c, 0.0);
  out.stddev.assign(c, 0.0);
  const auto runs = static_cast<double>(cfg.runs);
  for (std::size_t i = 0; i < c; ++i) {
    double sum = 0.0;
    for (const auto& run : per_run) sum += run[i];
    const double mean = sum / runs;
    double sq = 0.0;
    for (const auto& run : per_run) sq += (run[i] - mean) * (run[i] - mean);
    out.mean[i] = mean;
    out.stddev[i] = std::sqrt(sq / runs);
  }
  for (const auto& run : per_run) out.final_regret.push_back(run.back());
  return out;
}

}  // namespace mnlbandit
