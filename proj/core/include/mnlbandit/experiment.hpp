#pragma once

#include <vector>

#include "mnlbandit/config.hpp"
#include "mnlbandit/pairwise_stats.hpp"
#include "mnlbandit/regret.hpp"

namespace mnlbandit {

struct AggregateResult {
  ExperimentConfig config;
  std::vector<Round> checkpoints;
  std::vector<double> mean;    // mean cumulative regret per checkpoint
  std::vector<double> stddev;  // population standard deviation across runs
  std::vector<double> final_regret;  // per run, in run-index order
};

/// One seeded trajectory (seed = cfg.seed + run_index) sampled at
/// `checkpoints`. The algorithm is chosen by cfg.algorithm and the regret
/// charged by cfg.objective. If `final_stats` is set it receives the
/// pairwise win counts accumulated over the run.
RegretTrajectory run_trajectory(const ExperimentConfig& cfg, const MnlInstance& env,
                                std::size_t run_index, std::vector<Round> checkpoints,
                                PairwiseStats* final_stats = nullptr);

/// All runs of a config, aggregated in run-index order. With threads != 1
/// runs are spread over worker threads; the result does not depend on the
/// thread count.
AggregateResult run_experiment(const ExperimentConfig& cfg);

/// Same as above with an explicit checkpoint schedule (must end at horizon).
AggregateResult run_experiment(const ExperimentConfig& cfg, std::vector<Round> checkpoints);

}  // namespace mnlbandit
