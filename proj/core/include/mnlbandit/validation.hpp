#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mnlbandit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured statistics
};

struct ValidationOptions {
  std::uint64_t sampler_draws = 200000;
  std::size_t rank_break_trials = 10000;
  std::size_t concentration_replications = 10000;
  std::uint64_t seed = 20240601;
};

/// Exact ranking probabilities against enumeration on the first five items
/// of every built-in environment, plus sampler TV distance.
CheckResult check_distribution_fidelity(const ValidationOptions& opts);
/// Rank-breaking output sizes on random (k, m) pairs.
CheckResult check_rank_break_counts(const ValidationOptions& opts);
/// Deviation frequency of rank-broken pairwise estimates at v = 200, eta = 0.1.
CheckResult check_concentration(const ValidationOptions& opts);
/// Lower-bound constants on hand-computed values.
CheckResult check_bounds_arithmetic();

std::vector<CheckResult> run_validation(bool quick);

}  // namespace mnlbandit
