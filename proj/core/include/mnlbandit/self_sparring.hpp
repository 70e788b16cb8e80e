#pragma once

#include <cstdint>
#include <vector>

#include "mnlbandit/feedback.hpp"
#include "mnlbandit/mnl.hpp"

namespace mnlbandit {

struct SelfSparringParams {
  std::size_t k = 10;
  std::size_t m = 5;  // ranking length for the winner objective
  Objective objective = Objective::winner;
};

void validate_self_sparring_params(const SelfSparringParams& params, std::size_t n);

/// Self-sparring with Thompson sampling over per-item Beta posteriors.
///
/// Every round draws one score per item from Beta(a_i, b_i), plays the k
/// highest-scoring items, and credits each rank-broken outcome (w, l) as a
/// success for w and a failure for l. The winner objective reveals a top-m
/// ranking; the top-k objective reveals the full ranking.
class SelfSparringTs {
 public:
  SelfSparringTs(std::size_t n, SelfSparringParams params);

  RankingFeedback step(const MnlInstance& env, Rng& rng);

  /// Posterior update for a batch of outcomes; exposed for tests.
  void record(std::span<const PairwiseOutcome> outcomes);

  std::uint64_t successes(Item i) const { return a_.at(i); }
  std::uint64_t failures(Item i) const { return b_.at(i); }
  const SelfSparringParams& params() const noexcept { return params_; }
  Round round() const noexcept { return t_; }

 private:
  SelfSparringParams params_;
  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> b_;
  Round t_ = 1;
};

/// Beta(a, b) draw via two gamma variates.
double sample_beta(double a, double b, Rng& rng);

}  // namespace mnlbandit
