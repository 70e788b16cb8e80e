#pragma once

#include <optional>
#include <vector>

#include "mnlbandit/feedback.hpp"
#include "mnlbandit/mnl.hpp"
#include "mnlbandit/pairwise_stats.hpp"

namespace mnlbandit {

struct RecMaxMinParams {
  std::size_t k = 10;
  double alpha = 0.51;
};

/// Throws Error(invalid_parameter) unless 2 <= k < n and alpha > 1/2.
void validate_rec_maxmin_params(const RecMaxMinParams& params, std::size_t n);

struct RecMaxMinRound {
  Round t = 0;
  RankingFeedback feedback;
  std::vector<std::optional<Item>> slots;  // B_t(1..k) after the round
  bool early_exit = false;                 // a slot was (re)filled by build_s
};

/// Rec-MaxMin-UCB for top-k regret with full-ranking feedback.
///
/// Keeps k ordered holding slots. Slots are confirmed front to back against
/// the candidate set of the shrinking pool; the first unconfirmed slot is
/// refilled by build_s and the rest of the size-k play is completed by
/// build_s. Once all k - 1 leading slots hold, only the last position is
/// contested.
class RecMaxMinUcb {
 public:
  RecMaxMinUcb(std::size_t n, RecMaxMinParams params);

  RecMaxMinRound step(const MnlInstance& env, Rng& rng);

  const PairwiseStats& stats() const noexcept { return stats_; }
  const RecMaxMinParams& params() const noexcept { return params_; }
  const std::vector<std::optional<Item>>& slots() const noexcept { return slots_; }
  /// Occupied slots as a sorted item list.
  ItemList held_items() const;
  Round round() const noexcept { return t_; }

 private:
  RecMaxMinParams params_;
  PairwiseStats stats_;
  std::vector<std::optional<Item>> slots_;
  Round t_ = 1;
};

}  // namespace mnlbandit
