#pragma once

#include <vector>

#include "mnlbandit/types.hpp"

namespace mnlbandit {

// What the environment returns for one round: the offered set and the
// ordered prefix of it that was revealed.
struct RankingFeedback {
  ItemList played_set;
  ItemList order;
};

struct PairwiseOutcome {
  Item winner;
  Item loser;

  friend bool operator==(const PairwiseOutcome&, const PairwiseOutcome&) = default;
};

/// Throws Error(invalid_ranking) if `order` is empty, longer than the played
/// set, repeats an item, or names an item that was not played.
void validate_feedback(const RankingFeedback& fb);

/// Rank-breaking: every revealed item beats every played item ranked below it.
///
/// Positions 1..min(|order|, |S|-1) each contribute one outcome per item of S
/// not yet ranked, so the result has m(2k-m-1)/2 entries for k = |S| and the
/// clamped m. Outcomes are listed by rank position, then by loser index.
std::vector<PairwiseOutcome> rank_break(const RankingFeedback& fb);

/// m(2k - m - 1) / 2 with m clamped to k - 1.
std::size_t rank_break_count(std::size_t set_size, std::size_t order_size);

}  // namespace mnlbandit
