#include "mnlbandit/feedback.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "mnlbandit/error.hpp"

namespace mnlbandit {

void validate_feedback(const RankingFeedback& fb) {
  if (fb.order.empty() || fb.order.size() > fb.played_set.size()) {
    throw Error(Errc::invalid_ranking,
                fmt::format("ranking length {} not in [1, {}]", fb.order.size(), fb.played_set.size()));
  }
  ItemList played(fb.played_set);
  std::sort(played.begin(), played.end());
  if (std::adjacent_find(played.begin(), played.end()) != played.end()) {
    throw Error(Errc::invalid_subset, "played set repeats an item");
  }
  for (Item r : fb.order) {
    if (!std::binary_search(played.begin(), played.end(), r)) {
      throw Error(Errc::invalid_ranking, fmt::format("ranked item {} was not played", r + 1));
    }
  }
  ItemList ranked(fb.order);
  std::sort(ranked.begin(), ranked.end());
  if (auto dup = std::adjacent_find(ranked.begin(), ranked.end()); dup != ranked.end()) {
    throw Error(Errc::invalid_ranking, fmt::format("ranked item {} repeated", *dup + 1));
  }
}

std::size_t rank_break_count(std::size_t set_size, std::size_t order_size) {
  if (set_size == 0) return 0;
  const std::size_t m = std::min(order_size, set_size - 1);
  return m * (2 * set_size - m - 1) / 2;
}

std::vector<PairwiseOutcome> rank_break(const RankingFeedback& fb) {
  validate_feedback(fb);
  const std::size_t k = fb.played_set.size();
  const std::size_t m = std::min(fb.order.size(), k - 1);

  ItemList unranked(fb.played_set);
  std::sort(unranked.begin(), unranked.end());

  std::vector<PairwiseOutcome> out;
  out.reserve(rank_break_count(k, fb.order.size()));
  for (std::size_t pos = 0; pos < m; ++pos) {
    const Item winner = fb.order[pos];
    unranked.erase(std::lower_bound(unranked.begin(), unranked.end(), winner));
    for (Item loser : unranked) out.push_back({winner, loser});
  }
  return out;
}

}  // namespace mnlbandit
