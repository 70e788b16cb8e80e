#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mnlbandit/error.hpp"
#include "mnlbandit/feedback.hpp"
#include "mnlbandit/mnl.hpp"
#include "mnlbandit/pairwise_stats.hpp"

namespace mnlbandit {

/// Items of `pool` whose UCB exceeds 1/2 against every other pool member
/// (the potential Condorcet winners). Preserves pool order; may be empty.
template <UcbAccessor U>
ItemList candidate_set(const U& u, std::span<const Item> pool) {
  ItemList out;
  for (Item i : pool) {
    bool ok = true;
    for (Item j : pool) {
      if (j != i && !ucb_above_half(u, i, j)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(i);
  }
  return out;
}

/// Max-min set builder. Extends `seed` with exactly `ell` items drawn from
/// `pool`.
///
/// Phase 1 repeatedly absorbs the pool's candidate set while it is non-empty
/// and strictly smaller than the number of slots left. Phase 2 fills the
/// remaining slots one at a time with the pool item maximising
/// min_{i in S} u(c, i); with an empty S the minimum runs over the rest of
/// the pool instead. Ties go to the lowest item index.
///
/// Throws Error(insufficient_pool) if |pool| < ell and
/// Error(invalid_parameter) if seed and pool overlap.
template <UcbAccessor U>
ItemList build_s(const U& u, ItemList seed, ItemList pool, std::size_t ell) {
  if (pool.size() < ell) {
    throw Error(Errc::insufficient_pool,
                "build_s: pool has " + std::to_string(pool.size()) +
                    " items but " + std::to_string(ell) + " were requested");
  }
  std::sort(pool.begin(), pool.end());
  for (Item s : seed) {
    if (std::binary_search(pool.begin(), pool.end(), s)) {
      throw Error(Errc::invalid_parameter, "build_s: seed set and pool overlap");
    }
  }

  std::size_t remaining = ell;
  while (remaining > 0) {
    const ItemList cand = candidate_set(u, pool);
    if (cand.empty() || cand.size() >= remaining) break;
    for (Item c : cand) seed.push_back(c);
    std::erase_if(pool, [&](Item x) { return std::binary_search(cand.begin(), cand.end(), x); });
    remaining -= cand.size();
  }
  if (remaining == 0) return seed;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // worst[c] = min_{i in S} u(c, i), maintained incrementally as S grows.
  std::vector<double> worst(pool.size(), kInf);
  for (std::size_t p = 0; p < pool.size(); ++p) {
    for (Item s : seed) worst[p] = std::min(worst[p], static_cast<double>(u(pool[p], s)));
  }

  std::vector<bool> taken(pool.size(), false);
  for (; remaining > 0; --remaining) {
    std::size_t best = pool.size();
    double best_val = -kInf;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (taken[p]) continue;
      double val = worst[p];
      if (seed.empty()) {
        val = kInf;
        for (std::size_t q = 0; q < pool.size(); ++q) {
          if (q != p && !taken[q]) val = std::min(val, static_cast<double>(u(pool[p], pool[q])));
        }
      }
      if (best == pool.size() || val > best_val) {
        best = p;
        best_val = val;
      }
    }
    taken[best] = true;
    const Item added = pool[best];
    seed.push_back(added);
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (!taken[p]) worst[p] = std::min(worst[p], static_cast<double>(u(pool[p], added)));
    }
  }
  return seed;
}

struct MaxMinParams {
  std::size_t k = 10;  // largest subset the learner may play
  std::size_t m = 5;   // length of the revealed ranking, m <= k - 1
  double alpha = 0.51;
};

/// Throws Error(invalid_parameter) unless 1 <= m, m + 1 <= k <= n and
/// alpha > 1/2.
void validate_maxmin_params(const MaxMinParams& params, std::size_t n);

/// Diagnostics of one MaxMin-UCB round.
struct MaxMinRound {
  Round t = 0;
  RankingFeedback feedback;
  ItemList candidates;             // C_t before the empty-set reset
  std::optional<Item> holding;     // B_t after the round
  std::size_t outcomes_recorded = 0;
};

/// MaxMin-UCB for winner-regret with top-m ranking feedback.
///
/// Each round plays either the singleton candidate (when exactly one item is
/// a potential Condorcet winner) or a set of m + 1 items seeded by the held
/// item, or by a uniformly random candidate, and completed by build_s.
class MaxMinUcb {
 public:
  MaxMinUcb(std::size_t n, MaxMinParams params);

  MaxMinRound step(const MnlInstance& env, Rng& rng);

  const PairwiseStats& stats() const noexcept { return stats_; }
  const MaxMinParams& params() const noexcept { return params_; }
  std::optional<Item> holding() const noexcept { return holding_; }
  /// Index of the next round to be played.
  Round round() const noexcept { return t_; }

 private:
  MaxMinParams params_;
  PairwiseStats stats_;
  std::optional<Item> holding_;
  Round t_ = 1;
  ItemList all_items_;
};

}  // namespace mnlbandit
