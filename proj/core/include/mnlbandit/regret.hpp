#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mnlbandit/mnl.hpp"

namespace mnlbandit {

/// Mean utility shortfall of the played set against the best item.
double instant_regret_winner(const MnlInstance& inst, std::span<const Item> played);

/// (sum of the k best utilities - sum over the played set) / k. The played
/// set must hold exactly k distinct items.
double instant_regret_topk(const MnlInstance& inst, std::span<const Item> played,
                           std::size_t k);

/// Exactly min(count, horizon) strictly increasing rounds in [1, horizon],
/// roughly geometric, always ending at `horizon`.
std::vector<Round> checkpoint_schedule(Round horizon, std::size_t count);

/// Cumulative regret sampled at a fixed checkpoint schedule.
class RegretTrajectory {
 public:
  RegretTrajectory(Objective objective, std::vector<Round> checkpoints);

  /// Adds round t's instantaneous regret. Rounds must arrive as 1, 2, 3, ...
  void add(double instant);

  Objective objective() const noexcept { return objective_; }
  const std::vector<Round>& checkpoints() const noexcept { return checkpoints_; }
  /// Cumulative regret at each checkpoint reached so far.
  const std::vector<double>& cumulative() const noexcept { return values_; }
  double total() const noexcept { return total_; }
  Round rounds() const noexcept { return t_; }

 private:
  Objective objective_;
  std::vector<Round> checkpoints_;
  std::vector<double> values_;
  double total_ = 0.0;
  Round t_ = 0;
  std::size_t next_ = 0;
};

}  // namespace mnlbandit
