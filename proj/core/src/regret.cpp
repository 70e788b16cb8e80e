#include "mnlbandit/regret.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mnlbandit/error.hpp"

namespace mnlbandit {

double instant_regret_winner(const MnlInstance& inst, std::span<const Item> played) {
  validate_subset(inst, played);
  const double best = inst.theta(inst.best_item());
  double sum = 0.0;
  for (Item i : played) sum += best - inst.theta(i);
  return sum / static_cast<double>(played.size());
}

double instant_regret_topk(const MnlInstance& inst, std::span<const Item> played, std::size_t k) {
  validate_subset(inst, played);
  if (played.size() != k) {
    throw Error(Errc::invalid_subset,
                fmt::format("top-k regret needs exactly {} items, got {}", k, played.size()));
  }
  double best = 0.0;
  for (Item i : inst.top_k_set(k)) best += inst.theta(i);
  double got = 0.0;
  for (Item i : played) got += inst.theta(i);
  // Tied utilities can leave a rounding residue of either sign.
  return std::max(0.0, (best - got) / static_cast<double>(k));
}

std::vector<Round> checkpoint_schedule(Round horizon, std::size_t count) {
  if (horizon == 0 || count == 0) {
    throw Error(Errc::invalid_parameter, "checkpoint schedule needs horizon >= 1 and count >= 1");
  }
  std::vector<Round> out;
  if (count >= horizon) {
    for (Round t = 1; t <= horizon; ++t) out.push_back(t);
    return out;
  }
  out.reserve(count);
  const double log_h = std::log(static_cast<double>(horizon));
  for (std::size_t i = 0; i < count; ++i) {
    // Leave room for the remaining points below the horizon.
    const Round ceiling = horizon - (count - 1 - i);
    const double frac = count == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    Round t = static_cast<Round>(std::llround(std::exp(frac * log_h)));
    const Round floor = out.empty() ? 1 : out.back() + 1;
    t = std::clamp(t, floor, ceiling);
    out.push_back(t);
  }
  out.back() = horizon;
  return out;
}

RegretTrajectory::RegretTrajectory(Objective objective, std::vector<Round> checkpoints)
    : objective_(objective), checkpoints_(std::move(checkpoints)) {
  if (!std::is_sorted(checkpoints_.begin(), checkpoints_.end()) ||
      std::adjacent_find(checkpoints_.begin(), checkpoints_.end()) != checkpoints_.end() ||
      (!checkpoints_.empty() && checkpoints_.front() == 0)) {
    throw Error(Errc::invalid_parameter, "checkpoints must be strictly increasing rounds >= 1");
  }
  values_.reserve(checkpoints_.size());
}

void RegretTrajectory::add(double instant) {
  ++t_;
  total_ += instant;
  if (next_ < checkpoints_.size() && checkpoints_[next_] == t_) {
    values_.push_back(total_);
    ++next_;
  }
}

}  // namespace mnlbandit
