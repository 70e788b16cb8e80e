#include "mnlbandit/maxmin_ucb.hpp"

#include <numeric>

#include <fmt/format.h>

namespace mnlbandit {

void validate_maxmin_params(const MaxMinParams& params, std::size_t n) {
  validate_alpha(params.alpha);
  if (params.m < 1 || params.m + 1 > params.k || params.k > n) {
    throw Error(Errc::invalid_parameter,
                fmt::format("MaxMin-UCB needs 1 <= m <= k - 1 and k <= n (k = {}, m = {}, n = {})",
                            params.k, params.m, n));
  }
}

MaxMinUcb::MaxMinUcb(std::size_t n, MaxMinParams params)
    : params_(params), stats_(n), all_items_(n) {
  validate_maxmin_params(params_, n);
  std::iota(all_items_.begin(), all_items_.end(), Item{0});
}

MaxMinRound MaxMinUcb::step(const MnlInstance& env, Rng& rng) {
  if (env.size() != stats_.size()) {
    throw Error(Errc::invalid_parameter, "environment size does not match the learner");
  }
  MaxMinRound out;
  out.t = t_;
  const UcbView u(stats_, t_, params_.alpha);

  ItemList cand = candidate_set(u, all_items_);
  out.candidates = cand;

  std::optional<Item> held;
  if (holding_ && std::find(cand.begin(), cand.end(), *holding_) != cand.end()) held = holding_;
  // Every item is beaten somewhere: fall back to the full item set.
  if (cand.empty()) cand = all_items_;

  ItemList played;
  if (cand.size() == 1) {
    held = cand.front();
    played = cand;
  } else {
    if (held) {
      played = {*held};
    } else {
      played = {cand[uniform_index(rng, cand.size())]};
    }
    ItemList pool;
    pool.reserve(all_items_.size() - 1);
    for (Item i : all_items_) {
      if (i != played.front()) pool.push_back(i);
    }
    played = build_s(u, std::move(played), std::move(pool), params_.m);
  }
  holding_ = held;

  out.feedback.order = sample_top_m(env, played, params_.m, rng);
  out.feedback.played_set = std::move(played);
  const auto outcomes = rank_break(out.feedback);
  stats_.record(outcomes);
  out.outcomes_recorded = outcomes.size();
  out.holding = holding_;
  ++t_;
  return out;
}

}  // namespace mnlbandit
