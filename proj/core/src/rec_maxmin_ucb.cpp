#include "mnlbandit/rec_maxmin_ucb.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "mnlbandit/error.hpp"
#include "mnlbandit/maxmin_ucb.hpp"

namespace mnlbandit {

void validate_rec_maxmin_params(const RecMaxMinParams& params, std::size_t n) {
  validate_alpha(params.alpha);
  if (params.k < 2 || params.k >= n) {
    throw Error(Errc::invalid_parameter,
                fmt::format("Rec-MaxMin-UCB needs 2 <= k < n (k = {}, n = {})", params.k, n));
  }
}

RecMaxMinUcb::RecMaxMinUcb(std::size_t n, RecMaxMinParams params)
    : params_(params), stats_(n), slots_(params.k) {
  validate_rec_maxmin_params(params_, n);
}

ItemList RecMaxMinUcb::held_items() const {
  ItemList out;
  for (const auto& s : slots_) {
    if (s) out.push_back(*s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool contains(const ItemList& xs, Item x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

void remove_item(ItemList& xs, Item x) { std::erase(xs, x); }

}  // namespace

RecMaxMinRound RecMaxMinUcb::step(const MnlInstance& env, Rng& rng) {
  if (env.size() != stats_.size()) {
    throw Error(Errc::invalid_parameter, "environment size does not match the learner");
  }
  const std::size_t k = params_.k;
  RecMaxMinRound out;
  out.t = t_;
  const UcbView u(stats_, t_, params_.alpha);

  ItemList pool(stats_.size());
  std::iota(pool.begin(), pool.end(), Item{0});
  ItemList played;
  played.reserve(k);
  std::vector<std::optional<Item>> next(k);

  for (std::size_t h = 0; h + 1 < k; ++h) {
    const ItemList cand = candidate_set(u, pool);
    if (slots_[h] && contains(cand, *slots_[h])) {
      next[h] = slots_[h];
      remove_item(pool, *slots_[h]);
      played.push_back(*slots_[h]);
      continue;
    }
    // Slot h lost its item (or never had one): refill it with the strongest
    // challenger of what is already played, then complete the play.
    played = build_s(u, std::move(played), pool, 1);
    const Item fresh = played.back();
    next[h] = fresh;
    remove_item(pool, fresh);
    played = build_s(u, std::move(played), pool, k - played.size());
    // Later slots carry over to be re-checked next round.
    for (std::size_t r = h + 1; r < k; ++r) {
      if (slots_[r] && *slots_[r] != fresh) next[r] = slots_[r];
    }
    out.early_exit = true;
    break;
  }

  if (!out.early_exit) {
    const ItemList cand = candidate_set(u, pool);
    if (slots_[k - 1] && contains(cand, *slots_[k - 1])) next[k - 1] = slots_[k - 1];
    if (cand.size() == 1) {
      next[k - 1] = cand.front();
      played.push_back(cand.front());
    } else {
      played = build_s(u, std::move(played), pool, 1);
    }
  }
  slots_ = std::move(next);

  out.feedback.order = sample_top_m(env, played, k, rng);
  out.feedback.played_set = std::move(played);
  stats_.record(rank_break(out.feedback));
  out.slots = slots_;
  ++t_;
  return out;
}

}  // namespace mnlbandit
