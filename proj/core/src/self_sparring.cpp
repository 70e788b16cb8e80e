#include "mnlbandit/self_sparring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "mnlbandit/error.hpp"

namespace mnlbandit {

void validate_self_sparring_params(const SelfSparringParams& params, std::size_t n) {
  if (params.k < 2 || params.k > n) {
    throw Error(Errc::invalid_parameter,
                fmt::format("Sp-TS needs 2 <= k <= n (k = {}, n = {})", params.k, n));
  }
  if (params.objective == Objective::winner && (params.m < 1 || params.m > params.k)) {
    throw Error(Errc::invalid_parameter,
                fmt::format("Sp-TS needs 1 <= m <= k (m = {}, k = {})", params.m, params.k));
  }
}

SelfSparringTs::SelfSparringTs(std::size_t n, SelfSparringParams params)
    : params_(params), a_(n, 1), b_(n, 1) {
  validate_self_sparring_params(params_, n);
}

double sample_beta(double a, double b, Rng& rng) {
  std::gamma_distribution<double> ga(a, 1.0);
  std::gamma_distribution<double> gb(b, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  return x / (x + y);
}

void SelfSparringTs::record(std::span<const PairwiseOutcome> outcomes) {
  for (const auto& o : outcomes) {
    if (o.winner >= a_.size() || o.loser >= a_.size()) {
      throw Error(Errc::index_out_of_range, "outcome item out of range");
    }
    if (o.winner == o.loser) throw Error(Errc::invalid_outcome, "item cannot beat itself");
  }
  for (const auto& o : outcomes) {
    ++a_[o.winner];
    ++b_[o.loser];
  }
}

RankingFeedback SelfSparringTs::step(const MnlInstance& env, Rng& rng) {
  const std::size_t n = a_.size();
  if (env.size() != n) throw Error(Errc::invalid_parameter, "environment size does not match the learner");

  std::vector<double> score(n);
  for (Item i = 0; i < n; ++i) {
    score[i] = sample_beta(static_cast<double>(a_[i]), static_cast<double>(b_[i]), rng);
  }
  ItemList order(n);
  std::iota(order.begin(), order.end(), Item{0});
  std::stable_sort(order.begin(), order.end(), [&](Item x, Item y) { return score[x] > score[y]; });

  RankingFeedback fb;
  fb.played_set.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(params_.k));
  std::sort(fb.played_set.begin(), fb.played_set.end());
  const std::size_t len = params_.objective == Objective::winner ? params_.m : params_.k;
  fb.order = sample_top_m(env, fb.played_set, len, rng);
  record(rank_break(fb));
  ++t_;
  return fb;
}

}  // namespace mnlbandit
