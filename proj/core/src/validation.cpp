#include "mnlbandit/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "mnlbandit/bounds.hpp"
#include "mnlbandit/environments.hpp"
#include "mnlbandit/feedback.hpp"
#include "mnlbandit/oracle.hpp"
#include "mnlbandit/pairwise_stats.hpp"

namespace mnlbandit {

namespace {

MnlInstance first_five(const MnlInstance& inst) {
  const auto th = inst.thetas();
  return MnlInstance(std::vector<double>(th.begin(), th.begin() + 5));
}

}  // namespace

CheckResult check_distribution_fidelity(const ValidationOptions& opts) {
  CheckResult res{"distribution_fidelity", true, {}};
  double worst_sum = 0.0;
  double worst_entry = 0.0;
  double worst_tv = 0.0;
  Rng rng(opts.seed);
  for (const auto& name : environment_names()) {
    const MnlInstance inst = first_five(make_environment(name));
    for (unsigned mask = 1; mask < 32; ++mask) {
      ItemList subset;
      for (Item i = 0; i < 5; ++i) {
        if (mask & (1u << i)) subset.push_back(i);
      }
      for (std::size_t m = 1; m <= subset.size(); ++m) {
        const auto exact = oracle::enumerate_ranking_distribution(inst, subset, m);
        double sum = 0.0;
        for (const auto& [ranking, p] : exact.outcomes) {
          const double q = ranking_prob(inst, ranking, subset);
          sum += q;
          worst_entry = std::max(worst_entry, std::abs(q - p));
        }
        worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
      }
    }
    const ItemList subset{0, 1, 2, 3};
    const auto exact = oracle::enumerate_ranking_distribution(inst, subset, 2);
    oracle::Histogram hist;
    for (std::uint64_t d = 0; d < opts.sampler_draws; ++d) hist[sample_top_m(inst, subset, 2, rng)] += 1.0;
    worst_tv = std::max(worst_tv, oracle::tv_distance(hist, exact));
  }
  res.passed = worst_sum <= 1e-10 && worst_entry <= 1e-12 && worst_tv <= 0.01;
  res.detail = fmt::format("max |sum-1| = {:.3e} (<= 1e-10), max entry diff = {:.3e} (<= 1e-12), "
                           "max sampler TV = {:.4f} (<= 0.01, {} draws)",
                           worst_sum, worst_entry, worst_tv, opts.sampler_draws);
  return res;
}

CheckResult check_rank_break_counts(const ValidationOptions& opts) {
  CheckResult res{"rank_break_counts", true, {}};
  Rng rng(opts.seed + 1);
  const MnlInstance inst(std::vector<double>(10, 1.0));
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < opts.rank_break_trials; ++trial) {
    const std::size_t k = 2 + uniform_index(rng, 9);
    const std::size_t m = 1 + uniform_index(rng, k - 1);
    ItemList items(10);
    std::iota(items.begin(), items.end(), Item{0});
    for (std::size_t i = 0; i < k; ++i) std::swap(items[i], items[i + uniform_index(rng, 10 - i)]);
    items.resize(k);
    RankingFeedback fb{items, sample_top_m(inst, items, m, rng)};
    auto pairs = rank_break(fb);
    const std::size_t expected = m * (2 * k - m - 1) / 2;
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
      return std::tie(a.winner, a.loser) < std::tie(b.winner, b.loser);
    });
    const bool unique = std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
    if (pairs.size() != expected || !unique) ++failures;
  }
  res.passed = failures == 0;
  res.detail = fmt::format("{} of {} random (k, m) draws violated |pairs| = m(2k-m-1)/2", failures,
                           opts.rank_break_trials);
  return res;
}

CheckResult check_concentration(const ValidationOptions& opts) {
  CheckResult res{"concentration", true, {}};
  constexpr std::uint64_t v = 200;
  constexpr double eta = 0.1;
  constexpr std::size_t rounds = 300;
  const MnlInstance inst = make_environment("geo");
  const ItemList played{0, 1, 2, 3};
  const double p01 = inst.pair_prob(0, 1);

  Rng rng(opts.seed + 2);
  std::size_t violations = 0;
  std::size_t reached = 0;
  for (std::size_t rep = 0; rep < opts.concentration_replications; ++rep) {
    PairwiseStats stats(inst.size());
    for (std::size_t t = 0; t < rounds; ++t) {
      stats.record(rank_break({played, sample_top_m(inst, played, 2, rng)}));
    }
    const auto nij = stats.comparisons(0, 1);
    if (nij < v) continue;
    ++reached;
    const double est = static_cast<double>(stats.wins(0, 1)) / static_cast<double>(nij);
    if (std::abs(est - p01) >= eta) ++violations;
  }
  const double freq = static_cast<double>(violations) / static_cast<double>(opts.concentration_replications);
  const double limit = 2.0 * std::exp(-2.0 * v * eta * eta) + 0.01;
  res.passed = freq <= limit;
  res.detail = fmt::format("violation frequency {:.5f} (<= {:.5f}); {} of {} replications reached n_ij >= {}", freq,
                           limit, reached, opts.concentration_replications, v);
  return res;
}

CheckResult check_bounds_arithmetic() {
  CheckResult res{"bounds_arithmetic", true, {}};
  const MnlInstance g1 = make_environment("g1");
  const double w1 = winner_lower_bound_constant(g1);
  const double w5 = winner_lower_bound_constant(g1, 5);
  const double f = confidence_burn_in(16, 1.0, 0.1);
  res.passed = std::abs(w1 - 4.0) <= 1e-9 && std::abs(w5 - 0.8) <= 1e-9 && std::abs(f - 5120.0) <= 1e-9;
  res.detail = fmt::format("g1 winner constant {:.12g} (4), m=5 {:.12g} (0.8), f(delta) {:.12g} (5120)", w1, w5, f);
  return res;
}

std::vector<CheckResult> run_validation(bool quick) {
  ValidationOptions opts;
  if (quick) {
    opts.rank_break_trials = 1000;
    opts.concentration_replications = 2000;
  }
  return {check_distribution_fidelity(opts), check_rank_break_counts(opts), check_concentration(opts),
          check_bounds_arithmetic()};
}

}  // namespace mnlbandit
