#include "mnlbandit/oracle.hpp"

#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "mnlbandit/error.hpp"

namespace mnlbandit::oracle {

double ExactDistribution::total() const {
  double s = 0.0;
  for (const auto& [_, p] : outcomes) s += p;
  return s;
}

double ExactDistribution::prob(const ItemList& ranking) const {
  for (const auto& [r, p] : outcomes) {
    if (r == ranking) return p;
  }
  return 0.0;
}

ExactDistribution enumerate_ranking_distribution(const MnlInstance& inst,
                                                 std::span<const Item> subset, std::size_t m) {
  if (subset.size() > 8) {
    throw Error(Errc::too_large, fmt::format("enumeration limited to 8 items, got {}", subset.size()));
  }
  validate_subset(inst, subset);
  if (m == 0 || m > subset.size()) {
    throw Error(Errc::invalid_parameter, fmt::format("ranking length {} not in [1, {}]", m, subset.size()));
  }
  const ItemList items(subset.begin(), subset.end());
  const auto theta = inst.thetas();

  ExactDistribution dist;
  ItemList prefix;
  std::vector<bool> used(items.size(), false);
  // Depth-first over ordered prefixes; each level divides by the utility
  // mass of the items not yet placed.
  std::function<void(double)> walk = [&](double prob) {
    if (prefix.size() == m) {
      dist.outcomes.emplace_back(prefix, prob);
      return;
    }
    double rest = 0.0;
    for (std::size_t p = 0; p < items.size(); ++p) {
      if (!used[p]) rest += theta[items[p]];
    }
    for (std::size_t p = 0; p < items.size(); ++p) {
      if (used[p]) continue;
      used[p] = true;
      prefix.push_back(items[p]);
      walk(prob * (theta[items[p]] / rest));
      prefix.pop_back();
      used[p] = false;
    }
  };
  walk(1.0);
  return dist;
}

ItemList best_subset_bruteforce(const MnlInstance& inst, std::size_t k, Objective objective) {
  const std::size_t n = inst.size();
  if (n > 20) throw Error(Errc::too_large, fmt::format("brute force limited to 20 items, got {}", n));
  if (k == 0 || k > n) throw Error(Errc::invalid_parameter, fmt::format("k = {} not in [1, {}]", k, n));
  const auto theta = inst.thetas();

  ItemList best;
  double best_value = -1.0;
  // Ties: lexicographically smallest sorted set.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (objective == Objective::top_k ? size != k : size > k) continue;
    ItemList set;
    double sum = 0.0;
    for (Item i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        set.push_back(i);
        sum += theta[i];
      }
    }
    const double value = sum / static_cast<double>(size);
    if (value > best_value || (value == best_value && set < best)) {
      best_value = value;
      best = std::move(set);
    }
  }
  return best;
}

double tv_distance(const Histogram& empirical, const ExactDistribution& exact) {
  double mass = 0.0;
  for (const auto& [_, c] : empirical) mass += c;
  if (!(mass > 0.0)) throw Error(Errc::invalid_parameter, "empirical histogram is empty");

  Histogram exact_map;
  for (const auto& [r, p] : exact.outcomes) exact_map[r] += p;
  for (const auto& [r, _] : empirical) {
    if (!exact_map.contains(r)) {
      throw Error(Errc::mismatched_spaces, "histogram outcome missing from the exact distribution");
    }
  }
  double sum = 0.0;
  for (const auto& [r, p] : exact_map) {
    const auto it = empirical.find(r);
    const double q = it == empirical.end() ? 0.0 : it->second / mass;
    sum += std::abs(q - p);
  }
  return 0.5 * sum;
}

}  // namespace mnlbandit::oracle
