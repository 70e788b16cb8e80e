#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mnlbandit/mnl.hpp"

namespace mnlbandit::oracle {

// Brute-force references for tests and the `validate` command. Nothing here
// calls back into the production probability or selection code.

struct ExactDistribution {
  std::vector<std::pair<ItemList, double>> outcomes;

  double total() const;
  /// Probability of `ranking`, 0 if it is not an outcome.
  double prob(const ItemList& ranking) const;
};

/// Every ordered m-tuple of distinct members of `subset`, with its exact
/// Plackett-Luce probability. Throws Error(too_large) for |subset| > 8.
ExactDistribution enumerate_ranking_distribution(const MnlInstance& inst,
                                                 std::span<const Item> subset,
                                                 std::size_t m);

/// Exhaustive argmax of mean utility over all size-k subsets (top-k) or all
/// non-empty subsets of size <= k (winner). Ties go to the lexicographically
/// smallest sorted subset. Throws Error(too_large) for n > 20.
ItemList best_subset_bruteforce(const MnlInstance& inst, std::size_t k,
                                Objective objective);

using Histogram = std::map<ItemList, double>;

/// Half the L1 distance between the normalised histogram and the exact law.
/// Throws Error(mismatched_spaces) if the histogram has an outcome the exact
/// distribution lacks.
double tv_distance(const Histogram& empirical, const ExactDistribution& exact);

}  // namespace mnlbandit::oracle
