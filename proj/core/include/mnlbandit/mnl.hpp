#pragma once

#include <span>
#include <string>
#include <vector>

#include "mnlbandit/types.hpp"

namespace mnlbandit {

/// Multinomial-logit choice model over n items with positive utilities.
///
/// The choice probability of item i from an offered set S is
/// theta_i / sum_{j in S} theta_j. Instances are immutable once built.
class MnlInstance {
 public:
  /// Throws Error(invalid_parameter) when fewer than two items are given or
  /// any utility is not a finite positive number.
  explicit MnlInstance(std::vector<double> theta);

  std::size_t size() const noexcept { return theta_.size(); }
  double theta(Item i) const;
  std::span<const double> thetas() const noexcept { return theta_; }

  /// Item with the largest utility, lowest index on ties.
  Item best_item() const noexcept { return order_.front(); }

  /// All items sorted by descending utility, lowest index first on ties.
  const ItemList& ranked_items() const noexcept { return order_; }

  /// The k best items in rank order. Requires 1 <= k <= n.
  ItemList top_k_set(std::size_t k) const;

  /// theta_(k) - theta_(k+1) with 1-based ranks. Zero means the instance is
  /// degenerate for the top-k objective. Requires 1 <= k < n.
  double gap_k(std::size_t k) const;
  bool degenerate_for_top_k(std::size_t k) const { return gap_k(k) == 0.0; }

  /// theta_{a*} - theta_i.
  double winner_gap(Item i) const;

  /// Pairwise preference theta_i / (theta_i + theta_j).
  double pair_prob(Item i, Item j) const;

  /// Returns the instance with every utility multiplied by c > 0.
  MnlInstance scale(double c) const;

  bool operator==(const MnlInstance& other) const { return theta_ == other.theta_; }

 private:
  std::vector<double> theta_;
  ItemList order_;
};

/// Probability that `i` wins when `subset` is offered (0 if i is not offered).
double choice_prob(const MnlInstance& inst, Item i, std::span<const Item> subset);

/// Plackett-Luce probability of observing `ranking` as the top-|ranking| list
/// drawn from `subset`.
double ranking_prob(const MnlInstance& inst, std::span<const Item> ranking,
                    std::span<const Item> subset);

/// Draws a top-m ranking from `subset` by successive winner draws without
/// replacement; m is clamped to |subset|. When one item remains it is appended
/// without consuming randomness.
ItemList sample_top_m(const MnlInstance& inst, std::span<const Item> subset,
                      std::size_t m, Rng& rng);

/// Throws unless `subset` is non-empty, in range, and free of duplicates.
void validate_subset(const MnlInstance& inst, std::span<const Item> subset);

/// Plain-text form: "n = <count>" and "theta = <v1>, <v2>, ..." lines.
std::string format_instance(const MnlInstance& inst);
MnlInstance parse_instance(const std::string& text);

}  // namespace mnlbandit
