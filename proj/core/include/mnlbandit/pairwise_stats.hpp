#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "mnlbandit/feedback.hpp"
#include "mnlbandit/types.hpp"

namespace mnlbandit {

/// Pairwise win counts W, with W(i, j) the number of rank-broken duels in
/// which i beat j. N = W + W^T and the empirical preference W / N are derived
/// on demand; nothing but W is stored.
class PairwiseStats {
 public:
  explicit PairwiseStats(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  std::uint64_t wins(Item i, Item j) const { return w_[i * n_ + j]; }
  std::uint64_t comparisons(Item i, Item j) const {
    return w_[i * n_ + j] + w_[j * n_ + i];
  }

  /// W / N, reported as 1/2 for pairs never compared (and on the diagonal).
  double empirical_pref(Item i, Item j) const;

  /// Adds one win per outcome. Throws Error(invalid_outcome) for a
  /// self-duel and Error(index_out_of_range) for bad indices; on error no
  /// count is changed.
  void record(std::span<const PairwiseOutcome> outcomes);

  /// Total comparisons over unordered pairs.
  std::uint64_t total_comparisons() const;

  /// "i,j,wins" rows (1-based), one per ordered pair with a non-zero count.
  void dump_csv(std::ostream& os) const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

/// Throws Error(invalid_parameter) unless alpha > 1/2.
void validate_alpha(double alpha);

/// u_ij = p_ij + sqrt(alpha ln t / n_ij); 1/2 on the diagonal and +inf for
/// pairs never compared.
double ucb(const PairwiseStats& stats, Item i, Item j, Round t, double alpha);

/// Read-only view of the UCB matrix at a fixed round. Cheap to copy.
class UcbView {
 public:
  UcbView(const PairwiseStats& stats, Round t, double alpha)
      : stats_(&stats), alpha_log_t_(alpha * std::log(static_cast<double>(t))) {}

  std::size_t size() const noexcept { return stats_->size(); }

  double operator()(Item i, Item j) const {
    if (i == j) return 0.5;
    const auto nij = stats_->comparisons(i, j);
    if (nij == 0) return std::numeric_limits<double>::infinity();
    const double n = static_cast<double>(nij);
    return static_cast<double>(stats_->wins(i, j)) / n + std::sqrt(alpha_log_t_ / n);
  }

  // u_ij > 1/2 without the square root: with d = n/2 - w >= 0 the test is
  // alpha ln t * n > d^2.
  bool above_half(Item i, Item j) const {
    if (i == j) return false;
    const auto w = stats_->wins(i, j);
    const auto nij = w + stats_->wins(j, i);
    if (nij == 0 || 2 * w > nij) return true;
    const double n = static_cast<double>(nij);
    const double d = 0.5 * n - static_cast<double>(w);
    return alpha_log_t_ * n > d * d;
  }

 private:
  const PairwiseStats* stats_;
  double alpha_log_t_;
};

/// Dense UCB matrix, mostly useful for tests and fixed scenarios.
class DenseUcb {
 public:
  explicit DenseUcb(std::size_t n) : n_(n), u_(n * n, 0.5) {}
  DenseUcb(std::size_t n, std::vector<double> row_major);

  std::size_t size() const noexcept { return n_; }
  double operator()(Item i, Item j) const { return u_[i * n_ + j]; }
  double& at(Item i, Item j) { return u_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> u_;
};

template <class U>
concept UcbAccessor = requires(const U& u, Item i, Item j) {
  { u(i, j) } -> std::convertible_to<double>;
  { u.size() } -> std::convertible_to<std::size_t>;
};

template <UcbAccessor U>
bool ucb_above_half(const U& u, Item i, Item j) {
  if constexpr (requires { { u.above_half(i, j) } -> std::convertible_to<bool>; }) {
    return u.above_half(i, j);
  } else {
    return u(i, j) > 0.5;
  }
}

}  // namespace mnlbandit
