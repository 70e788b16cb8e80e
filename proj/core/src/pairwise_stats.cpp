#include "mnlbandit/pairwise_stats.hpp"

#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mnlbandit/error.hpp"

namespace mnlbandit {

PairwiseStats::PairwiseStats(std::size_t n) : n_(n), w_(n * n, 0) {
  if (n < 2) throw Error(Errc::invalid_parameter, "pairwise stats need at least 2 items");
}

double PairwiseStats::empirical_pref(Item i, Item j) const {
  const auto nij = comparisons(i, j);
  if (i == j || nij == 0) return 0.5;
  return static_cast<double>(wins(i, j)) / static_cast<double>(nij);
}

void PairwiseStats::record(std::span<const PairwiseOutcome> outcomes) {
  for (const auto& o : outcomes) {
    if (o.winner >= n_ || o.loser >= n_) {
      throw Error(Errc::index_out_of_range,
                  fmt::format("outcome ({}, {}) out of range for {} items", o.winner + 1, o.loser + 1, n_));
    }
    if (o.winner == o.loser) {
      throw Error(Errc::invalid_outcome, fmt::format("item {} cannot beat itself", o.winner + 1));
    }
  }
  for (const auto& o : outcomes) ++w_[o.winner * n_ + o.loser];
}

std::uint64_t PairwiseStats::total_comparisons() const {
  std::uint64_t total = 0;
  for (auto v : w_) total += v;
  return total;
}

void PairwiseStats::dump_csv(std::ostream& os) const {
  os << "i,j,wins\n";
  for (Item i = 0; i < n_; ++i) {
    for (Item j = 0; j < n_; ++j) {
      if (const auto w = wins(i, j); w != 0) fmt::print(os, "{},{},{}\n", i + 1, j + 1, w);
    }
  }
}

void validate_alpha(double alpha) {
  if (!(alpha > 0.5) || !std::isfinite(alpha)) {
    throw Error(Errc::invalid_parameter, fmt::format("alpha = {} must exceed 1/2", alpha));
  }
}

double ucb(const PairwiseStats& stats, Item i, Item j, Round t, double alpha) {
  validate_alpha(alpha);
  if (t < 1) throw Error(Errc::invalid_parameter, "round index must be >= 1");
  if (i >= stats.size() || j >= stats.size()) {
    throw Error(Errc::index_out_of_range, fmt::format("pair ({}, {}) out of range", i + 1, j + 1));
  }
  return UcbView(stats, t, alpha)(i, j);
}

DenseUcb::DenseUcb(std::size_t n, std::vector<double> row_major) : n_(n), u_(std::move(row_major)) {
  if (u_.size() != n * n) {
    throw Error(Errc::invalid_parameter,
                fmt::format("UCB matrix needs {} entries, got {}", n * n, u_.size()));
  }
}

}  // namespace mnlbandit
