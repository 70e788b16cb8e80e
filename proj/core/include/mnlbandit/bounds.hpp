#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mnlbandit/mnl.hpp"

namespace mnlbandit {

/// Multiplier of ln T in the winner-regret lower bound under winner feedback:
/// (n - 1) theta_{a*} / (min_{i != a*} theta_{a*} / theta_i - 1).
/// Throws Error(degenerate_instance) when the best item is not unique.
double winner_lower_bound_constant(const MnlInstance& inst);

/// The same constant under top-m ranking feedback (divided by m).
double winner_lower_bound_constant(const MnlInstance& inst, std::size_t m);

/// Pairwise-preference form: (n - 1) theta_{a*} / (4 (min_i p_{a* i} - 1/2)).
double winner_lower_bound_constant_pairwise(const MnlInstance& inst);

/// Multiplier of ln T in the top-k lower bound:
/// theta_(1) theta_(k+1) / Delta_(k) * (n - k) / k.
/// Throws Error(degenerate_instance) when Delta_(k) = 0.
double topk_lower_bound_constant(const MnlInstance& inst, std::size_t k);

/// Round after which every pairwise confidence interval holds with
/// probability 1 - delta: [2 alpha n^2 / ((2 alpha - 1) delta)]^(1/(2 alpha - 1)).
/// Overflows to +inf for alpha close to 1/2.
double confidence_burn_in(std::size_t n, double alpha, double delta);

struct BoundsQuery {
  std::size_t k = 10;
  std::size_t m = 5;
  double alpha = 0.51;
  double delta = 0.1;
  double horizon = 1e5;
};

/// Instance-dependent constants for both objectives. Entries that need a
/// strict gap the instance lacks are left empty and named in `degenerate`.
/// Per-item vectors are indexed by item and hold 0 at the best item.
struct BoundsReport {
  std::size_t n = 0;
  BoundsQuery query;

  std::optional<double> winner_lb_constant;
  std::optional<double> winner_lb_topm_constant;
  std::optional<double> winner_lb_pairwise_constant;
  std::optional<double> topk_lb_constant;
  double f_delta = 0.0;

  // Winner-regret upper-bound terms.
  std::vector<double> delta_pref;    // Delta_i = (theta* - theta_i) / (2 (theta* + theta_i))
  std::vector<double> delta_hat;     // theta* - theta_i
  std::vector<double> d_best;        // D_{a* i} = 4 alpha / Delta_i^2
  std::optional<double> d_sum;       // D = sum_{i<j} D_ij
  std::optional<double> d_max;       // max_i D_{a* i}
  double delta_hat_max = 0.0;
  std::optional<double> winner_upper_bound;  // full high-probability expression

  // Top-k upper-bound terms.
  double delta_prime_max = 0.0;
  std::vector<double> topk_dhat;     // D-hat_b for each b outside the top k, rank order
  std::optional<double> topk_log_coefficient;  // 4 alpha / k * sum_b (theta_k - theta_b) / Dhat_b^2
  std::optional<double> topk_dbar;   // summed slot complexities
  bool topk_dbar_tie_case = false;   // a tie rule was used for some term
  std::optional<double> topk_upper_bound;

  std::vector<std::string> degenerate;
};

BoundsReport compute_bounds(const MnlInstance& inst, const BoundsQuery& query);

/// "key = value" lines; vectors as comma-separated lists (1-based item order).
std::string format_bounds(const BoundsReport& report);
/// The same content as a JSON object.
std::string format_bounds_json(const BoundsReport& report);

}  // namespace mnlbandit
