#include "mnlbandit/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "mnlbandit/error.hpp"

namespace mnlbandit {

namespace {

double pref(double a, double b) { return a / (a + b); }

// theta of the item at 1-based rank r.
double ranked_theta(const MnlInstance& inst, std::size_t r) {
  return inst.theta(inst.ranked_items()[r - 1]);
}

// x ln x with the x -> 0 limit.
double x_log_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double winner_lower_bound_constant(const MnlInstance& inst) {
  const double best = ranked_theta(inst, 1);
  const double second = ranked_theta(inst, 2);
  if (second >= best) {
    throw Error(Errc::degenerate_instance, "winner lower bound needs a unique best item");
  }
  const auto n = static_cast<double>(inst.size());
  return (n - 1.0) * best / (best / second - 1.0);
}

double winner_lower_bound_constant(const MnlInstance& inst, std::size_t m) {
  if (m == 0) throw Error(Errc::invalid_parameter, "ranking length m must be >= 1");
  return winner_lower_bound_constant(inst) / static_cast<double>(m);
}

double winner_lower_bound_constant_pairwise(const MnlInstance& inst) {
  const double best = ranked_theta(inst, 1);
  const double second = ranked_theta(inst, 2);
  if (second >= best) {
    throw Error(Errc::degenerate_instance, "winner lower bound needs a unique best item");
  }
  const auto n = static_cast<double>(inst.size());
  return (n - 1.0) * best / (4.0 * (pref(best, second) - 0.5));
}

double topk_lower_bound_constant(const MnlInstance& inst, std::size_t k) {
  const double gap = inst.gap_k(k);
  if (gap <= 0.0) {
    throw Error(Errc::degenerate_instance, fmt::format("top-{} lower bound needs theta_(k) > theta_(k+1)", k));
  }
  const auto n = static_cast<double>(inst.size());
  const auto kk = static_cast<double>(k);
  return ranked_theta(inst, 1) * ranked_theta(inst, k + 1) / gap * (n - kk) / kk;
}

double confidence_burn_in(std::size_t n, double alpha, double delta) {
  if (!(alpha > 0.5)) throw Error(Errc::invalid_parameter, "alpha must exceed 1/2");
  if (!(delta > 0.0 && delta < 1.0)) throw Error(Errc::invalid_parameter, "delta must lie in (0, 1)");
  const double nn = static_cast<double>(n);
  const double base = 2.0 * alpha * nn * nn / ((2.0 * alpha - 1.0) * delta);
  return std::pow(base, 1.0 / (2.0 * alpha - 1.0));
}

BoundsReport compute_bounds(const MnlInstance& inst, const BoundsQuery& q) {
  const std::size_t n = inst.size();
  if (q.m == 0 || q.k == 0 || q.k > n) {
    throw Error(Errc::invalid_parameter, fmt::format("bounds need m >= 1 and 1 <= k <= n (k = {}, m = {})", q.k, q.m));
  }
  if (!(q.horizon >= 1.0)) throw Error(Errc::invalid_parameter, "horizon must be >= 1");

  BoundsReport r;
  r.n = n;
  r.query = q;
  r.f_delta = confidence_burn_in(n, q.alpha, q.delta);
  const double log_t = std::log(q.horizon);

  // Winner objective.
  const Item best = inst.best_item();
  const double tb = inst.theta(best);
  r.delta_pref.assign(n, 0.0);
  r.delta_hat.assign(n, 0.0);
  r.d_best.assign(n, 0.0);
  for (Item i = 0; i < n; ++i) {
    const double ti = inst.theta(i);
    r.delta_hat[i] = tb - ti;
    r.delta_pref[i] = (tb - ti) / (2.0 * (tb + ti));
    r.delta_hat_max = std::max(r.delta_hat_max, r.delta_hat[i]);
  }
  try {
    r.winner_lb_constant = winner_lower_bound_constant(inst);
    r.winner_lb_topm_constant = winner_lower_bound_constant(inst, q.m);
    r.winner_lb_pairwise_constant = winner_lower_bound_constant_pairwise(inst);

    double d_sum = 0.0;
    double d_max = 0.0;
    for (Item i = 0; i < n; ++i) {
      if (i == best) continue;
      r.d_best[i] = 4.0 * q.alpha / (r.delta_pref[i] * r.delta_pref[i]);
      d_max = std::max(d_max, r.d_best[i]);
    }
    for (Item i = 0; i < n; ++i) {
      for (Item j = i + 1; j < n; ++j) {
        if (i == best || j == best) {
          d_sum += r.d_best[i == best ? j : i];
        } else {
          const double lo = std::min(r.delta_pref[i] * r.delta_pref[i], r.delta_pref[j] * r.delta_pref[j]);
          d_sum += 4.0 * q.alpha / lo;
        }
      }
    }
    r.d_sum = d_sum;
    r.d_max = d_max;
    double tail = 0.0;
    for (Item i = 0; i < n; ++i) {
      if (i != best) tail += d_max * r.delta_hat[i];
    }
    r.winner_upper_bound = (2.0 * r.f_delta + x_log_x(2.0 * d_sum)) * r.delta_hat_max +
                           log_t / static_cast<double>(q.m + 1) * tail;
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_instance) throw;
    r.degenerate.push_back("winner: best item not unique");
  }

  // Top-k objective.
  const std::size_t k = q.k;
  double top = 0.0;
  double bottom = 0.0;
  for (std::size_t rank = 1; rank <= k; ++rank) {
    top += ranked_theta(inst, rank);
    bottom += ranked_theta(inst, n - rank + 1);
  }
  r.delta_prime_max = (top - bottom) / static_cast<double>(k);

  if (k == n) {
    r.degenerate.push_back("top-k: k = n leaves no item outside the top set");
    return r;
  }
  try {
    r.topk_lb_constant = topk_lower_bound_constant(inst, k);
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_instance) throw;
    r.degenerate.push_back(fmt::format("top-k: theta_({}) = theta_({})", k, k + 1));
  }

  const double tk = ranked_theta(inst, k);
  if (k >= 2) {
    bool ok = true;
    double coef = 0.0;
    for (std::size_t b = k + 1; b <= n; ++b) {
      const double th = ranked_theta(inst, b);
      double dhat = std::numeric_limits<double>::infinity();
      for (std::size_t g = 1; g < k; ++g) {
        const double tg = ranked_theta(inst, g);
        dhat = std::min(dhat, pref(tk, tg) - pref(th, tg));
      }
      r.topk_dhat.push_back(dhat);
      if (dhat <= 0.0) {
        ok = false;
      } else {
        coef += (tk - th) / (dhat * dhat);
      }
    }
    if (ok) {
      r.topk_log_coefficient = 4.0 * q.alpha / static_cast<double>(k) * coef;
    } else {
      r.degenerate.push_back("top-k: some item outside the top set ties theta_(k)");
    }
  } else {
    r.degenerate.push_back("top-k: D-hat needs k >= 2");
  }

  // Slot complexities: for each top-k rank g, sum D^g_ij over all items i
  // and every strictly better top-k item j.
  {
    bool ok = true;
    double dbar = 0.0;
    for (std::size_t g = 1; g <= k && ok; ++g) {
      const double tg = ranked_theta(inst, g);
      for (std::size_t jr = 1; jr <= k && ok; ++jr) {
        const double tj = ranked_theta(inst, jr);
        if (!(tj > tg)) continue;
        const double d_gj = 4.0 * q.alpha / std::pow(pref(tg, tj) - 0.5, 2);
        for (std::size_t ir = 1; ir <= n; ++ir) {
          const double ti = ranked_theta(inst, ir);
          if (ir == g) {
            dbar += d_gj;
          } else if (ti == tg) {
            dbar += d_gj;
            r.topk_dbar_tie_case = true;
          } else if (ti < tg) {
            const double diff = pref(tg, tj) - pref(ti, tj);
            if (diff <= 0.0) {
              ok = false;
              break;
            }
            dbar += 4.0 * q.alpha / (diff * diff);
          }
        }
      }
    }
    if (ok) r.topk_dbar = dbar;
  }

  if (r.topk_dbar && r.topk_log_coefficient) {
    const double dbar = *r.topk_dbar;
    r.topk_upper_bound = (2.0 * r.f_delta + x_log_x(2.0 * dbar)) * r.delta_prime_max +
                         *r.topk_log_coefficient * log_t;
  }
  return r;
}

namespace {

std::string num(double v) { return fmt::format("{:.12g}", v); }

std::string opt(const std::optional<double>& v) { return v ? num(*v) : "degenerate"; }

std::string list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += num(xs[i]);
  }
  return out;
}

}  // namespace

std::string format_bounds(const BoundsReport& r) {
  std::string out;
  auto line = [&](std::string_view key, const std::string& value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  line("n", std::to_string(r.n));
  line("k", std::to_string(r.query.k));
  line("m", std::to_string(r.query.m));
  line("alpha", num(r.query.alpha));
  line("delta", num(r.query.delta));
  line("horizon", num(r.query.horizon));
  line("winner_lb_constant", opt(r.winner_lb_constant));
  line("winner_lb_topm_constant", opt(r.winner_lb_topm_constant));
  line("winner_lb_pairwise_constant", opt(r.winner_lb_pairwise_constant));
  line("topk_lb_constant", opt(r.topk_lb_constant));
  line("f_delta", num(r.f_delta));
  line("Delta_i", list(r.delta_pref));
  line("Dhat_i", list(r.delta_hat));
  line("D_1i", list(r.d_best));
  line("D", opt(r.d_sum));
  line("D_max", opt(r.d_max));
  line("Delta_max_hat", num(r.delta_hat_max));
  line("winner_upper_bound", opt(r.winner_upper_bound));
  line("Delta_prime_max", num(r.delta_prime_max));
  line("topk_Dhat_b", list(r.topk_dhat));
  line("topk_log_coefficient", opt(r.topk_log_coefficient));
  line("topk_Dbar", opt(r.topk_dbar));
  line("topk_Dbar_tie_case", r.topk_dbar_tie_case ? "true" : "false");
  line("topk_upper_bound", opt(r.topk_upper_bound));
  for (const auto& d : r.degenerate) line("degenerate", d);
  return out;
}

std::string format_bounds_json(const BoundsReport& r) {
  using nlohmann::json;
  auto num_json = [](double v) -> json { return std::isfinite(v) ? json(v) : json(v > 0 ? "inf" : "-inf"); };
  auto opt_json = [&](const std::optional<double>& v) -> json { return v ? num_json(*v) : json(nullptr); };
  json j;
  j["n"] = r.n;
  j["k"] = r.query.k;
  j["m"] = r.query.m;
  j["alpha"] = r.query.alpha;
  j["delta"] = r.query.delta;
  j["horizon"] = r.query.horizon;
  j["winner_lb_constant"] = opt_json(r.winner_lb_constant);
  j["winner_lb_topm_constant"] = opt_json(r.winner_lb_topm_constant);
  j["winner_lb_pairwise_constant"] = opt_json(r.winner_lb_pairwise_constant);
  j["topk_lb_constant"] = opt_json(r.topk_lb_constant);
  j["f_delta"] = num_json(r.f_delta);
  j["Delta_i"] = r.delta_pref;
  j["Dhat_i"] = r.delta_hat;
  j["D_1i"] = r.d_best;
  j["D"] = opt_json(r.d_sum);
  j["D_max"] = opt_json(r.d_max);
  j["Delta_max_hat"] = r.delta_hat_max;
  j["winner_upper_bound"] = opt_json(r.winner_upper_bound);
  j["Delta_prime_max"] = r.delta_prime_max;
  j["topk_Dhat_b"] = r.topk_dhat;
  j["topk_log_coefficient"] = opt_json(r.topk_log_coefficient);
  j["topk_Dbar"] = opt_json(r.topk_dbar);
  j["topk_Dbar_tie_case"] = r.topk_dbar_tie_case;
  j["topk_upper_bound"] = opt_json(r.topk_upper_bound);
  j["degenerate"] = r.degenerate;
  return j.dump(2) + "\n";
}

}  // namespace mnlbandit
