#include "mnlbandit/mnl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "mnlbandit/config.hpp"
#include "mnlbandit/error.hpp"

namespace mnlbandit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_subset: return "invalid subset";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::invalid_ranking: return "invalid ranking";
    case Errc::invalid_scale: return "invalid scale";
    case Errc::invalid_outcome: return "invalid outcome";
    case Errc::invalid_parameter: return "invalid parameter";
    case Errc::insufficient_pool: return "insufficient pool";
    case Errc::degenerate_instance: return "degenerate instance";
    case Errc::too_large: return "too large";
    case Errc::mismatched_spaces: return "mismatched spaces";
    case Errc::unknown_environment: return "unknown environment";
    case Errc::config_error: return "config error";
    case Errc::io_error: return "io error";
  }
  return "unknown error";
}

MnlInstance::MnlInstance(std::vector<double> theta) : theta_(std::move(theta)) {
  if (theta_.size() < 2) {
    throw Error(Errc::invalid_parameter, "MNL instance needs at least 2 items");
  }
  for (std::size_t i = 0; i < theta_.size(); ++i) {
    if (!(theta_[i] > 0.0) || !std::isfinite(theta_[i])) {
      throw Error(Errc::invalid_parameter,
                  fmt::format("theta_{} = {} is not a finite positive number", i + 1, theta_[i]));
    }
  }
  order_.resize(theta_.size());
  std::iota(order_.begin(), order_.end(), Item{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](Item a, Item b) { return theta_[a] > theta_[b]; });
}

double MnlInstance::theta(Item i) const {
  if (i >= theta_.size()) {
    throw Error(Errc::index_out_of_range, fmt::format("item {} out of range", i));
  }
  return theta_[i];
}

ItemList MnlInstance::top_k_set(std::size_t k) const {
  if (k == 0 || k > size()) {
    throw Error(Errc::invalid_parameter, fmt::format("top-k size {} not in [1, {}]", k, size()));
  }
  return ItemList(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(k));
}

double MnlInstance::gap_k(std::size_t k) const {
  if (k == 0 || k >= size()) {
    throw Error(Errc::invalid_parameter, fmt::format("gap rank {} not in [1, {})", k, size()));
  }
  return theta_[order_[k - 1]] - theta_[order_[k]];
}

double MnlInstance::winner_gap(Item i) const { return theta_[best_item()] - theta(i); }

double MnlInstance::pair_prob(Item i, Item j) const {
  const double ti = theta(i);
  return ti / (ti + theta(j));
}

MnlInstance MnlInstance::scale(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(Errc::invalid_scale, fmt::format("scale factor {} must be positive", c));
  }
  std::vector<double> scaled(theta_);
  for (double& v : scaled) v *= c;
  return MnlInstance(std::move(scaled));
}

void validate_subset(const MnlInstance& inst, std::span<const Item> subset) {
  if (subset.empty()) throw Error(Errc::invalid_subset, "subset is empty");
  std::vector<bool> seen(inst.size(), false);
  for (Item i : subset) {
    if (i >= inst.size()) {
      throw Error(Errc::index_out_of_range,
                  fmt::format("item {} out of range for {} items", i + 1, inst.size()));
    }
    if (seen[i]) throw Error(Errc::invalid_subset, fmt::format("item {} repeated", i + 1));
    seen[i] = true;
  }
}

double choice_prob(const MnlInstance& inst, Item i, std::span<const Item> subset) {
  validate_subset(inst, subset);
  if (i >= inst.size()) throw Error(Errc::index_out_of_range, fmt::format("item {} out of range", i));
  double total = 0.0;
  bool member = false;
  for (Item j : subset) {
    total += inst.theta(j);
    member = member || j == i;
  }
  return member ? inst.theta(i) / total : 0.0;
}

double ranking_prob(const MnlInstance& inst, std::span<const Item> ranking,
                    std::span<const Item> subset) {
  validate_subset(inst, subset);
  if (ranking.size() > subset.size()) {
    throw Error(Errc::invalid_ranking, "ranking longer than the offered set");
  }
  std::vector<bool> offered(inst.size(), false);
  double remaining = 0.0;
  for (Item j : subset) {
    offered[j] = true;
    remaining += inst.theta(j);
  }
  double p = 1.0;
  for (Item r : ranking) {
    if (r >= inst.size() || !offered[r]) {
      throw Error(Errc::invalid_ranking,
                  fmt::format("ranked item {} is not in the offered set or is repeated", r + 1));
    }
    offered[r] = false;
    p *= inst.theta(r) / remaining;
    remaining -= inst.theta(r);
  }
  return p;
}

ItemList sample_top_m(const MnlInstance& inst, std::span<const Item> subset, std::size_t m,
                      Rng& rng) {
  validate_subset(inst, subset);
  if (m == 0) throw Error(Errc::invalid_parameter, "ranking length must be positive");
  ItemList pool(subset.begin(), subset.end());
  const std::size_t len = std::min(m, pool.size());
  ItemList out;
  out.reserve(len);
  while (out.size() < len) {
    std::size_t pick = 0;
    if (pool.size() > 1) {
      double total = 0.0;
      for (Item j : pool) total += inst.theta(j);
      double u = uniform01(rng) * total;
      pick = pool.size() - 1;
      for (std::size_t p = 0; p < pool.size(); ++p) {
        u -= inst.theta(pool[p]);
        if (u < 0.0) {
          pick = p;
          break;
        }
      }
    }
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

std::string format_instance(const MnlInstance& inst) {
  return fmt::format("n = {}\ntheta = {}\n", inst.size(), fmt::join(inst.thetas(), ", "));
}

MnlInstance parse_instance(const std::string& text) {
  std::size_t n = 0;
  std::vector<double> theta;
  bool have_theta = false;
  for (const auto& [key, value] : parse_key_values(text)) {
    if (key == "n") {
      try {
        n = std::stoul(value);
      } catch (const std::exception&) {
        throw Error(Errc::config_error, "instance: bad n '" + value + "'");
      }
    } else if (key == "theta") {
      have_theta = true;
      std::size_t pos = 0;
      while (pos <= value.size()) {
        const auto comma = value.find(',', pos);
        const std::string tok = value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
          std::size_t used = 0;
          theta.push_back(std::stod(tok, &used));
          if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw Error(Errc::config_error, "instance: bad theta entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else {
      throw Error(Errc::config_error, "instance: unknown key '" + key + "'");
    }
  }
  if (!have_theta) throw Error(Errc::config_error, "instance: missing theta");
  if (n != 0 && n != theta.size()) {
    throw Error(Errc::config_error,
                fmt::format("instance: n = {} but theta has {} entries", n, theta.size()));
  }
  return MnlInstance(std::move(theta));
}

}  // namespace mnlbandit
