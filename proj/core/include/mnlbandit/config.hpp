#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mnlbandit/mnl.hpp"
#include "mnlbandit/types.hpp"

namespace mnlbandit {

/// Flat "key = value" document. '#' starts a comment; blank lines are
/// ignored. Keys keep file order. Throws Error(config_error) on a line with
/// no '=', an empty key, or a repeated key.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
KeyValues parse_key_values(const std::string& text);

enum class Algorithm { maxmin, rec_maxmin, sp_ts };

std::string to_string(Algorithm algorithm);
std::string to_string(Objective objective);

struct ExperimentConfig {
  std::string environment = "g1";  // preset name; ignored when theta is set
  std::vector<double> theta;       // explicit utilities
  Algorithm algorithm = Algorithm::maxmin;
  Objective objective = Objective::winner;
  std::size_t k = 10;
  std::size_t m = 5;
  Round horizon = 100000;
  std::size_t runs = 50;
  std::uint64_t seed = 1;
  double alpha = 0.51;
  std::size_t checkpoints = 500;
  std::string output = "results";
  std::size_t threads = 1;  // 0 = one per hardware thread

  bool operator==(const ExperimentConfig&) const = default;
};

/// Unknown keys, malformed numbers and invalid combinations all raise
/// Error(config_error).
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Writes every field; parse_config(format_config(c)) == c.
std::string format_config(const ExperimentConfig& cfg);

/// Applies one "key=value" override (used by `sweep --vary`).
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// The instance the config describes.
MnlInstance config_instance(const ExperimentConfig& cfg);

/// Throws Error(config_error) for out-of-range or incompatible settings.
void validate_config(const ExperimentConfig& cfg);

}  // namespace mnlbandit
