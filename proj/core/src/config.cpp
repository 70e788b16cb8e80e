#include "mnlbandit/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "mnlbandit/environments.hpp"
#include "mnlbandit/error.hpp"

namespace mnlbandit {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void config_fail(const std::string& msg) { throw Error(Errc::config_error, msg); }

template <class T>
T parse_unsigned(const std::string& key, const std::string& value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) config_fail(fmt::format("{}: '{}' is not a non-negative integer", key, value));
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    config_fail(fmt::format("{}: '{}' is not a number", key, value));
  }
}

// Integers may be written as 1e5 or 100000.
Round parse_round(const std::string& key, const std::string& value) {
  if (value.find_first_of("eE.") == std::string::npos) return parse_unsigned<Round>(key, value);
  const double v = parse_double(key, value);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e18) config_fail(fmt::format("{}: '{}' is not an integer", key, value));
  return static_cast<Round>(v);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_double(key, trim(tok)));
  return out;
}

Algorithm parse_algorithm(const std::string& v) {
  if (v == "maxmin") return Algorithm::maxmin;
  if (v == "rec-maxmin") return Algorithm::rec_maxmin;
  if (v == "sp-ts") return Algorithm::sp_ts;
  config_fail(fmt::format("algorithm: '{}' is not one of maxmin, rec-maxmin, sp-ts", v));
}

Objective parse_objective(const std::string& v) {
  if (v == "winner") return Objective::winner;
  if (v == "top-k") return Objective::top_k;
  config_fail(fmt::format("objective: '{}' is not one of winner, top-k", v));
}

// Shortest decimal that reads back to the same double.
std::string exact(double v) {
  for (int prec = 1; prec <= 17; ++prec) {
    std::string s = fmt::format("{:.{}g}", v, prec);
    if (std::stod(s) == v) return s;
  }
  return fmt::format("{:.17g}", v);
}

}  // namespace

KeyValues parse_key_values(const std::string& text) {
  KeyValues out;
  std::stringstream ss(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) config_fail(fmt::format("line {}: expected 'key = value'", lineno));
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) config_fail(fmt::format("line {}: empty key", lineno));
    if (std::any_of(out.begin(), out.end(), [&](const auto& kv) { return kv.first == key; })) {
      config_fail(fmt::format("line {}: key '{}' repeated", lineno, key));
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::maxmin: return "maxmin";
    case Algorithm::rec_maxmin: return "rec-maxmin";
    case Algorithm::sp_ts: return "sp-ts";
  }
  return "?";
}

std::string to_string(Objective objective) {
  return objective == Objective::winner ? "winner" : "top-k";
}

void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "environment") {
    cfg.environment = value;
  } else if (key == "theta") {
    cfg.theta = value.empty() ? std::vector<double>{} : parse_list(key, value);
  } else if (key == "algorithm") {
    cfg.algorithm = parse_algorithm(value);
  } else if (key == "objective") {
    cfg.objective = parse_objective(value);
  } else if (key == "k") {
    cfg.k = parse_unsigned<std::size_t>(key, value);
  } else if (key == "m") {
    cfg.m = parse_unsigned<std::size_t>(key, value);
  } else if (key == "horizon") {
    cfg.horizon = parse_round(key, value);
  } else if (key == "runs") {
    cfg.runs = parse_unsigned<std::size_t>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
  } else if (key == "checkpoints") {
    cfg.checkpoints = parse_unsigned<std::size_t>(key, value);
  } else if (key == "output") {
    cfg.output = value;
  } else if (key == "threads") {
    cfg.threads = parse_unsigned<std::size_t>(key, value);
  } else {
    config_fail(fmt::format("unknown key '{}'", key));
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  bool have_objective = false;
  for (const auto& [key, value] : parse_key_values(text)) {
    set_config_value(cfg, key, value);
    have_objective = have_objective || key == "objective";
  }
  // The objective follows the algorithm unless stated.
  if (!have_objective && cfg.algorithm == Algorithm::rec_maxmin) cfg.objective = Objective::top_k;
  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config_error, fmt::format("cannot open config '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const ExperimentConfig& cfg) {
  std::string out;
  out += fmt::format("environment = {}\n", cfg.environment);
  if (!cfg.theta.empty()) {
    std::vector<std::string> parts;
    for (double v : cfg.theta) parts.push_back(exact(v));
    out += fmt::format("theta = {}\n", fmt::join(parts, ", "));
  }
  out += fmt::format("algorithm = {}\n", to_string(cfg.algorithm));
  out += fmt::format("objective = {}\n", to_string(cfg.objective));
  out += fmt::format("k = {}\nm = {}\nhorizon = {}\nruns = {}\nseed = {}\n", cfg.k, cfg.m, cfg.horizon,
                     cfg.runs, cfg.seed);
  out += fmt::format("alpha = {}\n", exact(cfg.alpha));
  out += fmt::format("checkpoints = {}\noutput = {}\nthreads = {}\n", cfg.checkpoints, cfg.output, cfg.threads);
  return out;
}

MnlInstance config_instance(const ExperimentConfig& cfg) {
  if (!cfg.theta.empty()) return MnlInstance(cfg.theta);
  return make_environment(cfg.environment);
}

void validate_config(const ExperimentConfig& cfg) {
  std::size_t n = 0;
  try {
    n = config_instance(cfg).size();
  } catch (const Error& e) {
    config_fail(e.what());
  }
  if (cfg.horizon < 1) config_fail("horizon must be >= 1");
  if (cfg.runs < 1) config_fail("runs must be >= 1");
  if (cfg.checkpoints < 1) config_fail("checkpoints must be >= 1");
  if (!(cfg.alpha > 0.5)) config_fail(fmt::format("alpha = {} must exceed 1/2", cfg.alpha));
  switch (cfg.algorithm) {
    case Algorithm::maxmin:
      if (cfg.objective != Objective::winner) config_fail("maxmin targets the winner objective");
      if (cfg.m < 1 || cfg.m + 1 > cfg.k || cfg.k > n) {
        config_fail(fmt::format("maxmin needs 1 <= m <= k - 1 and k <= n (k = {}, m = {}, n = {})", cfg.k, cfg.m, n));
      }
      break;
    case Algorithm::rec_maxmin:
      if (cfg.objective != Objective::top_k) config_fail("rec-maxmin targets the top-k objective");
      if (cfg.k < 2 || cfg.k >= n) config_fail(fmt::format("rec-maxmin needs 2 <= k < n (k = {}, n = {})", cfg.k, n));
      break;
    case Algorithm::sp_ts:
      if (cfg.k < 2 || cfg.k > n) config_fail(fmt::format("sp-ts needs 2 <= k <= n (k = {}, n = {})", cfg.k, n));
      if (cfg.objective == Objective::winner && (cfg.m < 1 || cfg.m > cfg.k)) {
        config_fail(fmt::format("sp-ts needs 1 <= m <= k (k = {}, m = {})", cfg.k, cfg.m));
      }
      break;
  }
}

}  // namespace mnlbandit
