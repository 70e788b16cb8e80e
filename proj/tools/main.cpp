#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mnlbandit/bounds.hpp"
#include "mnlbandit/config.hpp"
#include "mnlbandit/environments.hpp"
#include "mnlbandit/error.hpp"
#include "mnlbandit/experiment.hpp"
#include "mnlbandit/report.hpp"
#include "mnlbandit/validation.hpp"

namespace fs = std::filesystem;
using namespace mnlbandit;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailed = 1;
constexpr int kConfigError = 2;

std::vector<std::string> split_values(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_summary(const AggregateResult& result, const fs::path& dir) {
  double mean_final = result.mean.empty() ? 0.0 : result.mean.back();
  double std_final = result.stddev.empty() ? 0.0 : result.stddev.back();
  fmt::print("{}: final cumulative regret {:.4f} +/- {:.4f} over {} runs -> {}\n",
             to_string(result.config.algorithm), mean_final, std_final, result.config.runs, dir.string());
}

int cmd_simulate(const std::string& config_path, const std::string& out, const std::string& dump_stats) {
  ExperimentConfig cfg = load_config(config_path);
  if (!out.empty()) cfg.output = out;
  validate_config(cfg);
  const auto result = run_experiment(cfg);
  write_result_files(result, cfg.output);
  print_summary(result, cfg.output);

  if (!dump_stats.empty()) {
    PairwiseStats stats(config_instance(cfg).size());
    run_trajectory(cfg, config_instance(cfg), 0, {cfg.horizon}, &stats);
    std::ofstream os(dump_stats);
    if (!os) throw Error(Errc::io_error, fmt::format("cannot write '{}'", dump_stats));
    stats.dump_csv(os);
  }
  return kOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out, const std::string& vary, bool logx) {
  ExperimentConfig base = load_config(config_path);
  if (!out.empty()) base.output = out;
  const auto eq = vary.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(Errc::config_error, fmt::format("--vary expects key=v1,v2,... (got '{}')", vary));
  }
  const std::string key = vary.substr(0, eq);
  const auto values = split_values(vary.substr(eq + 1));
  if (values.empty()) throw Error(Errc::config_error, "--vary lists no values");

  // Validate every point first so a bad value fails before any work.
  std::vector<ExperimentConfig> points;
  for (const auto& v : values) {
    ExperimentConfig cfg = base;
    set_config_value(cfg, key, v);
    cfg.output = (fs::path(base.output) / fmt::format("{}={}", key, v)).string();
    validate_config(cfg);
    points.push_back(cfg);
  }

  std::vector<CurveSeries> curves;
  std::string summary = fmt::format("{},mean_final_regret,std_final_regret\n", key);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto result = run_experiment(points[i]);
    write_result_files(result, points[i].output, logx);
    print_summary(result, points[i].output);
    curves.push_back(curve_from_result(result, fmt::format("{} = {}", key, values[i])));
    summary += fmt::format("{},{:.12g},{:.12g}\n", values[i], result.mean.back(), result.stddev.back());
  }
  SvgOptions opts;
  opts.logx = logx;
  opts.title = fmt::format("{} sweep over {}", to_string(base.algorithm), key);
  write_text_file(fs::path(base.output) / "sweep.svg", render_svg(curves, opts));
  write_text_file(fs::path(base.output) / "sweep.csv", summary);
  return kOk;
}

int cmd_bounds(const std::string& env, const std::vector<double>& theta, const BoundsQuery& query, bool json) {
  if (env.empty() == theta.empty()) throw Error(Errc::config_error, "give exactly one of --env or --theta");
  const MnlInstance inst = theta.empty() ? make_environment(env) : MnlInstance(theta);
  const auto report = compute_bounds(inst, query);
  std::cout << (json ? format_bounds_json(report) : format_bounds(report));
  return kOk;
}

int cmd_validate(bool quick) {
  bool all = true;
  for (const auto& check : run_validation(quick)) {
    fmt::print("{} {}: {}\n", check.passed ? "PASS" : "FAIL", check.name, check.detail);
    all = all && check.passed;
  }
  return all ? kOk : kValidationFailed;
}

int cmd_plot(const std::vector<std::string>& csvs, const std::string& out, bool logx) {
  std::vector<CurveSeries> curves;
  for (const auto& path : csvs) {
    fs::path p(path);
    std::string label = p.has_parent_path() && p.filename() == "regret.csv" ? p.parent_path().filename().string()
                                                                           : p.stem().string();
    curves.push_back(read_curve_csv(p, label));
  }
  SvgOptions opts;
  opts.logx = logx;
  write_text_file(out, render_svg(curves, opts));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regret experiments for dueling bandits under Plackett-Luce subset feedback"};
  app.require_subcommand(1);

  std::string config_path, out, dump_stats, vary, env;
  bool logx = false, quick = false, json = false;
  std::vector<double> theta;
  std::vector<std::string> csvs;
  BoundsQuery query;

  auto* simulate = app.add_subcommand("simulate", "Run a configured experiment and write CSV/SVG results");
  simulate->add_option("--config", config_path, "key = value config file")->required();
  simulate->add_option("--out", out, "Output directory (overrides the config's output)");
  simulate->add_option("--dump-stats", dump_stats, "Write run 0's pairwise win counts as CSV (i,j,wins)");

  auto* sweep = app.add_subcommand("sweep", "Run one experiment per value of a config key");
  sweep->add_option("--config", config_path, "key = value config file")->required();
  sweep->add_option("--vary", vary, "key=v1,v2,...")->required();
  sweep->add_option("--out", out, "Output directory (overrides the config's output)");
  sweep->add_flag("--logx,!--linx", logx, "Log-scaled x axis on the overlay chart")->default_val(true);

  auto* bounds = app.add_subcommand("bounds", "Evaluate regret bound constants for an instance");
  bounds->add_option("--env", env, "Named environment");
  bounds->add_option("--theta", theta, "Explicit utilities")->delimiter(',');
  bounds->add_option("--k", query.k, "Subset size")->capture_default_str();
  bounds->add_option("--m", query.m, "Feedback length")->capture_default_str();
  bounds->add_option("--alpha", query.alpha, "Exploration parameter")->capture_default_str();
  bounds->add_option("--delta", query.delta, "Confidence parameter")->capture_default_str();
  bounds->add_option("--horizon", query.horizon, "Horizon for the upper bounds")->capture_default_str();
  bounds->add_flag("--json", json, "Emit JSON");

  auto* validate = app.add_subcommand("validate", "Check sampler, rank-breaking and estimator properties");
  validate->add_flag("--quick", quick, "Smaller sample sizes");

  auto* plot = app.add_subcommand("plot", "Overlay regret CSV files in one SVG chart");
  plot->add_option("csv", csvs, "regret CSV files")->required()->check(CLI::ExistingFile);
  plot->add_option("--out", out, "SVG path")->required();
  plot->add_flag("--logx", logx, "Log-scaled x axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (*simulate) return cmd_simulate(config_path, out, dump_stats);
    if (*sweep) return cmd_sweep(config_path, out, vary, logx);
    if (*bounds) return cmd_bounds(env, theta, query, json);
    if (*validate) return cmd_validate(quick);
    if (*plot) return cmd_plot(csvs, out, logx);
  } catch (const Error& e) {
    fmt::print(stderr, "error ({}): {}\n", to_string(e.code()), e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kConfigError;
  }
  return kOk;
}
