#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mnlbandit/experiment.hpp"

namespace mnlbandit {

/// Header "checkpoint_t,mean_cum_regret,std_cum_regret", one row per checkpoint.
void write_regret_csv(const AggregateResult& result, std::ostream& os);

/// Writes regret.csv, final_regret.csv, config.txt and regret.svg into `dir`
/// (created if needed). Throws Error(io_error) naming the failing path.
void write_result_files(const AggregateResult& result, const std::filesystem::path& dir,
                        bool logx = true);

struct CurveSeries {
  std::string label;
  std::vector<double> t;
  std::vector<double> mean;
  std::vector<double> stddev;
};

CurveSeries curve_from_result(const AggregateResult& result, std::string label);
CurveSeries read_curve_csv(const std::filesystem::path& path, std::string label);

struct SvgOptions {
  bool logx = false;
  std::string title;
  std::string x_label = "t";
  std::string y_label = "cumulative regret";
};

/// Standalone SVG line chart: one polyline per series, axis ticks and a
/// legend. Output depends only on the inputs.
std::string render_svg(const std::vector<CurveSeries>& series, const SvgOptions& options);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mnlbandit
