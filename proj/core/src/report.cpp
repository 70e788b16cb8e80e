#include "mnlbandit/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mnlbandit/error.hpp"

namespace mnlbandit {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kCsvHeader = "checkpoint_t,mean_cum_regret,std_cum_regret";

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, close to range / target.
double nice_step(double range, int target) {
  if (!(range > 0.0)) return 1.0;
  const double raw = range / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  const double nice = frac < 1.5 ? 1.0 : frac < 3.5 ? 2.0 : frac < 7.5 ? 5.0 : 10.0;
  return nice * mag;
}

std::string tick_label(double v) {
  if (v != 0.0 && (std::abs(v) >= 1e5 || std::abs(v) < 1e-3)) return fmt::format("{:.0e}", v);
  return fmt::format("{:g}", v);
}

constexpr std::array<std::string_view, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                   "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

void write_regret_csv(const AggregateResult& result, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (std::size_t i = 0; i < result.checkpoints.size(); ++i) {
    fmt::print(os, "{},{:.12g},{:.12g}\n", result.checkpoints[i], result.mean[i], result.stddev[i]);
  }
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  out.flush();
  if (!out) throw Error(Errc::io_error, fmt::format("failed writing '{}'", path.string()));
}

void write_result_files(const AggregateResult& result, const fs::path& dir, bool logx) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::io_error, fmt::format("cannot create '{}': {}", dir.string(), ec.message()));

  std::ostringstream csv;
  write_regret_csv(result, csv);
  write_text_file(dir / "regret.csv", csv.str());

  std::string finals = "run,seed,final_cum_regret\n";
  for (std::size_t r = 0; r < result.final_regret.size(); ++r) {
    finals += fmt::format("{},{},{:.12g}\n", r, result.config.seed + r, result.final_regret[r]);
  }
  write_text_file(dir / "final_regret.csv", finals);
  write_text_file(dir / "config.txt", format_config(result.config));

  SvgOptions opts;
  opts.logx = logx;
  opts.title = fmt::format("{} on {} (k = {}, m = {}, {} runs)", to_string(result.config.algorithm),
                           result.config.theta.empty() ? result.config.environment : "custom",
                           result.config.k, result.config.m, result.config.runs);
  write_text_file(dir / "regret.svg",
                  render_svg({curve_from_result(result, to_string(result.config.algorithm))}, opts));
}

CurveSeries curve_from_result(const AggregateResult& result, std::string label) {
  CurveSeries s;
  s.label = std::move(label);
  for (auto t : result.checkpoints) s.t.push_back(static_cast<double>(t));
  s.mean = result.mean;
  s.stddev = result.stddev;
  return s;
}

CurveSeries read_curve_csv(const fs::path& path, std::string label) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, fmt::format("cannot open '{}'", path.string()));
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(Errc::config_error, fmt::format("'{}': expected header '{}'", path.string(), kCsvHeader));
  }
  CurveSeries s;
  s.label = std::move(label);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    double t = 0, mean = 0, sd = 0;
    char c1 = 0, c2 = 0;
    std::istringstream row(line);
    if (!(row >> t >> c1 >> mean >> c2 >> sd) || c1 != ',' || c2 != ',') {
      throw Error(Errc::config_error, fmt::format("'{}' line {}: malformed row", path.string(), lineno));
    }
    s.t.push_back(t);
    s.mean.push_back(mean);
    s.stddev.push_back(sd);
  }
  return s;
}

std::string render_svg(const std::vector<CurveSeries>& series, const SvgOptions& options) {
  constexpr double width = 800, height = 500;
  constexpr double left = 80, right = 190, top = 50, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double tmin = INFINITY, tmax = -INFINITY, ymax = 0.0;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      const double t = options.logx ? std::max(s.t[i], 1.0) : s.t[i];
      tmin = std::min(tmin, t);
      tmax = std::max(tmax, t);
      ymax = std::max(ymax, s.mean[i] + (i < s.stddev.size() ? s.stddev[i] : 0.0));
    }
  }
  if (!std::isfinite(tmin)) {
    tmin = 1;
    tmax = 10;
  }
  if (tmax <= tmin) tmax = tmin + 1;
  const double ystep = nice_step(ymax > 0 ? ymax : 1.0, 5);
  const double ytop = std::max(ystep, std::ceil(ymax / ystep) * ystep);

  auto xpos = [&](double t) {
    if (options.logx) {
      t = std::max(t, 1.0);
      return left + plot_w * (std::log10(t) - std::log10(tmin)) / (std::log10(tmax) - std::log10(tmin));
    }
    return left + plot_w * (t - tmin) / (tmax - tmin);
  };
  auto ypos = [&](double y) { return top + plot_h * (1.0 - y / ytop); };

  std::string svg;
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      width, height);
  svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
  if (!options.title.empty()) {
    svg += fmt::format("<text x=\"{:.1f}\" y=\"25\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                       left + plot_w / 2, xml_escape(options.title));
  }

  // Axes and ticks.
  svg += fmt::format("<g class=\"axes\" stroke=\"black\" fill=\"none\">\n");
  svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\"/>\n", left, top + plot_h,
                     left + plot_w);
  svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\"/>\n", left, top, top + plot_h);
  svg += "</g>\n<g class=\"ticks\">\n";
  std::vector<double> xticks;
  if (options.logx) {
    for (double d = std::ceil(std::log10(tmin)); d <= std::floor(std::log10(tmax)) + 1e-9; d += 1.0) {
      xticks.push_back(std::pow(10.0, d));
    }
  } else {
    const double step = nice_step(tmax - tmin, 5);
    for (double v = std::ceil(tmin / step) * step; v <= tmax + 1e-9 * step; v += step) xticks.push_back(v);
  }
  for (double v : xticks) {
    const double x = xpos(v);
    svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"black\"/>\n", x,
                       top + plot_h, top + plot_h + 5);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", x, top + plot_h + 18,
                       tick_label(v));
  }
  for (double v = 0.0; v <= ytop + 1e-9 * ystep; v += ystep) {
    const double y = ypos(v);
    svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#dddddd\"/>\n", left,
                       y, left + plot_w);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", left - 8, y + 4,
                       tick_label(v));
  }
  svg += "</g>\n";
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}{}</text>\n", left + plot_w / 2,
                     height - 15, xml_escape(options.x_label), options.logx ? " (log scale)" : "");
  svg += fmt::format(
      "<text x=\"20\" y=\"{0:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0:.1f})\">{1}</text>\n",
      top + plot_h / 2, xml_escape(options.y_label));

  // One band and one polyline per series.
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& c = series[s];
    const auto colour = kPalette[s % kPalette.size()];
    if (!c.stddev.empty()) {
      std::string band;
      for (std::size_t i = 0; i < c.t.size(); ++i) {
        band += fmt::format("{:.2f},{:.2f} ", xpos(c.t[i]), ypos(c.mean[i] + c.stddev[i]));
      }
      for (std::size_t i = c.t.size(); i-- > 0;) {
        band += fmt::format("{:.2f},{:.2f} ", xpos(c.t[i]), ypos(std::max(0.0, c.mean[i] - c.stddev[i])));
      }
      if (!band.empty()) band.pop_back();
      svg += fmt::format("<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.15\" stroke=\"none\"/>\n", band, colour);
    }
    std::string pts;
    for (std::size_t i = 0; i < c.t.size(); ++i) {
      pts += fmt::format("{:.2f},{:.2f} ", xpos(c.t[i]), ypos(c.mean[i]));
    }
    if (!pts.empty()) pts.pop_back();
    svg += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n", pts, colour);
  }

  svg += "<g class=\"legend\">\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double y = top + 10 + 20.0 * static_cast<double>(s);
    const double x = left + plot_w + 15;
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"3\"/>\n",
                       x, y, x + 25, y, kPalette[s % kPalette.size()]);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", x + 32, y + 4, xml_escape(series[s].label));
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace mnlbandit
