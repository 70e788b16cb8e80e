#include "mnlbandit/environments.hpp"

#include <cmath>

#include <fmt/format.h>

#include "mnlbandit/error.hpp"

namespace mnlbandit {

const std::vector<std::string>& environment_names() {
  static const std::vector<std::string> names{"g1", "g4", "arith", "geo", "har", "arithb", "geob"};
  return names;
}

MnlInstance make_environment(std::string_view name) {
  std::vector<double> theta;
  if (name == "g1") {
    theta.assign(16, 0.2);
    theta[0] = 0.8;
  } else if (name == "g4") {
    theta.assign(16, 0.01);
    theta[0] = 1.0;
    for (std::size_t i = 1; i <= 5; ++i) theta[i] = 0.7;
    for (std::size_t i = 6; i <= 10; ++i) theta[i] = 0.5;
  } else if (name == "arith" || name == "arithb") {
    const std::size_t n = name == "arith" ? 16 : 50;
    const double step = name == "arith" ? 0.06 : 0.02;
    for (std::size_t i = 0; i < n; ++i) theta.push_back(1.0 - step * static_cast<double>(i));
  } else if (name == "geo" || name == "geob") {
    const std::size_t n = name == "geo" ? 16 : 50;
    const double ratio = name == "geo" ? 0.8 : 0.9;
    for (std::size_t i = 0; i < n; ++i) theta.push_back(std::pow(ratio, static_cast<double>(i)));
  } else if (name == "har") {
    theta.push_back(1.0);
    for (std::size_t i = 2; i <= 16; ++i) theta.push_back(1.0 - 1.0 / static_cast<double>(i));
  } else {
    throw Error(Errc::unknown_environment,
                fmt::format("unknown environment '{}'; valid names: {}", name,
                            fmt::join(environment_names(), ", ")));
  }
  return MnlInstance(std::move(theta));
}

}  // namespace mnlbandit
