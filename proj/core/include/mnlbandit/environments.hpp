#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mnlbandit/mnl.hpp"

namespace mnlbandit {

/// Names of the built-in synthetic environments:
/// g1, g4, arith, geo, har (16 items) and arithb, geob (50 items).
const std::vector<std::string>& environment_names();

/// Throws Error(unknown_environment) listing the valid names.
MnlInstance make_environment(std::string_view name);

}  // namespace mnlbandit
