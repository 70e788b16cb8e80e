#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mnlbandit {

enum class Errc {
  invalid_subset,
  index_out_of_range,
  invalid_ranking,
  invalid_scale,
  invalid_outcome,
  invalid_parameter,
  insufficient_pool,
  degenerate_instance,
  too_large,
  mismatched_spaces,
  unknown_environment,
  config_error,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mnlbandit
