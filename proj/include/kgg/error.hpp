#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgg {

enum class ErrorCode {
  syntax_error,
  schema_error,
  unknown_vertex,
  unknown_edge,
  color_out_of_range,
  not_composable,
  degree_out_of_range,
  missing_square,
  not_a_code,
  not_extension,
  incompatible_table,
  invalid_element,
  degree_too_small,
  degree_cap_exceeded,
  outside_domain,
  complex_inconsistent,
  snf_check_failed,
  io_error,
  has_sources,
};

/// Stable upper-case identifier used in CLI output and reports, e.g. "UNKNOWN_VERTEX".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kgg
