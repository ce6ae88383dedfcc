#include "kgg/error.hpp"

namespace kgg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax_error: return "SYNTAX_ERROR";
    case ErrorCode::schema_error: return "SCHEMA_ERROR";
    case ErrorCode::unknown_vertex: return "UNKNOWN_VERTEX";
    case ErrorCode::unknown_edge: return "UNKNOWN_EDGE";
    case ErrorCode::color_out_of_range: return "COLOR_OUT_OF_RANGE";
    case ErrorCode::not_composable: return "NOT_COMPOSABLE";
    case ErrorCode::degree_out_of_range: return "DEGREE_OUT_OF_RANGE";
    case ErrorCode::missing_square: return "MISSING_SQUARE";
    case ErrorCode::not_a_code: return "NOT_A_CODE";
    case ErrorCode::not_extension: return "NOT_EXTENSION";
    case ErrorCode::incompatible_table: return "INCOMPATIBLE_TABLE";
    case ErrorCode::invalid_element: return "INVALID_ELEMENT";
    case ErrorCode::degree_too_small: return "DEGREE_TOO_SMALL";
    case ErrorCode::degree_cap_exceeded: return "DEGREE_CAP_EXCEEDED";
    case ErrorCode::outside_domain: return "OUTSIDE_DOMAIN";
    case ErrorCode::complex_inconsistent: return "COMPLEX_INCONSISTENT";
    case ErrorCode::snf_check_failed: return "SNF_CHECK_FAILED";
    case ErrorCode::io_error: return "IO_ERROR";
    case ErrorCode::has_sources: return "HAS_SOURCES";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace kgg
