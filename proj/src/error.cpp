#include "fuzzywin/error.hpp"

namespace fuzzywin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::degenerate_frame: return "degenerate_frame";
    case ErrorCode::target_out_of_range: return "target_out_of_range";
    case ErrorCode::invalid_range: return "invalid_range";
    case ErrorCode::record_error: return "record_error";
    case ErrorCode::empty_ledger: return "empty_ledger";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace fuzzywin
