#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzywin {

enum class ErrorCode {
  invalid_input,
  degenerate_frame,
  target_out_of_range,
  invalid_range,
  record_error,
  empty_ledger,
  parse_error,
};

/// Stable snake_case identifier, used verbatim in problem documents.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string field = {})
      : std::runtime_error(std::move(message)), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  /// Name of the offending input (flag, JSON field, CSV column), empty if not applicable.
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace fuzzywin
