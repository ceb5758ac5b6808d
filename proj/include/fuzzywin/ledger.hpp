#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fuzzywin/membership.hpp"

namespace fuzzywin {

/// One negotiated data point. Which fields must be present depends on the rule.
struct DealRecord {
  std::string label;
  std::optional<double> cost_price;
  std::optional<double> reference_price;
  std::optional<double> settled_price;

  friend bool operator==(const DealRecord&, const DealRecord&) = default;
};

struct FromColumn {};
struct Constant {
  double value;
};
struct OffsetFromReference {
  double offset;
};

/// How a record becomes a frame plus a settled value. The frame's lower bound is the
/// cost (constant or per-record), the upper bound is the record's reference price.
struct DerivationRule {
  std::variant<FromColumn, Constant> cost = FromColumn{};
  std::variant<FromColumn, OffsetFromReference> settled = FromColumn{};
  bool reference_is_upper = true;

  /// Every field taken from the record's own columns.
  static DerivationRule columns() { return {}; }
  /// Constant cost, settled at a fixed offset from the reference price.
  static DerivationRule offset(double cost, double offset) {
    return {Constant{cost}, OffsetFromReference{offset}, true};
  }
};

enum class Attribution { increasing_wins, decreasing_wins, tie };

std::string_view to_string(Attribution attribution) noexcept;

struct AttributedRecord {
  DealRecord record;
  NegotiationFrame frame;
  EvaluationResult evaluation;
  int increasing_percent;
  int decreasing_percent;
  Attribution attribution;
};

struct LedgerSummary {
  std::size_t record_count = 0;
  std::size_t increasing_win_count = 0;
  std::size_t decreasing_win_count = 0;
  std::size_t tie_count = 0;
  /// Mean of the rounded per-record percents (not re-rounded).
  double avg_increasing_percent = 0;
  double avg_decreasing_percent = 0;
  std::size_t full_win_count_increasing = 0;
  std::size_t full_win_count_decreasing = 0;

  int avg_increasing_display() const noexcept;
  int avg_decreasing_display() const noexcept;
};

struct RecordError {
  std::string label;
  ErrorCode code;
  std::string message;
};

struct LedgerRun {
  std::vector<AttributedRecord> attributed;
  std::vector<RecordError> errors;
};

/// Throws Error(record_error) with the record label in the message.
std::pair<NegotiationFrame, double> resolve_frame(const DerivationRule& rule, const DealRecord& record);

AttributedRecord evaluate_record(const DerivationRule& rule, const DealRecord& record);

/// Tie iff both are 50; otherwise the larger percent wins.
Attribution attribute(int increasing_percent, int decreasing_percent) noexcept;

/// Ties credit both parties. Throws Error(empty_ledger) for an empty list.
LedgerSummary summarize(std::span<const AttributedRecord> records);

/// Evaluates every record through the batch kernels. Records that fail to resolve are
/// collected in `errors`; the rest are still evaluated, in input order.
LedgerRun run_ledger(const DerivationRule& rule, std::span<const DealRecord> records);

}  // namespace fuzzywin
