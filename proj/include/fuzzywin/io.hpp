#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzywin/ledger.hpp"

namespace fuzzywin::io {

inline constexpr int kSchemaVersion = 1;

struct ParsedDeals {
  std::vector<DealRecord> records;
  std::vector<std::string> warnings;
};

/// Parses the deal CSV schema: a header naming `label` plus any of `cost_price`,
/// `reference_price`, `settled_price`. Columns are matched by name; unknown ones are
/// ignored with a warning. Empty cells are absent fields.
///
/// Throws Error(parse_error) with the 1-based line and column name on failure.
ParsedDeals parse_deal_csv(std::string_view text);

enum class Format { text, csv, json };

/// Throws Error(invalid_input) for an unknown format name.
Format parse_format(std::string_view name);

std::string render_output(std::span<const AttributedRecord> records, const LedgerSummary& summary,
                          Format format);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

}  // namespace fuzzywin::io
