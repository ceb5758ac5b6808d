#include "fuzzywin/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "fuzzywin/json.hpp"

namespace fuzzywin::io {
namespace {

constexpr std::string_view kSummaryLabel = "AVG";

[[noreturn]] void parse_failure(std::size_t line, std::string_view column, std::string_view what) {
  throw Error(ErrorCode::parse_error, fmt::format("line {}, column '{}': {}", line, column, what),
              std::string(column));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits one CSV record starting at `pos`, honouring double-quoted fields that may
// contain commas, doubled quotes and newlines. Advances `pos` past the line ending.
std::vector<std::string> split_record(std::string_view text, std::size_t& pos, std::size_t& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          field.push_back('"');
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : std::string(trim(field)));
      field.clear();
      was_quoted = false;
    } else if (c == '\n') {
      break;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw Error(ErrorCode::parse_error, fmt::format("line {}: unterminated quote", line));
  fields.push_back(was_quoted ? field : std::string(trim(field)));
  return fields;
}

bool blank(const std::vector<std::string>& fields) {
  return std::all_of(fields.begin(), fields.end(), [](const std::string& f) { return f.empty(); });
}

std::optional<double> parse_decimal(std::string_view cell, std::size_t line, std::string_view column) {
  if (cell.empty()) return std::nullopt;
  double value = 0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || end != cell.data() + cell.size() || !std::isfinite(value)) {
    parse_failure(line, column, fmt::format("'{}' is not a decimal number", cell));
  }
  return value;
}

std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Text tables only; csv and json keep full precision.
std::string display_number(double v) { return fmt::format("{:.12g}", v); }

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

bool credits_increasing(Attribution a) { return a != Attribution::decreasing_wins; }
bool credits_decreasing(Attribution a) { return a != Attribution::increasing_wins; }

std::string render_csv(std::span<const AttributedRecord> records, const LedgerSummary& summary) {
  std::string out =
      "label,cost_price,reference_price,settled_price,lower,upper,swp_raw,swp_percent,bwp_raw,"
      "bwp_percent,zone,attribution,increasing_wins,decreasing_wins\n";
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", csv_escape(r.record.label),
                       optional_number(r.record.cost_price), optional_number(r.record.reference_price),
                       optional_number(r.record.settled_price), format_number(r.frame.lower()),
                       format_number(r.frame.upper()),
                       format_number(r.evaluation.increasing_share.value()), r.increasing_percent,
                       format_number(r.evaluation.decreasing_share.value()), r.decreasing_percent,
                       to_string(r.evaluation.zone), to_string(r.attribution),
                       credits_increasing(r.attribution) ? 1 : 0,
                       credits_decreasing(r.attribution) ? 1 : 0);
  }
  out += fmt::format("{},,,,,,,{},,{},,,{},{}\n", kSummaryLabel, summary.avg_increasing_display(),
                     summary.avg_decreasing_display(), summary.increasing_win_count,
                     summary.decreasing_win_count);
  return out;
}

std::string render_text(std::span<const AttributedRecord> records, const LedgerSummary& summary) {
  using Row = std::array<std::string, 8>;
  std::vector<Row> rows;
  rows.push_back({"label", "lower", "upper", "settled", "SWP", "BWP", "inc-wins", "dec-wins"});
  for (const auto& r : records) {
    rows.push_back({r.record.label, display_number(r.frame.lower()), display_number(r.frame.upper()),
                    display_number(r.evaluation.settled_value), fmt::format("{}%", r.increasing_percent),
                    fmt::format("{}%", r.decreasing_percent),
                    credits_increasing(r.attribution) ? "X" : "",
                    credits_decreasing(r.attribution) ? "X" : ""});
  }
  rows.push_back({std::string(kSummaryLabel), "", "", "",
                  fmt::format("{}%", summary.avg_increasing_display()),
                  fmt::format("{}%", summary.avg_decreasing_display()),
                  std::to_string(summary.increasing_win_count),
                  std::to_string(summary.decreasing_win_count)});

  std::array<std::size_t, 8> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }

  // Label and BWP are left-aligned so the two share columns read as "SWP BWP".
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += (c == 4 || c == 5) ? " " : "  ";
      const bool left = c == 0 || c == 5;
      line += left ? fmt::format("{:<{}}", row[c], width[c]) : fmt::format("{:>{}}", row[c], width[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  out += fmt::format("records {}  ties {}  full wins: increasing {}, decreasing {}\n",
                     summary.record_count, summary.tie_count, summary.full_win_count_increasing,
                     summary.full_win_count_decreasing);
  return out;
}

std::string render_json(std::span<const AttributedRecord> records, const LedgerSummary& summary) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  Json list = Json::array();
  for (const auto& r : records) list.push_back(to_json(r));
  doc["records"] = std::move(list);
  doc["summary"] = to_json(summary);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string format_number(double value) { return fmt::format("{}", value); }

ParsedDeals parse_deal_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::size_t pos = 0;
  std::size_t line = 1;
  std::vector<std::string> header;
  while (pos < text.size() && header.empty()) {
    auto fields = split_record(text, pos, line);
    if (!blank(fields)) header = std::move(fields);
    ++line;
  }
  if (header.empty()) throw Error(ErrorCode::parse_error, "empty CSV input: missing header row");

  ParsedDeals parsed;
  std::optional<std::size_t> label_col, cost_col, ref_col, settled_col;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string& name = header[c];
    auto assign = [&](std::optional<std::size_t>& slot) {
      if (slot) parse_failure(1, name, "duplicate column");
      slot = c;
    };
    if (name == "label") assign(label_col);
    else if (name == "cost_price") assign(cost_col);
    else if (name == "reference_price") assign(ref_col);
    else if (name == "settled_price") assign(settled_col);
    else parsed.warnings.push_back(fmt::format("ignoring unknown column '{}'", name));
  }
  if (!label_col) parse_failure(1, "label", "header has no 'label' column");

  while (pos < text.size()) {
    const std::size_t row_line = line;
    auto fields = split_record(text, pos, line);
    ++line;
    if (blank(fields)) continue;
    if (fields.size() > header.size()) {
      throw Error(ErrorCode::parse_error,
                  fmt::format("line {}: {} fields, header has {}", row_line, fields.size(), header.size()));
    }
    fields.resize(header.size());

    auto cell = [&](const std::optional<std::size_t>& col) -> std::string_view {
      return col ? std::string_view(fields[*col]) : std::string_view();
    };
    DealRecord record;
    record.label = std::string(cell(label_col));
    record.cost_price = parse_decimal(cell(cost_col), row_line, "cost_price");
    record.reference_price = parse_decimal(cell(ref_col), row_line, "reference_price");
    record.settled_price = parse_decimal(cell(settled_col), row_line, "settled_price");

    if (record.label == kSummaryLabel && !record.cost_price && !record.reference_price &&
        !record.settled_price) {
      parsed.warnings.push_back(fmt::format("line {}: skipping summary row", row_line));
      continue;
    }
    parsed.records.push_back(std::move(record));
  }
  return parsed;
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error(ErrorCode::invalid_input, fmt::format("unknown format '{}'", name), "format");
}

std::string render_output(std::span<const AttributedRecord> records, const LedgerSummary& summary,
                          Format format) {
  switch (format) {
    case Format::csv: return render_csv(records, summary);
    case Format::json: return render_json(records, summary);
    case Format::text: break;
  }
  return render_text(records, summary);
}

Json to_json(const EvaluationResult& e) {
  Json j;
  j["value"] = e.settled_value;
  j["swp_raw"] = e.increasing_share.value();
  j["swp_percent"] = e.increasing_share.percent();
  j["bwp_raw"] = e.decreasing_share.value();
  j["bwp_percent"] = e.decreasing_share.percent();
  j["zone"] = to_string(e.zone);
  return j;
}

Json to_json(const AttributedRecord& r) {
  Json j;
  j["label"] = r.record.label;
  j["lower"] = r.frame.lower();
  j["upper"] = r.frame.upper();
  j["settled"] = r.evaluation.settled_value;
  j["swp_raw"] = r.evaluation.increasing_share.value();
  j["swp_percent"] = r.increasing_percent;
  j["bwp_raw"] = r.evaluation.decreasing_share.value();
  j["bwp_percent"] = r.decreasing_percent;
  j["zone"] = to_string(r.evaluation.zone);
  j["attribution"] = to_string(r.attribution);
  return j;
}

Json to_json(const LedgerSummary& s) {
  Json j;
  j["record_count"] = s.record_count;
  j["increasing_win_count"] = s.increasing_win_count;
  j["decreasing_win_count"] = s.decreasing_win_count;
  j["tie_count"] = s.tie_count;
  j["avg_increasing_percent"] = s.avg_increasing_percent;
  j["avg_decreasing_percent"] = s.avg_decreasing_percent;
  j["avg_increasing_display"] = s.avg_increasing_display();
  j["avg_decreasing_display"] = s.avg_decreasing_display();
  j["full_win_count_increasing"] = s.full_win_count_increasing;
  j["full_win_count_decreasing"] = s.full_win_count_decreasing;
  return j;
}

Json to_json(const RecordError& e) {
  Json j;
  j["label"] = e.label;
  j["error_code"] = to_string(e.code);
  j["message"] = e.message;
  return j;
}

}  // namespace fuzzywin::io
