#include "fuzzywin/ledger.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fuzzywin/kernels.hpp"

namespace fuzzywin {
namespace {

[[noreturn]] void record_failure(const DealRecord& record, std::string_view what) {
  throw Error(ErrorCode::record_error, fmt::format("record '{}': {}", record.label, what));
}

double require_column(const DealRecord& record, const std::optional<double>& column,
                      std::string_view name) {
  if (!column) record_failure(record, fmt::format("missing {}", name));
  if (!std::isfinite(*column)) record_failure(record, fmt::format("{} is not finite", name));
  return *column;
}

struct Visitor {
  const DealRecord& record;
  double reference;

  double operator()(FromColumn) const { return require_column(record, record.cost_price, "cost_price"); }
  double operator()(Constant c) const { return c.value; }
  double operator()(OffsetFromReference o) const { return reference + o.offset; }
};

AttributedRecord attribute_evaluation(const DealRecord& record, const NegotiationFrame& frame,
                                      EvaluationResult evaluation) {
  const int inc = evaluation.increasing_share.percent();
  const int dec = evaluation.decreasing_share.percent();
  return {record, frame, evaluation, inc, dec, attribute(inc, dec)};
}

}  // namespace

std::string_view to_string(Attribution attribution) noexcept {
  switch (attribution) {
    case Attribution::increasing_wins: return "increasing";
    case Attribution::decreasing_wins: return "decreasing";
    case Attribution::tie: return "tie";
  }
  return "unknown";
}

int LedgerSummary::avg_increasing_display() const noexcept {
  return static_cast<int>(std::round(avg_increasing_percent));
}

int LedgerSummary::avg_decreasing_display() const noexcept {
  return static_cast<int>(std::round(avg_decreasing_percent));
}

std::pair<NegotiationFrame, double> resolve_frame(const DerivationRule& rule, const DealRecord& record) {
  if (!rule.reference_is_upper) {
    record_failure(record, "rule has no upper-bound source (reference_is_upper is false)");
  }
  const double reference = require_column(record, record.reference_price, "reference_price");
  const Visitor visit{record, reference};
  const double cost = std::visit(visit, rule.cost);

  double settled = 0;
  if (std::holds_alternative<FromColumn>(rule.settled)) {
    settled = require_column(record, record.settled_price, "settled_price");
  } else {
    settled = visit(std::get<OffsetFromReference>(rule.settled));
  }
  if (!std::isfinite(cost)) record_failure(record, "cost is not finite");
  if (!std::isfinite(settled)) record_failure(record, "settled value is not finite");

  try {
    return {NegotiationFrame(cost, reference), settled};
  } catch (const Error& e) {
    record_failure(record, e.what());
  }
}

AttributedRecord evaluate_record(const DerivationRule& rule, const DealRecord& record) {
  auto [frame, settled] = resolve_frame(rule, record);
  return attribute_evaluation(record, frame, evaluate(frame, settled));
}

Attribution attribute(int increasing_percent, int decreasing_percent) noexcept {
  if (increasing_percent == 50 && decreasing_percent == 50) return Attribution::tie;
  return increasing_percent > decreasing_percent ? Attribution::increasing_wins
                                                 : Attribution::decreasing_wins;
}

LedgerSummary summarize(std::span<const AttributedRecord> records) {
  if (records.empty()) throw Error(ErrorCode::empty_ledger, "ledger has no records", "records");

  LedgerSummary s;
  s.record_count = records.size();
  long inc_total = 0;
  long dec_total = 0;
  for (const auto& r : records) {
    inc_total += r.increasing_percent;
    dec_total += r.decreasing_percent;
    switch (r.attribution) {
      case Attribution::tie:
        ++s.tie_count;
        ++s.increasing_win_count;
        ++s.decreasing_win_count;
        break;
      case Attribution::increasing_wins: ++s.increasing_win_count; break;
      case Attribution::decreasing_wins: ++s.decreasing_win_count; break;
    }
    if (r.increasing_percent == 100) ++s.full_win_count_increasing;
    if (r.decreasing_percent == 100) ++s.full_win_count_decreasing;
  }
  // Integer totals keep the averages independent of record order.
  s.avg_increasing_percent = static_cast<double>(inc_total) / static_cast<double>(s.record_count);
  s.avg_decreasing_percent = static_cast<double>(dec_total) / static_cast<double>(s.record_count);
  return s;
}

LedgerRun run_ledger(const DerivationRule& rule, std::span<const DealRecord> records) {
  LedgerRun run;
  std::vector<const DealRecord*> resolved;
  std::vector<NegotiationFrame> frames;
  std::vector<double> lower, upper, values;

  for (const auto& record : records) {
    try {
      auto [frame, settled] = resolve_frame(rule, record);
      resolved.push_back(&record);
      lower.push_back(frame.lower());
      upper.push_back(frame.upper());
      values.push_back(settled);
      frames.push_back(std::move(frame));
    } catch (const Error& e) {
      run.errors.push_back({record.label, e.code(), e.what()});
    }
  }

  std::vector<double> inc(values.size());
  std::vector<double> dec(values.size());
  kernels::evaluate_ledger(lower, upper, values, inc, dec);

  run.attributed.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    EvaluationResult evaluation{values[i], WinShare(inc[i]), WinShare(dec[i]),
                                classify_zone(frames[i], values[i])};
    run.attributed.push_back(attribute_evaluation(*resolved[i], frames[i], evaluation));
  }
  return run;
}

}  // namespace fuzzywin
