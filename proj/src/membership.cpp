#include "fuzzywin/membership.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fuzzywin/kernels.hpp"

namespace fuzzywin {
namespace {

void require_finite(double p) {
  if (!std::isfinite(p)) {
    throw Error(ErrorCode::invalid_input, fmt::format("settled value must be finite, got {}", p),
                "value");
  }
}

// Same operation order as the batch kernels so single-point and batch results agree bit for bit.
double increasing_fraction(const NegotiationFrame& frame, double p) noexcept {
  if (p <= frame.lower()) return 0.0;
  if (p >= frame.upper()) return 1.0;
  return (p - frame.lower()) / frame.width();
}

double decreasing_fraction(const NegotiationFrame& frame, double p) noexcept {
  if (p <= frame.lower()) return 1.0;
  if (p >= frame.upper()) return 0.0;
  return (frame.upper() - p) / frame.width();
}

}  // namespace

WinShare increasing_win(const NegotiationFrame& frame, double p) {
  require_finite(p);
  return WinShare(increasing_fraction(frame, p));
}

WinShare decreasing_win(const NegotiationFrame& frame, double p) {
  require_finite(p);
  return WinShare(decreasing_fraction(frame, p));
}

Zone classify_zone(const NegotiationFrame& frame, double p) {
  require_finite(p);
  if (p < frame.lower()) return Zone::lose_win;
  if (p > frame.upper()) return Zone::win_lose;
  return Zone::fuzzy_win_win;
}

EvaluationResult evaluate(const NegotiationFrame& frame, double p) {
  require_finite(p);
  return {p, WinShare(increasing_fraction(frame, p)), WinShare(decreasing_fraction(frame, p)),
          classify_zone(frame, p)};
}

double price_for_increasing(const NegotiationFrame& frame, WinShare target) {
  if (target.value() == 0.0) return frame.lower();
  if (target.value() == 1.0) return frame.upper();
  return target.value() * frame.width() + frame.lower();
}

double price_for_decreasing(const NegotiationFrame& frame, WinShare target) {
  if (target.value() == 0.0) return frame.upper();
  if (target.value() == 1.0) return frame.lower();
  return frame.upper() - target.value() * frame.width();
}

std::vector<CurvePoint> sample_curves(const NegotiationFrame& frame, double start, double end,
                                      std::size_t samples) {
  if (samples < 2) {
    throw Error(ErrorCode::invalid_range, "curve needs at least 2 samples", "samples");
  }
  if (!std::isfinite(start) || !std::isfinite(end) || !(start < end)) {
    throw Error(ErrorCode::invalid_range,
                fmt::format("curve range requires finite start < end, got [{}, {}]", start, end),
                "start");
  }

  std::vector<double> values(samples);
  const double step = (end - start) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    values[i] = start + step * static_cast<double>(i);
  }
  values.back() = end;

  std::vector<double> increasing(samples);
  std::vector<double> decreasing(samples);
  kernels::evaluate_frame(frame.lower(), frame.upper(), values, increasing, decreasing);

  std::vector<CurvePoint> points;
  points.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    points.push_back({values[i], WinShare(increasing[i]), WinShare(decreasing[i])});
  }
  return points;
}

int round_percent(WinShare share) noexcept { return share.percent(); }

}  // namespace fuzzywin
