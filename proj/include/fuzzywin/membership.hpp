#pragma once

#include <cstddef>
#include <vector>

#include "fuzzywin/frame.hpp"

namespace fuzzywin {

struct EvaluationResult {
  double settled_value;
  WinShare increasing_share;
  WinShare decreasing_share;
  Zone zone;
};

// Forward membership. Non-finite `p` throws Error(invalid_input).
WinShare increasing_win(const NegotiationFrame& frame, double p);
WinShare decreasing_win(const NegotiationFrame& frame, double p);
EvaluationResult evaluate(const NegotiationFrame& frame, double p);

// Inverse membership: the settled value that yields `target` for the given party.
double price_for_increasing(const NegotiationFrame& frame, WinShare target);
double price_for_decreasing(const NegotiationFrame& frame, WinShare target);

/// Boundaries belong to the fuzzy win-win zone.
Zone classify_zone(const NegotiationFrame& frame, double p);

struct CurvePoint {
  double value;
  WinShare increasing_share;
  WinShare decreasing_share;
};

/// `samples` evenly spaced points on [start, end], both endpoints included.
/// Throws Error(invalid_range) for samples < 2, start >= end, or non-finite bounds.
std::vector<CurvePoint> sample_curves(const NegotiationFrame& frame, double start, double end,
                                      std::size_t samples);

/// round(100 * share), half away from zero.
int round_percent(WinShare share) noexcept;

}  // namespace fuzzywin
