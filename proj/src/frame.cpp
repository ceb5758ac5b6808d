#include "fuzzywin/frame.hpp"

#include <cmath>

#include <fmt/format.h>

namespace fuzzywin {

NegotiationFrame::NegotiationFrame(double lower, double upper, std::string increasing_party,
                                   std::string decreasing_party, std::string axis_label)
    : lower_(lower),
      upper_(upper),
      increasing_party_(std::move(increasing_party)),
      decreasing_party_(std::move(decreasing_party)),
      axis_label_(std::move(axis_label)) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw Error(ErrorCode::degenerate_frame, "frame bounds must be finite");
  }
  if (!(lower < upper)) {
    throw Error(ErrorCode::degenerate_frame,
                fmt::format("frame requires lower < upper, got [{}, {}]", lower, upper));
  }
  if (!std::isfinite(upper - lower)) {
    throw Error(ErrorCode::degenerate_frame, "frame width overflows");
  }
}

NegotiationFrame chess_preset() { return NegotiationFrame(38, 76, "novice", "grandmaster", "moves"); }

WinShare::WinShare(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::target_out_of_range,
                fmt::format("win share must lie in [0, 1], got {}", value), "target");
  }
}

int WinShare::percent() const noexcept { return static_cast<int>(std::round(100.0 * value_)); }

std::string_view to_string(Zone zone) noexcept {
  switch (zone) {
    case Zone::lose_win: return "lose_win";
    case Zone::fuzzy_win_win: return "fuzzy_win_win";
    case Zone::win_lose: return "win_lose";
  }
  return "unknown";
}

}  // namespace fuzzywin
