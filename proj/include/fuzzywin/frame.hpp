#pragma once

#include <string>
#include <string_view>

#include "fuzzywin/error.hpp"

namespace fuzzywin {

/// A two-party negotiation interval. The increasing party's share grows from 0 at
/// `lower` to 1 at `upper`; the decreasing party's share is its complement.
///
/// For a seller/buyer deal `lower` is the cost price and `upper` the seller's wanted
/// price, but any unit works (percent changes, move counts).
class NegotiationFrame {
 public:
  /// Throws Error(degenerate_frame) unless lower < upper, both finite, and the
  /// width itself is finite.
  NegotiationFrame(double lower, double upper, std::string increasing_party = "seller",
                   std::string decreasing_party = "buyer", std::string axis_label = {});

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double width() const noexcept { return upper_ - lower_; }
  const std::string& increasing_party() const noexcept { return increasing_party_; }
  const std::string& decreasing_party() const noexcept { return decreasing_party_; }
  const std::string& axis_label() const noexcept { return axis_label_; }

 private:
  double lower_;
  double upper_;
  std::string increasing_party_;
  std::string decreasing_party_;
  std::string axis_label_;
};

/// Novice vs. grandmaster: a game length of 38..76 moves.
NegotiationFrame chess_preset();

/// A party's winning fraction in [0, 1].
class WinShare {
 public:
  /// Throws Error(target_out_of_range) for values outside [0, 1] or NaN.
  explicit WinShare(double value);

  double value() const noexcept { return value_; }
  /// Whole percent, rounded half away from zero.
  int percent() const noexcept;

  friend bool operator==(WinShare, WinShare) = default;

 private:
  double value_;
};

enum class Zone { lose_win, fuzzy_win_win, win_lose };

std::string_view to_string(Zone zone) noexcept;

}  // namespace fuzzywin
