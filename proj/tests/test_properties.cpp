#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fuzzywin/membership.hpp"
#include "oracle.hpp"

// Randomized invariants of the membership functions and their inverses.

using namespace fuzzywin;

namespace {

constexpr int kCases = 10000;

double random_point(std::mt19937_64& rng, const NegotiationFrame& f) {
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  return f.lower() + u(rng) * f.width();
}

NegotiationFrame random_frame(std::mt19937_64& rng) {
  const auto f = oracle::random_frame(rng);
  return {f.lower, f.upper};
}

}  // namespace

TEST_CASE("complementarity") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < kCases; ++i) {
    const auto f = random_frame(rng);
    const double p = random_point(rng, f);
    const auto r = evaluate(f, p);
    REQUIRE(std::abs(r.increasing_share.value() + r.decreasing_share.value() - 1.0) <= 1e-12);
  }
}

TEST_CASE("monotonicity") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < kCases; ++i) {
    const auto f = random_frame(rng);
    double a = random_point(rng, f);
    double b = random_point(rng, f);
    if (a > b) std::swap(a, b);
    REQUIRE(increasing_win(f, a).value() <= increasing_win(f, b).value());
    REQUIRE(decreasing_win(f, a).value() >= decreasing_win(f, b).value());
    if (a > f.lower() && b < f.upper() && b - a > 1e-9 * f.width()) {
      REQUIRE(increasing_win(f, a).value() < increasing_win(f, b).value());
      REQUIRE(decreasing_win(f, a).value() > decreasing_win(f, b).value());
    }
  }
}

TEST_CASE("clamping outside the frame") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1e6);
  for (int i = 0; i < kCases; ++i) {
    const auto f = random_frame(rng);
    const double below = f.lower() - u(rng);
    const double above = f.upper() + u(rng);
    REQUIRE(increasing_win(f, below).value() == 0.0);
    REQUIRE(decreasing_win(f, below).value() == 1.0);
    REQUIRE(increasing_win(f, above).value() == 1.0);
    REQUIRE(decreasing_win(f, above).value() == 0.0);
    REQUIRE(classify_zone(f, below) == (below < f.lower() ? Zone::lose_win : Zone::fuzzy_win_win));
    REQUIRE(classify_zone(f, above) == (above > f.upper() ? Zone::win_lose : Zone::fuzzy_win_win));
  }
}

TEST_CASE("inverse round trip and complement") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < kCases; ++i) {
    const auto f = random_frame(rng);
    const double t = (i % 50 == 0) ? double(i % 100 == 0) : u(rng);
    const double p_inc = price_for_increasing(f, WinShare(t));
    const double p_dec = price_for_decreasing(f, WinShare(t));
    REQUIRE(std::abs(increasing_win(f, p_inc).value() - t) <= 1e-9);
    REQUIRE(std::abs(decreasing_win(f, p_dec).value() - t) <= 1e-9);
    REQUIRE(std::abs(p_inc - price_for_decreasing(f, WinShare(1.0 - t))) <= 1e-9);
  }
}

TEST_CASE("affine change of units leaves shares unchanged") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> log_scale(-2.0, 2.0);
  std::uniform_real_distribution<double> shift(-1000.0, 1000.0);
  for (int i = 0; i < kCases; ++i) {
    const auto f = random_frame(rng);
    const double p = random_point(rng, f);
    const double a = std::pow(10.0, log_scale(rng));
    const double b = shift(rng);
    const NegotiationFrame g(a * f.lower() + b, a * f.upper() + b);
    const double q = a * p + b;
    REQUIRE(std::abs(increasing_win(f, p).value() - increasing_win(g, q).value()) <= 1e-9);
    REQUIRE(std::abs(decreasing_win(f, p).value() - decreasing_win(g, q).value()) <= 1e-9);
  }
}

TEST_CASE("dense grid equals the piecewise oracle") {
  std::mt19937_64 rng(6);
  constexpr std::size_t kGrid = 10001;
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_frame(rng);
    const double start = f.lower() - f.width();
    const double end = f.upper() + f.width();
    const auto pts = sample_curves(f, start, end, kGrid);
    REQUIRE(pts.size() == kGrid);
    for (const auto& pt : pts) {
      REQUIRE(std::abs(pt.increasing_share.value() - oracle::seller(f.lower(), f.upper(), pt.value)) <= 1e-12);
      REQUIRE(std::abs(pt.decreasing_share.value() - oracle::buyer(f.lower(), f.upper(), pt.value)) <= 1e-12);
      REQUIRE(std::abs(increasing_win(f, pt.value).value() - pt.increasing_share.value()) == 0.0);
    }
  }
}

TEST_CASE("percent rounding matches half-up oracle") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < kCases; ++i) {
    const double v = u(rng);
    REQUIRE(round_percent(WinShare(v)) == oracle::percent(v));
  }
}
