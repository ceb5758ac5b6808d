#include "fuzzywin/kernels.hpp"

namespace fuzzywin::kernels::detail {
namespace {

inline void membership_one(double lower, double upper, double p, double& inc, double& dec) {
  if (p <= lower) {
    inc = 0.0;
    dec = 1.0;
  } else if (p >= upper) {
    inc = 1.0;
    dec = 0.0;
  } else {
    const double width = upper - lower;
    inc = (p - lower) / width;
    dec = (upper - p) / width;
  }
}

}  // namespace

void scalar_frame(double lower, double upper, const double* values, double* increasing,
                  double* decreasing, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    membership_one(lower, upper, values[i], increasing[i], decreasing[i]);
  }
}

void scalar_ledger(const double* lower, const double* upper, const double* values,
                   double* increasing, double* decreasing, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    membership_one(lower[i], upper[i], values[i], increasing[i], decreasing[i]);
  }
}

}  // namespace fuzzywin::kernels::detail
