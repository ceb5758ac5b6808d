#include <arm_neon.h>

#include "fuzzywin/kernels.hpp"

namespace fuzzywin::kernels::detail {
namespace {

// FMAX orders -0 below +0, so the clamp matches the scalar piecewise form exactly.
inline void membership2(float64x2_t lo, float64x2_t hi, float64x2_t p, float64x2_t& inc,
                        float64x2_t& dec) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t width = vsubq_f64(hi, lo);
  inc = vminq_f64(vmaxq_f64(vdivq_f64(vsubq_f64(p, lo), width), zero), one);
  dec = vminq_f64(vmaxq_f64(vdivq_f64(vsubq_f64(hi, p), width), zero), one);
}

}  // namespace

void neon_frame(double lower, double upper, const double* values, double* increasing,
                double* decreasing, std::size_t n) {
  const float64x2_t lo = vdupq_n_f64(lower);
  const float64x2_t hi = vdupq_n_f64(upper);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t inc, dec;
    membership2(lo, hi, vld1q_f64(values + i), inc, dec);
    vst1q_f64(increasing + i, inc);
    vst1q_f64(decreasing + i, dec);
  }
  if (i < n) scalar_frame(lower, upper, values + i, increasing + i, decreasing + i, n - i);
}

void neon_ledger(const double* lower, const double* upper, const double* values,
                 double* increasing, double* decreasing, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t inc, dec;
    membership2(vld1q_f64(lower + i), vld1q_f64(upper + i), vld1q_f64(values + i), inc, dec);
    vst1q_f64(increasing + i, inc);
    vst1q_f64(decreasing + i, dec);
  }
  if (i < n) {
    scalar_ledger(lower + i, upper + i, values + i, increasing + i, decreasing + i, n - i);
  }
}

}  // namespace fuzzywin::kernels::detail
