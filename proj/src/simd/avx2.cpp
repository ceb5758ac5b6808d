// Compiled with -mavx2 only; never called unless the CPU reports AVX2.
#include <immintrin.h>

#include "fuzzywin/kernels.hpp"

namespace fuzzywin::kernels::detail {
namespace {

// clamp((p - lo) / w, 0, 1) equals the piecewise form bit for bit: at p == lo the
// quotient is +0, below lo it is negative (or -0) and max() returns the +0 operand.
inline void membership4(__m256d lo, __m256d hi, __m256d p, __m256d& inc, __m256d& dec) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d width = _mm256_sub_pd(hi, lo);
  inc = _mm256_min_pd(_mm256_max_pd(_mm256_div_pd(_mm256_sub_pd(p, lo), width), zero), one);
  dec = _mm256_min_pd(_mm256_max_pd(_mm256_div_pd(_mm256_sub_pd(hi, p), width), zero), one);
}

}  // namespace

void avx2_frame(double lower, double upper, const double* values, double* increasing,
                double* decreasing, std::size_t n) {
  const __m256d lo = _mm256_set1_pd(lower);
  const __m256d hi = _mm256_set1_pd(upper);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d inc, dec;
    membership4(lo, hi, _mm256_loadu_pd(values + i), inc, dec);
    _mm256_storeu_pd(increasing + i, inc);
    _mm256_storeu_pd(decreasing + i, dec);
  }
  if (i < n) scalar_frame(lower, upper, values + i, increasing + i, decreasing + i, n - i);
}

void avx2_ledger(const double* lower, const double* upper, const double* values,
                 double* increasing, double* decreasing, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d inc, dec;
    membership4(_mm256_loadu_pd(lower + i), _mm256_loadu_pd(upper + i),
                _mm256_loadu_pd(values + i), inc, dec);
    _mm256_storeu_pd(increasing + i, inc);
    _mm256_storeu_pd(decreasing + i, dec);
  }
  if (i < n) {
    scalar_ledger(lower + i, upper + i, values + i, increasing + i, decreasing + i, n - i);
  }
}

}  // namespace fuzzywin::kernels::detail
