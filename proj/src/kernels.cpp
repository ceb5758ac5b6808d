#include "fuzzywin/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fuzzywin::kernels {
namespace {

bool cpu_has(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(FUZZYWIN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(FUZZYWIN_HAVE_NEON)
      return true;  // Advanced SIMD is mandatory on AArch64.
#else
      return false;
#endif
  }
  return false;
}

Isa pick_active() {
  const auto isas = available_isas();
  if (const char* forced = std::getenv("FUZZYWIN_ISA")) {
    for (Isa isa : isas) {
      if (to_string(isa) == forced) return isa;
    }
  }
  return isas.back();
}

void check_sizes(std::size_t n, std::size_t a, std::size_t b) {
  if (a != n || b != n) throw std::invalid_argument("kernel output spans must match input length");
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (cpu_has(isa)) out.push_back(isa);
  }
  return out;
}

Isa active_isa() {
  static const Isa isa = pick_active();
  return isa;
}

KernelSet kernels_for(Isa isa) {
  if (!cpu_has(isa)) {
    throw std::invalid_argument("ISA not available: " + std::string(to_string(isa)));
  }
  switch (isa) {
#if defined(FUZZYWIN_HAVE_AVX2)
    case Isa::avx2: return {isa, detail::avx2_frame, detail::avx2_ledger};
#endif
#if defined(FUZZYWIN_HAVE_NEON)
    case Isa::neon: return {isa, detail::neon_frame, detail::neon_ledger};
#endif
    default: return {Isa::scalar, detail::scalar_frame, detail::scalar_ledger};
  }
}

void evaluate_frame(double lower, double upper, std::span<const double> values,
                    std::span<double> increasing, std::span<double> decreasing, Isa isa) {
  check_sizes(values.size(), increasing.size(), decreasing.size());
  kernels_for(isa).frame(lower, upper, values.data(), increasing.data(), decreasing.data(),
                         values.size());
}

void evaluate_ledger(std::span<const double> lower, std::span<const double> upper,
                     std::span<const double> values, std::span<double> increasing,
                     std::span<double> decreasing, Isa isa) {
  check_sizes(values.size(), lower.size(), upper.size());
  check_sizes(values.size(), increasing.size(), decreasing.size());
  kernels_for(isa).ledger(lower.data(), upper.data(), values.data(), increasing.data(),
                          decreasing.data(), values.size());
}

}  // namespace fuzzywin::kernels
