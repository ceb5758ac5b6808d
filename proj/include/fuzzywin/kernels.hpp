#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Batch membership evaluation. Every variant produces bit-identical results to the
// scalar reference; inputs are assumed pre-validated (finite values, lower < upper).

namespace fuzzywin::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

/// Shared frame for every element.
using FrameKernel = void (*)(double lower, double upper, const double* values, double* increasing,
                             double* decreasing, std::size_t n);
/// One frame per element.
using LedgerKernel = void (*)(const double* lower, const double* upper, const double* values,
                              double* increasing, double* decreasing, std::size_t n);

struct KernelSet {
  Isa isa;
  FrameKernel frame;
  LedgerKernel ledger;
};

/// ISAs compiled into this binary and supported by the running CPU, scalar first.
std::vector<Isa> available_isas();

/// Widest available ISA, unless FUZZYWIN_ISA names another available one.
Isa active_isa();

/// Throws std::invalid_argument if `isa` is not available.
KernelSet kernels_for(Isa isa);

void evaluate_frame(double lower, double upper, std::span<const double> values,
                    std::span<double> increasing, std::span<double> decreasing,
                    Isa isa = active_isa());

void evaluate_ledger(std::span<const double> lower, std::span<const double> upper,
                     std::span<const double> values, std::span<double> increasing,
                     std::span<double> decreasing, Isa isa = active_isa());

namespace detail {
// Per-ISA entry points; only the ones compiled for this target are defined.
void scalar_frame(double, double, const double*, double*, double*, std::size_t);
void scalar_ledger(const double*, const double*, const double*, double*, double*, std::size_t);
void avx2_frame(double, double, const double*, double*, double*, std::size_t);
void avx2_ledger(const double*, const double*, const double*, double*, double*, std::size_t);
void neon_frame(double, double, const double*, double*, double*, std::size_t);
void neon_ledger(const double*, const double*, const double*, double*, double*, std::size_t);
}  // namespace detail

}  // namespace fuzzywin::kernels
