#pragma once

// Data-parallel inner loops shared by the model, fitting and combining code.
//
// Every kernel has a scalar reference implementation; vector variants are
// compiled per ISA and selected once at runtime from the CPU feature bits.
// Vector reductions use a different summation order than the scalar loop,
// so results agree to rounding, not bit-for-bit. Within one process the
// selected table never changes, which keeps every output reproducible.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace mmwave::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  // out[i] = offset + slope * x[i]
  void (*affine)(const double* x, std::size_t n, double offset, double slope, double* out);
  // out[i] = y[i] - slope * x[i]
  void (*residuals)(const double* y, const double* x, std::size_t n, double slope, double* out);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum_squares)(const double* x, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  double (*sum_sqrt)(const double* x, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// Table for a given ISA, or nullptr when it was not compiled in or the
/// running CPU lacks the required features.
const KernelTable* kernels_for(Isa isa) noexcept;

/// ISAs usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// Process-wide selection: best available ISA, overridable through the
/// MMWAVE_SIMD environment variable (scalar, avx2, neon).
const KernelTable& active_kernels() noexcept;

// Span front ends over the active table. Length mismatches are a caller bug
// and are checked with assert only.
void affine(std::span<const double> x, double offset, double slope, std::span<double> out);
void residuals(std::span<const double> y, std::span<const double> x, double slope,
               std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
double sum_squares(std::span<const double> x);
double sum(std::span<const double> x);
double sum_sqrt(std::span<const double> x);

}  // namespace mmwave::simd
