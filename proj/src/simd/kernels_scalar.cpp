#include <cmath>

#include "kernels_impl.hpp"

namespace mmwave::simd::detail {

namespace {

void affine(const double* x, std::size_t n, double offset, double slope, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = offset + slope * x[i];
}

void residuals(const double* y, const double* x, std::size_t n, double slope, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i] - slope * x[i];
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_squares(const double* x, std::size_t n) { return dot(x, x, n); }

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double sum_sqrt(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::sqrt(x[i]);
  return acc;
}

}  // namespace

const KernelTable kScalarTable{Isa::Scalar, affine, residuals, dot, sum_squares, sum, sum_sqrt};

}  // namespace mmwave::simd::detail
