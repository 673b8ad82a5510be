// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace mmwave::simd::detail {

namespace {

constexpr std::size_t kLanes = 4;

// Fixed lane order so the reduction is reproducible.
inline double horizontal_sum(__m256d v) {
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

void affine(const double* x, std::size_t n, double offset, double slope, double* out) {
  const __m256d vo = _mm256_set1_pd(offset);
  const __m256d vs = _mm256_set1_pd(slope);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i), vo));
  }
  for (; i < n; ++i) out[i] = std::fma(slope, x[i], offset);
}

void residuals(const double* y, const double* x, std::size_t n, double slope, double* out) {
  const __m256d vs = _mm256_set1_pd(slope);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    _mm256_storeu_pd(out + i,
                     _mm256_fnmadd_pd(vs, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) out[i] = std::fma(-slope, x[i], y[i]);
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + kLanes), _mm256_loadu_pd(b + i + kLanes),
                           acc1);
  }
  for (; i + kLanes <= n; i += kLanes) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double total = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total = std::fma(a[i], b[i], total);
  return total;
}

double sum_squares(const double* x, std::size_t n) { return dot(x, x, n); }

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += x[i];
  return total;
}

double sum_sqrt(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(_mm256_loadu_pd(x + i)));
  }
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += std::sqrt(x[i]);
  return total;
}

}  // namespace

const KernelTable kAvx2Table{Isa::Avx2, affine, residuals, dot, sum_squares, sum, sum_sqrt};

}  // namespace mmwave::simd::detail
