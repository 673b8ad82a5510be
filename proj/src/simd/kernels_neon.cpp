// AArch64 Advanced SIMD. NEON is architectural on AArch64, so no runtime
// probe is needed beyond compiling this file.

#include <arm_neon.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace mmwave::simd::detail {

namespace {

constexpr std::size_t kLanes = 2;

inline double horizontal_sum(float64x2_t v) {
  return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1);
}

void affine(const double* x, std::size_t n, double offset, double slope, double* out) {
  const float64x2_t vo = vdupq_n_f64(offset);
  const float64x2_t vs = vdupq_n_f64(slope);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_f64(out + i, vfmaq_f64(vo, vs, vld1q_f64(x + i)));
  for (; i < n; ++i) out[i] = std::fma(slope, x[i], offset);
}

void residuals(const double* y, const double* x, std::size_t n, double slope, double* out) {
  const float64x2_t vs = vdupq_n_f64(slope);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    vst1q_f64(out + i, vfmsq_f64(vld1q_f64(y + i), vs, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) out[i] = std::fma(-slope, x[i], y[i]);
}

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + kLanes), vld1q_f64(b + i + kLanes));
  }
  for (; i + kLanes <= n; i += kLanes) acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
  double total = horizontal_sum(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) total = std::fma(a[i], b[i], total);
  return total;
}

double sum_squares(const double* x, std::size_t n) { return dot(x, x, n); }

double sum(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = vaddq_f64(acc, vld1q_f64(x + i));
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += x[i];
  return total;
}

double sum_sqrt(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = vaddq_f64(acc, vsqrtq_f64(vld1q_f64(x + i)));
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += std::sqrt(x[i]);
  return total;
}

}  // namespace

const KernelTable kNeonTable{Isa::Neon, affine, residuals, dot, sum_squares, sum, sum_sqrt};

}  // namespace mmwave::simd::detail
