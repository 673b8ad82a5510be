#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mmwave/shadowing.hpp"
#include "support.hpp"

using namespace mmwave;

TEST_CASE("sampler is reproducible") {
  ShadowSampler a(ShadowingSpec{5.0, 42});
  ShadowSampler b(ShadowingSpec{5.0, 42});
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(sample_shadowing(ShadowingSpec{5.0, 42}) == ShadowSampler(ShadowingSpec{5.0, 42}).next());
  CHECK(sample_shadowing(ShadowingSpec{0.0, 42}) == 0.0);
  CHECK_ERROR(ShadowSampler(ShadowingSpec{-1.0, 1}), ErrorCode::Domain);
}

TEST_CASE("sampler follows the documented transform") {
  std::mt19937_64 engine(9);
  const double u1 = static_cast<double>((engine() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  CHECK(ShadowSampler(ShadowingSpec{1.0, 9}).next_standard() == z);
}

TEST_CASE("sampler moments") {
  ShadowSampler s(ShadowingSpec{1.0, 123});
  constexpr int kCount = 100000;
  double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
  for (int i = 0; i < kCount; ++i) {
    const double z = s.next_standard();
    sum += z;
    sum2 += z * z;
    sum4 += z * z * z * z;
  }
  const double mean = sum / kCount;
  const double var = sum2 / kCount - mean * mean;
  CHECK(std::fabs(mean) < 0.015);
  CHECK(std::fabs(var - 1.0) < 0.02);
  CHECK(std::fabs(sum4 / kCount - 3.0) < 0.1);
}
