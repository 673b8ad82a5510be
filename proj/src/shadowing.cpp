#include "mmwave/shadowing.hpp"

#include <cmath>
#include <numbers>

#include "mmwave/errors.hpp"

namespace mmwave {

ShadowSampler::ShadowSampler(const ShadowingSpec& spec)
    : sigma_(spec.sigma_db), engine_(spec.seed) {
  if (!(spec.sigma_db >= 0.0) || !std::isfinite(spec.sigma_db)) {
    throw Error(ErrorCode::Domain, "shadowing sigma must be finite and >= 0 dB");
  }
}

double ShadowSampler::next_standard() {
  constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * kInv53;
  const double u2 = static_cast<double>(engine_() >> 11) * kInv53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double ShadowSampler::next() { return sigma_ * next_standard(); }

double sample_shadowing(const ShadowingSpec& spec) {
  ShadowSampler sampler(spec);
  return sampler.next();
}

}  // namespace mmwave
