#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace mmwave {

/// Zero-mean log-normal shadowing X_sigma, expressed as an additive dB term.
struct ShadowingSpec {
  double sigma_db = 0.0;
  std::uint64_t seed = 0;
};

/// Identifier of the sampling algorithm. Generated datasets record it so a
/// seed keeps meaning the same thing across releases.
inline constexpr std::string_view kShadowSamplerName = "mt19937_64+box-muller/v1";

/// Sequential Gaussian sampler. Draw k uses engine outputs 2k and 2k+1:
/// u1 = ((e >> 11) + 1) * 2^-53 in (0, 1], u2 = (e >> 11) * 2^-53 in [0, 1),
/// z = sqrt(-2 ln u1) * cos(2 pi u2). std::mt19937_64 output is fixed by the
/// standard; std::normal_distribution is not, hence the explicit transform.
class ShadowSampler {
 public:
  explicit ShadowSampler(const ShadowingSpec& spec);

  /// Next shadowing sample in dB (sigma * z).
  double next();

  /// Next standard normal variate.
  double next_standard();

 private:
  double sigma_;
  std::mt19937_64 engine_;
};

/// First sample of the stream seeded by spec.seed.
double sample_shadowing(const ShadowingSpec& spec);

}  // namespace mmwave
