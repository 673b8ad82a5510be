#pragma once

#include <cmath>

namespace mmwave {

/// Speed of light as used by the Friis anchor (the 32.4 dB constant form).
inline constexpr double kSpeedOfLight = 3.0e8;

/// Close-in reference distance, fixed at 1 m for every model in the toolkit.
inline constexpr double kReferenceDistanceM = 1.0;

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Carrier frequency. Stored in GHz; MHz and Hz views are exact scalings.
class FrequencyBand {
 public:
  explicit FrequencyBand(double carrier_ghz);

  double ghz() const noexcept { return ghz_; }
  double mhz() const noexcept { return ghz_ * 1.0e3; }
  double hz() const noexcept { return ghz_ * 1.0e9; }
  double wavelength_m() const noexcept { return kSpeedOfLight / hz(); }

  friend bool operator==(const FrequencyBand&, const FrequencyBand&) = default;

 private:
  double ghz_;
};

}  // namespace mmwave
