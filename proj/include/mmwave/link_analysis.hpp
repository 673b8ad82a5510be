#pragma once

#include "mmwave/beam_combining.hpp"
#include "mmwave/propagation.hpp"

namespace mmwave {

/// Bisection bracket for range solving, in meters.
inline constexpr double kRangeBracketLowM = 1.0;
inline constexpr double kRangeBracketHighM = 1.0e6;

/// Distance at which a CI-form model (anchor + 10 n log10 d) plus an optional
/// linear atmospheric term reaches a target loss.
struct RangeQuery {
  FrequencyBand band;
  double effective_ple;
  double target_loss_db;
  double atmospheric_db_per_km = 0.0;

  static RangeQuery for_model(const CiModel& model, double target_loss_db,
                              double atmospheric_db_per_km = 0.0);
  static RangeQuery for_model(const BcCiModel& model, int n_r, double target_loss_db,
                              double atmospheric_db_per_km = 0.0);
};

/// Forward model matching RangeQuery: FSPL(1 m) + 10 n log10 d + rate d / 1000.
double link_path_loss(const FrequencyBand& band, double effective_ple, double d_m,
                      double atmospheric_db_per_km = 0.0);

/// Closed form when the atmospheric rate is zero, bisection otherwise.
double distance_for_loss(const RangeQuery& query);

/// Always bisects on [1 m, 1e6 m] until the bracket width is below
/// 1e-12 relative.
double distance_for_loss_bisection(const RangeQuery& query);

/// 10 * (ple_a - ple_b): change in attenuation per decade of distance.
double attenuation_per_decade_delta(double ple_a, double ple_b);

double atmospheric_loss(double db_per_km, double d_m);

}  // namespace mmwave
