#pragma once

// Minimum mean square error fitters for the CI exponent, the slope
// correction factor alpha and the BC-CI weighting factor A. All three are
// single-parameter least squares through the 1 m anchor, so each reduces to
//   value = sum(x*y) / sum(x*x)
// over a model-specific regressor x and anchor-removed loss y.

#include <span>
#include <vector>

#include "mmwave/propagation.hpp"
#include "mmwave/units.hpp"

namespace mmwave {

struct FitSample {
  double distance_m;
  double path_loss_db;
  int n_r = 1;  // beams combined; only meaningful for BC-CI fits
};

/// Samples at one carrier. Every distance must be at least 1 m and every
/// n_r at least 1.
class FitDataset {
 public:
  FitDataset(FrequencyBand band, std::vector<FitSample> samples);

  const FrequencyBand& band() const noexcept { return band_; }
  const std::vector<FitSample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

 private:
  FrequencyBand band_;
  std::vector<FitSample> samples_;
};

struct FitResult {
  double value;
  double sigma_db;  // shadowing_sigma(residuals)
  std::vector<double> residuals_db;
  double rmse_db;
};

FitResult fit_ci_ple(const FitDataset& data);

/// Generic MMSE over Delta_base(d) = PL_base(d) - PL_base(1 m). The base must
/// be at the dataset's carrier.
FitResult fit_slope_correction(const FitDataset& data, const ModifiedBase& base);

/// Closed form of fit_slope_correction for data lying on a CI curve: the
/// ratio n_ci / base_ple(base). Independent of the distance grid.
double slope_correction_ratio(double n_ci, const ModifiedBase& base);

/// Samples with n_r = 1 contribute nothing to the normal equation and are
/// accepted; at least one sample with n_r >= 2 (and d > 1 m) is required.
FitResult fit_bc_weight(const FitDataset& data, double n_single);

/// Population RMS of the residuals (divide by K).
double shadowing_sigma(std::span<const double> residuals_db);

}  // namespace mmwave
