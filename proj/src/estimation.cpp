#include "mmwave/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmwave/errors.hpp"
#include "mmwave/simd/kernels.hpp"

namespace mmwave {

namespace {

// Least squares through the origin: minimizes sum (y - v x)^2.
FitResult fit_through_origin(const std::vector<double>& x, const std::vector<double>& y,
                             ErrorCode degenerate_code, const char* what) {
  const double sxx = simd::sum_squares(x);
  if (!(sxx > 0.0)) {
    throw Error(degenerate_code, std::string(what) + " is unidentifiable: zero regressor energy");
  }
  FitResult result;
  result.value = simd::dot(x, y) / sxx;
  result.residuals_db.resize(y.size());
  simd::residuals(y, x, result.value, result.residuals_db);
  result.sigma_db = shadowing_sigma(result.residuals_db);
  result.rmse_db = std::sqrt(simd::sum_squares(result.residuals_db) /
                             static_cast<double>(result.residuals_db.size()));
  return result;
}

void require_slope_identifiable(const FitDataset& data) {
  const auto& samples = data.samples();
  const double first = samples.front().distance_m;
  const bool distinct = std::any_of(samples.begin(), samples.end(),
                                    [&](const FitSample& s) { return s.distance_m != first; });
  if (samples.size() < 2 || !distinct) {
    throw Error(ErrorCode::DegenerateFit,
                "slope fits need at least 2 samples at 2 distinct distances");
  }
}

}  // namespace

FitDataset::FitDataset(FrequencyBand band, std::vector<FitSample> samples)
    : band_(band), samples_(std::move(samples)) {
  if (samples_.empty()) throw Error(ErrorCode::EmptyInput, "fit dataset has no samples");
  for (const FitSample& s : samples_) {
    require_reference_distance(s.distance_m);
    if (!std::isfinite(s.path_loss_db)) {
      throw Error(ErrorCode::Domain, "path loss samples must be finite");
    }
    if (s.n_r < 1) throw Error(ErrorCode::Domain, "n_r must be >= 1 for every sample");
  }
}

FitResult fit_ci_ple(const FitDataset& data) {
  require_slope_identifiable(data);
  const double anchor = fspl_1m(data.band());
  std::vector<double> x, y;
  x.reserve(data.size());
  y.reserve(data.size());
  for (const FitSample& s : data.samples()) {
    x.push_back(10.0 * std::log10(s.distance_m));
    y.push_back(s.path_loss_db - anchor);
  }
  return fit_through_origin(x, y, ErrorCode::DegenerateFit, "path loss exponent");
}

FitResult fit_slope_correction(const FitDataset& data, const ModifiedBase& base) {
  if (!(base_band(base) == data.band())) {
    throw Error(ErrorCode::Domain, "base model carrier differs from the dataset carrier");
  }
  require_slope_identifiable(data);
  const double anchor = fspl_1m(data.band());
  std::vector<double> x, y;
  x.reserve(data.size());
  y.reserve(data.size());
  for (const FitSample& s : data.samples()) {
    x.push_back(base_slope_term(base, s.distance_m));
    y.push_back(s.path_loss_db - anchor);
  }
  return fit_through_origin(x, y, ErrorCode::DegenerateFit, "slope correction factor");
}

double slope_correction_ratio(double n_ci, const ModifiedBase& base) {
  if (!(n_ci > 0.0)) throw Error(ErrorCode::Domain, "CI exponent must be positive");
  return n_ci / base_ple(base);
}

FitResult fit_bc_weight(const FitDataset& data, double n_single) {
  if (!(n_single > 0.0) || !std::isfinite(n_single)) {
    throw Error(ErrorCode::Domain, "single-beam exponent must be positive");
  }
  const auto& samples = data.samples();
  if (std::none_of(samples.begin(), samples.end(), [](const FitSample& s) { return s.n_r >= 2; })) {
    throw Error(ErrorCode::Unidentifiable,
                "weighting factor A needs samples combining at least 2 beams");
  }
  const double anchor = fspl_1m(data.band());
  std::vector<double> x, y;
  x.reserve(samples.size());
  y.reserve(samples.size());
  for (const FitSample& s : samples) {
    const double slope = 10.0 * n_single * std::log10(s.distance_m);
    x.push_back(-slope * std::log2(static_cast<double>(s.n_r)));
    y.push_back(s.path_loss_db - anchor - slope);
  }
  return fit_through_origin(x, y, ErrorCode::Unidentifiable, "weighting factor A");
}

double shadowing_sigma(std::span<const double> residuals_db) {
  if (residuals_db.empty()) throw Error(ErrorCode::EmptyInput, "no residuals");
  return std::sqrt(simd::sum_squares(residuals_db) / static_cast<double>(residuals_db.size()));
}

}  // namespace mmwave
