#include <doctest.h>

#include <random>

#include "mmwave/beam_combining.hpp"
#include "mmwave/data_io.hpp"
#include "mmwave/estimation.hpp"
#include "mmwave/format.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mmwave;

namespace {
const FrequencyBand k28(28.0);
const FrequencyBand k60(60.0);
const FrequencyBand k73(73.0);

FitDataset ci_samples(const FrequencyBand& band, double n, std::span<const double> d,
                      std::span<const double> noise = {}) {
  std::vector<FitSample> s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    s.push_back({d[i], ci_path_loss(CiModel(band, n), d[i]) + (noise.empty() ? 0.0 : noise[i])});
  }
  return FitDataset(band, std::move(s));
}
}  // namespace

TEST_CASE("dataset validation") {
  CHECK_ERROR(FitDataset(k28, {}), ErrorCode::EmptyInput);
  CHECK_ERROR(FitDataset(k28, {{0.5, 80.0}}), ErrorCode::BelowReferenceDistance);
  CHECK_ERROR(FitDataset(k28, {{5.0, NAN}}), ErrorCode::Domain);
  CHECK_ERROR(FitDataset(k28, {{5.0, 80.0, 0}}), ErrorCode::Domain);
}

TEST_CASE("ci exponent fit") {
  const std::vector<double> d{10, 20, 50, 100, 129};
  CHECK(std::fabs(fit_ci_ple(ci_samples(k60, 3.6, d)).value - 3.6) < 1e-12);

  const std::vector<double> d4{10, 20, 50, 100};
  const std::vector<double> noise{3, -3, 3, -3};
  const auto fit = fit_ci_ple(ci_samples(k73, 4.4, d4, noise));
  CHECK(std::fabs(fit.value - oracle::ci_closed_form(k73, d4, [&] {
                    std::vector<double> y;
                    for (std::size_t i = 0; i < d4.size(); ++i) {
                      y.push_back(ci_path_loss(CiModel(k73, 4.4), d4[i]) + noise[i]);
                    }
                    return y;
                  }())) < 1e-12);
  CHECK(fit.sigma_db == shadowing_sigma(fit.residuals_db));

  const std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK_ERROR(fit_ci_ple(ci_samples(k28, 3.0, ones)), ErrorCode::DegenerateFit);
  const std::vector<double> single{10.0};
  CHECK_ERROR(fit_ci_ple(ci_samples(k28, 3.0, single)), ErrorCode::DegenerateFit);
}

TEST_CASE("slope correction fit") {
  const auto d = log_spaced(29.0, 129.0, 12);
  const SuiContext a60(k60, TerrainClass::A, 1.5, 1.5);
  CHECK(round_to(fit_slope_correction(ci_samples(k60, 3.6, d), a60).value, 3) == 0.277);
  const SuiContext b73(k73, TerrainClass::B, 7.0, 2.0);
  CHECK(round_to(fit_slope_correction(ci_samples(k73, 4.9, d), b73).value, 3) == 0.766);
  CHECK(std::fabs(fit_slope_correction(ci_samples(k60, 2.0, d), FreeSpaceBase{k60}).value - 1.0) <
        1e-12);
  CHECK_ERROR(fit_slope_correction(ci_samples(k60, 2.0, d), FreeSpaceBase{k73}), ErrorCode::Domain);

  const auto other = log_spaced(1.5, 8000.0, 300);
  const double g1 = fit_slope_correction(ci_samples(k73, 4.4, d), b73).value;
  const double g2 = fit_slope_correction(ci_samples(k73, 4.4, other), b73).value;
  CHECK(std::fabs(g1 - g2) < 1e-12);
  CHECK(std::fabs(g1 - slope_correction_ratio(4.4, b73)) < 1e-12);
}

TEST_CASE("residual orthogonality") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 6.0);
  const auto d = log_spaced(5.0, 400.0, 40);
  std::vector<double> eps(d.size());
  for (double& e : eps) e = noise(rng);
  const auto data = ci_samples(k28, 3.1, d, eps);

  const auto ci = fit_ci_ple(data);
  double acc = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = 10.0 * std::log10(d[i]);
    acc += ci.residuals_db[i] * x;
    scale += std::fabs(x);
  }
  CHECK(std::fabs(acc) <= 1e-9 * scale);

  const SuiContext ctx(k28, TerrainClass::C, 12.0, 2.0);
  const auto alpha = fit_slope_correction(data, ctx);
  acc = scale = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = base_slope_term(ctx, d[i]);
    acc += alpha.residuals_db[i] * x;
    scale += std::fabs(x);
  }
  CHECK(std::fabs(acc) <= 1e-9 * scale);
  CHECK(alpha.sigma_db == shadowing_sigma(alpha.residuals_db));
}

TEST_CASE("bc weight fit") {
  const BcCiModel truth(k28, 3.812, 0.05, CombiningScheme::Coherent);
  std::vector<FitSample> s;
  for (double d : log_spaced(20.0, 200.0, 9)) {
    for (int n = 1; n <= 4; ++n) s.push_back({d, bc_ci_path_loss(truth, n, d), n});
  }
  const auto fit = fit_bc_weight(FitDataset(k28, s), 3.812);
  CHECK(std::fabs(fit.value - 0.05) < 1e-12);
  CHECK(fit.sigma_db < 1e-9);

  std::vector<FitSample> singles;
  for (const auto& x : s) {
    if (x.n_r == 1) singles.push_back(x);
  }
  CHECK_ERROR(fit_bc_weight(FitDataset(k28, singles), 3.812), ErrorCode::Unidentifiable);
}

TEST_CASE("bc weight matches grid search oracle") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> noise(0.0, 2.0);
  const BcCiModel truth(k73, 3.7, 0.06, CombiningScheme::NonCoherent);
  std::vector<FitSample> s;
  for (double d : {40.0, 70.0, 120.0, 180.0}) {
    for (int n = 1; n <= 4; ++n) s.push_back({d, bc_ci_path_loss(truth, n, d) + noise(rng), n});
  }
  const FitDataset data(k73, s);
  const double closed = fit_bc_weight(data, 3.7).value;
  const double grid = oracle::grid_search_a(data, 3.7, 0.0, 0.2, 1e-6);
  CHECK(std::fabs(closed - grid) < 2e-6);
}

TEST_CASE("bracket of the weight from published per-beam exponents") {
  const double n1 = 3.812;
  const double ple_ref[4] = {3.812, 3.548, 3.406, 3.307};
  for (std::size_t count : {5u, 11u, 40u}) {
    std::vector<FitSample> s;
    for (double d : log_spaced(10.0, 200.0, count)) {
      for (int n = 1; n <= 4; ++n) s.push_back({d, ci_path_loss(CiModel(k28, ple_ref[n - 1]), d), n});
    }
    const double a = fit_bc_weight(FitDataset(k28, s), n1).value;
    CHECK(a >= 0.066);
    CHECK(a <= 0.070);
  }
}

TEST_CASE("shadowing sigma") {
  const std::vector<double> zeros{0, 0, 0};
  CHECK(shadowing_sigma(zeros) == 0.0);
  const std::vector<double> pm{3, -3};
  CHECK(shadowing_sigma(pm) == 3.0);
  const std::vector<double> mix{1, 2, 2, 4, 6};
  CHECK(shadowing_sigma(mix) == doctest::Approx(std::sqrt(61.0 / 5.0)));
  CHECK(std::fabs(shadowing_sigma(mix) - 3.4928) < 5e-5);
  CHECK_ERROR(shadowing_sigma(std::vector<double>{}), ErrorCode::EmptyInput);
}
