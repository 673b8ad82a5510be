#include "mmwave/propagation.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mmwave/errors.hpp"
#include "mmwave/simd/kernels.hpp"

namespace mmwave {

namespace {

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorCode::Domain, std::string(what) + " must be positive, got " +
                                       std::to_string(value));
  }
}

void require_non_negative(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw Error(ErrorCode::Domain, std::string(what) + " must be >= 0, got " +
                                       std::to_string(value));
  }
}

double add_shadowing(double loss_db, const std::optional<ShadowingSpec>& shadow) {
  return shadow ? loss_db + sample_shadowing(*shadow) : loss_db;
}

std::vector<double> log10_distances(std::span<const double> distances_m) {
  std::vector<double> x(distances_m.size());
  for (std::size_t i = 0; i < distances_m.size(); ++i) {
    require_reference_distance(distances_m[i]);
    x[i] = std::log10(distances_m[i]);
  }
  return x;
}

}  // namespace

void require_reference_distance(double d_m) {
  if (!(d_m >= kReferenceDistanceM) || !std::isfinite(d_m)) {
    throw Error(ErrorCode::BelowReferenceDistance,
                "distance " + std::to_string(d_m) +
                    " m is below the 1 m close-in reference distance (d >= 1 m required)");
  }
}

TerrainParams terrain_params(TerrainClass terrain) {
  switch (terrain) {
    case TerrainClass::A: return {TerrainClass::A, 4.6, 0.0075, 12.6};
    case TerrainClass::B: return {TerrainClass::B, 4.0, 0.0065, 17.1};
    case TerrainClass::C: return {TerrainClass::C, 3.6, 0.005, 20.0};
  }
  throw Error(ErrorCode::Domain, "unknown terrain class");
}

char terrain_letter(TerrainClass terrain) noexcept {
  switch (terrain) {
    case TerrainClass::A: return 'A';
    case TerrainClass::B: return 'B';
    case TerrainClass::C: return 'C';
  }
  return '?';
}

SuiContext::SuiContext(FrequencyBand band, TerrainClass terrain, double h_tx_m, double h_rx_m)
    : band_(band), terrain_(terrain_params(terrain)), h_tx_m_(h_tx_m), h_rx_m_(h_rx_m) {
  require_positive(h_tx_m, "TX height");
  require_positive(h_rx_m, "RX height");
  // Validates the frequency correction's range up front.
  (void)sui_freq_correction(band_);
}

CiModel::CiModel(FrequencyBand band, double ple, double sigma_db)
    : band_(band), ple_(ple), sigma_db_(sigma_db) {
  require_positive(ple, "path loss exponent");
  require_non_negative(sigma_db, "shadowing sigma");
}

const FrequencyBand& base_band(const ModifiedBase& base) noexcept {
  if (const auto* fs = std::get_if<FreeSpaceBase>(&base)) return fs->band;
  return std::get<SuiContext>(base).band();
}

ModifiedModel::ModifiedModel(ModifiedBase base, double alpha, double sigma_db)
    : base_(std::move(base)), alpha_(alpha), sigma_db_(sigma_db) {
  require_positive(alpha, "slope correction factor");
  require_non_negative(sigma_db, "shadowing sigma");
}

double ModifiedModel::anchor_pl_db() const { return fspl_1m(band()); }

double fspl_1m(const FrequencyBand& band) { return 32.4 + 20.0 * std::log10(band.ghz()); }

double fs_path_loss(const FrequencyBand& band, double d_m, double tx_gain_dbi,
                    double rx_gain_dbi) {
  require_reference_distance(d_m);
  const double gt = to_linear(tx_gain_dbi);
  const double gr = to_linear(rx_gain_dbi);
  const double lambda = band.wavelength_m();
  const double spread = 4.0 * std::numbers::pi * d_m;
  return -10.0 * std::log10(gt * gr * lambda * lambda / (spread * spread));
}

double sui_ple(const TerrainParams& terrain, double h_tx_m) {
  require_positive(h_tx_m, "TX height");
  return terrain.a - terrain.b * h_tx_m + terrain.c / h_tx_m;
}

double sui_freq_correction(const FrequencyBand& band) {
  if (band.ghz() < 2.0) {
    throw Error(ErrorCode::OutOfValidity,
                "SUI frequency correction requires f >= 2 GHz, got " +
                    std::to_string(band.ghz()) + " GHz");
  }
  return 6.0 * std::log10(band.mhz() / 2000.0);
}

double sui_rx_height_correction(TerrainClass terrain, double h_rx_m) {
  require_positive(h_rx_m, "RX height");
  const double scale = terrain == TerrainClass::C ? -20.0 : -10.8;
  return scale * std::log10(h_rx_m / 2.0);
}

double sui_path_loss(const SuiContext& ctx, double d_m,
                     const std::optional<ShadowingSpec>& shadow) {
  require_reference_distance(d_m);
  const double n = sui_ple(ctx.terrain(), ctx.h_tx_m());
  const double loss = fspl_1m(ctx.band()) + 10.0 * n * std::log10(d_m) +
                      sui_freq_correction(ctx.band()) +
                      sui_rx_height_correction(ctx.terrain().terrain_class, ctx.h_rx_m());
  return add_shadowing(loss, shadow);
}

double ci_path_loss(const CiModel& model, double d_m, const std::optional<ShadowingSpec>& shadow) {
  require_reference_distance(d_m);
  return add_shadowing(fspl_1m(model.band()) + 10.0 * model.ple() * std::log10(d_m), shadow);
}

double base_slope_term(const ModifiedBase& base, double d_m) {
  if (const auto* fs = std::get_if<FreeSpaceBase>(&base)) {
    return fs_path_loss(fs->band, d_m, fs->tx_gain_dbi, fs->rx_gain_dbi) -
           fs_path_loss(fs->band, kReferenceDistanceM, fs->tx_gain_dbi, fs->rx_gain_dbi);
  }
  const auto& ctx = std::get<SuiContext>(base);
  return sui_path_loss(ctx, d_m) - sui_path_loss(ctx, kReferenceDistanceM);
}

double base_ple(const ModifiedBase& base) {
  if (std::holds_alternative<FreeSpaceBase>(base)) return 2.0;
  const auto& ctx = std::get<SuiContext>(base);
  return sui_ple(ctx.terrain(), ctx.h_tx_m());
}

double modified_path_loss(const ModifiedModel& model, double d_m,
                          const std::optional<ShadowingSpec>& shadow) {
  const double loss = model.alpha() * base_slope_term(model.base(), d_m) + model.anchor_pl_db();
  return add_shadowing(loss, shadow);
}

double modified_fs_path_loss(const ModifiedModel& model, double d_m,
                             const std::optional<ShadowingSpec>& shadow) {
  if (!model.is_free_space()) {
    throw Error(ErrorCode::Domain, "modified FS evaluation needs a free-space base");
  }
  return modified_path_loss(model, d_m, shadow);
}

double modified_sui_path_loss(const ModifiedModel& model, double d_m,
                              const std::optional<ShadowingSpec>& shadow) {
  if (model.is_free_space()) {
    throw Error(ErrorCode::Domain, "modified SUI evaluation needs a SUI base");
  }
  return modified_path_loss(model, d_m, shadow);
}

void ci_path_loss_batch(const CiModel& model, std::span<const double> distances_m,
                        std::span<double> out) {
  assert(out.size() == distances_m.size());
  const auto x = log10_distances(distances_m);
  simd::affine(x, fspl_1m(model.band()), 10.0 * model.ple(), out);
}

void sui_path_loss_batch(const SuiContext& ctx, std::span<const double> distances_m,
                         std::span<double> out) {
  assert(out.size() == distances_m.size());
  const auto x = log10_distances(distances_m);
  const double offset = fspl_1m(ctx.band()) + sui_freq_correction(ctx.band()) +
                        sui_rx_height_correction(ctx.terrain().terrain_class, ctx.h_rx_m());
  simd::affine(x, offset, 10.0 * sui_ple(ctx.terrain(), ctx.h_tx_m()), out);
}

void fs_path_loss_batch(const FrequencyBand& band, std::span<const double> distances_m,
                        std::span<double> out) {
  assert(out.size() == distances_m.size());
  const auto x = log10_distances(distances_m);
  simd::affine(x, fs_path_loss(band, kReferenceDistanceM), 20.0, out);
}

void modified_path_loss_batch(const ModifiedModel& model, std::span<const double> distances_m,
                              std::span<double> out) {
  assert(out.size() == distances_m.size());
  std::vector<double> slope_terms(distances_m.size());
  for (std::size_t i = 0; i < distances_m.size(); ++i) {
    slope_terms[i] = base_slope_term(model.base(), distances_m[i]);
  }
  simd::affine(slope_terms, model.anchor_pl_db(), model.alpha(), out);
}

}  // namespace mmwave
