#pragma once

// Closed-form path loss models anchored to a 1 m free-space reference:
// Friis free space, SUI with frequency and receiver-height corrections,
// the close-in (CI) model, and the slope-corrected FS/SUI variants.
//
// All functions are pure. Shadowing is opt-in and seed-deterministic.
// Distances below the 1 m reference are rejected, never clamped.

#include <optional>
#include <span>
#include <variant>

#include "mmwave/shadowing.hpp"
#include "mmwave/units.hpp"

namespace mmwave {

enum class TerrainClass { A, B, C };

struct TerrainParams {
  TerrainClass terrain_class;
  double a;  // dimensionless
  double b;  // 1/m
  double c;  // m
};

TerrainParams terrain_params(TerrainClass terrain);
char terrain_letter(TerrainClass terrain) noexcept;

/// Inputs of the SUI model. Requires positive antenna heights and a carrier
/// of at least 2 GHz (the frequency correction is undefined below).
class SuiContext {
 public:
  SuiContext(FrequencyBand band, TerrainClass terrain, double h_tx_m, double h_rx_m);

  const FrequencyBand& band() const noexcept { return band_; }
  const TerrainParams& terrain() const noexcept { return terrain_; }
  double h_tx_m() const noexcept { return h_tx_m_; }
  double h_rx_m() const noexcept { return h_rx_m_; }

 private:
  FrequencyBand band_;
  TerrainParams terrain_;
  double h_tx_m_;
  double h_rx_m_;
};

class CiModel {
 public:
  CiModel(FrequencyBand band, double ple, double sigma_db = 0.0);

  const FrequencyBand& band() const noexcept { return band_; }
  double ple() const noexcept { return ple_; }
  double sigma_db() const noexcept { return sigma_db_; }
  static constexpr double d0_m() noexcept { return kReferenceDistanceM; }

 private:
  FrequencyBand band_;
  double ple_;
  double sigma_db_;
};

/// Friis base for the modified FS model. Gains are metadata by default (0 dBi).
struct FreeSpaceBase {
  FrequencyBand band;
  double tx_gain_dbi = 0.0;
  double rx_gain_dbi = 0.0;
};

using ModifiedBase = std::variant<FreeSpaceBase, SuiContext>;

const FrequencyBand& base_band(const ModifiedBase& base) noexcept;

/// Slope-corrected FS (LOS) or SUI (NLOS) model:
///   PL(d) = alpha * (PL_base(d) - PL_base(1 m)) + FSPL(f, 1 m)
class ModifiedModel {
 public:
  ModifiedModel(ModifiedBase base, double alpha, double sigma_db = 0.0);

  const ModifiedBase& base() const noexcept { return base_; }
  double alpha() const noexcept { return alpha_; }
  double sigma_db() const noexcept { return sigma_db_; }
  const FrequencyBand& band() const noexcept { return base_band(base_); }
  bool is_free_space() const noexcept { return std::holds_alternative<FreeSpaceBase>(base_); }
  /// PL(d0), tied to the 1 m free space anchor.
  double anchor_pl_db() const;

 private:
  ModifiedBase base_;
  double alpha_;
  double sigma_db_;
};

/// 32.4 + 20 log10(f_GHz): free space path loss at 1 m, rounded-constant form.
double fspl_1m(const FrequencyBand& band);

/// Friis free space loss with antenna gains in dBi.
double fs_path_loss(const FrequencyBand& band, double d_m, double tx_gain_dbi = 0.0,
                    double rx_gain_dbi = 0.0);

/// SUI path loss exponent a - b*h_tx + c/h_tx.
double sui_ple(const TerrainParams& terrain, double h_tx_m);
double sui_freq_correction(const FrequencyBand& band);
double sui_rx_height_correction(TerrainClass terrain, double h_rx_m);
double sui_path_loss(const SuiContext& ctx, double d_m,
                     const std::optional<ShadowingSpec>& shadow = std::nullopt);

double ci_path_loss(const CiModel& model, double d_m,
                    const std::optional<ShadowingSpec>& shadow = std::nullopt);

/// Distance-dependent part of a base model, PL_base(d) - PL_base(1 m).
double base_slope_term(const ModifiedBase& base, double d_m);

/// PLE of the base model: 2 for free space, sui_ple for SUI.
double base_ple(const ModifiedBase& base);

double modified_fs_path_loss(const ModifiedModel& model, double d_m,
                             const std::optional<ShadowingSpec>& shadow = std::nullopt);
double modified_sui_path_loss(const ModifiedModel& model, double d_m,
                              const std::optional<ShadowingSpec>& shadow = std::nullopt);
/// Dispatches on the base kind.
double modified_path_loss(const ModifiedModel& model, double d_m,
                          const std::optional<ShadowingSpec>& shadow = std::nullopt);

// Grid evaluation through the SIMD kernels (no shadowing). out.size() must
// equal distances.size().
void ci_path_loss_batch(const CiModel& model, std::span<const double> distances_m,
                        std::span<double> out);
void sui_path_loss_batch(const SuiContext& ctx, std::span<const double> distances_m,
                         std::span<double> out);
void fs_path_loss_batch(const FrequencyBand& band, std::span<const double> distances_m,
                        std::span<double> out);
void modified_path_loss_batch(const ModifiedModel& model, std::span<const double> distances_m,
                              std::span<double> out);

/// Throws BelowReferenceDistance when d < 1 m (or not finite).
void require_reference_distance(double d_m);

}  // namespace mmwave
