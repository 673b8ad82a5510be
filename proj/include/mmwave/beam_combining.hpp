#pragma once

// Multi-beam receive combining and the beam-combining CI (BC-CI) model,
// whose effective exponent is n_single * (1 - A * log2(N_r)).
//
// Linear powers are in milliwatts; everything on the log side is dB/dBm.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmwave/shadowing.hpp"
#include "mmwave/units.hpp"

namespace mmwave {

enum class CombiningScheme { Coherent, NonCoherent };

std::string_view to_string(CombiningScheme scheme) noexcept;

struct Beam {
  int index;
  double power_mw;
};

/// Per-location received powers. Non-empty, powers > 0, unique beam indices.
class BeamSet {
 public:
  BeamSet(std::string location_id, double distance_m, std::vector<Beam> beams);

  const std::string& location_id() const noexcept { return location_id_; }
  double distance_m() const noexcept { return distance_m_; }
  const std::vector<Beam>& beams() const noexcept { return beams_; }
  std::size_t size() const noexcept { return beams_.size(); }
  std::vector<double> powers_mw() const;

 private:
  std::string location_id_;
  double distance_m_;
  std::vector<Beam> beams_;
};

class BcCiModel {
 public:
  BcCiModel(FrequencyBand band, double n_single, double a_weight, CombiningScheme scheme,
            double sigma_db = 0.0);

  const FrequencyBand& band() const noexcept { return band_; }
  double n_single() const noexcept { return n_single_; }
  double a_weight() const noexcept { return a_weight_; }
  CombiningScheme scheme() const noexcept { return scheme_; }
  double sigma_db() const noexcept { return sigma_db_; }

 private:
  FrequencyBand band_;
  double n_single_;
  double a_weight_;
  CombiningScheme scheme_;
  double sigma_db_;
};

struct EffectivePle {
  double value;
  /// Set when the exponent drops below free space (2.0). Permitted, but
  /// sub-free-space attenuation is unphysical.
  bool below_free_space;
};

/// Coherent: (sum sqrt P_i)^2. Non-coherent: sum P_i. The input is summed in
/// ascending order so the result does not depend on input permutation.
double combine(std::span<const double> powers_mw, CombiningScheme scheme);

/// The n_r strongest beams, descending by power, ties by ascending index.
BeamSet select_best_beams(const BeamSet& set, std::size_t n_r);

EffectivePle effective_ple(const BcCiModel& model, int n_r);

double bc_ci_path_loss(const BcCiModel& model, int n_r, double d_m,
                       const std::optional<ShadowingSpec>& shadow = std::nullopt);

void bc_ci_path_loss_batch(const BcCiModel& model, int n_r, std::span<const double> distances_m,
                           std::span<double> out);

/// Link-budget inversion of the combined power of the n_r best beams:
/// P_tx + G_tx + G_rx - 10 log10(P_combined / 1 mW).
double measured_path_loss_from_beams(const BeamSet& set, std::size_t n_r, CombiningScheme scheme,
                                     double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi);

}  // namespace mmwave
