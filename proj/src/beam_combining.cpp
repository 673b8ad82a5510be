#include "mmwave/beam_combining.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <string>

#include "mmwave/errors.hpp"
#include "mmwave/propagation.hpp"
#include "mmwave/simd/kernels.hpp"

namespace mmwave {

std::string_view to_string(CombiningScheme scheme) noexcept {
  return scheme == CombiningScheme::Coherent ? "coherent" : "non-coherent";
}

BeamSet::BeamSet(std::string location_id, double distance_m, std::vector<Beam> beams)
    : location_id_(std::move(location_id)), distance_m_(distance_m), beams_(std::move(beams)) {
  require_reference_distance(distance_m_);
  if (beams_.empty()) {
    throw Error(ErrorCode::EmptyInput, "beam set '" + location_id_ + "' has no beams");
  }
  std::set<int> seen;
  for (const Beam& beam : beams_) {
    if (!(beam.power_mw > 0.0) || !std::isfinite(beam.power_mw)) {
      throw Error(ErrorCode::Domain, "beam " + std::to_string(beam.index) + " of '" +
                                         location_id_ + "' has non-positive power");
    }
    if (!seen.insert(beam.index).second) {
      throw Error(ErrorCode::Domain, "duplicate beam index " + std::to_string(beam.index) +
                                         " in '" + location_id_ + "'");
    }
  }
}

std::vector<double> BeamSet::powers_mw() const {
  std::vector<double> out;
  out.reserve(beams_.size());
  for (const Beam& beam : beams_) out.push_back(beam.power_mw);
  return out;
}

BcCiModel::BcCiModel(FrequencyBand band, double n_single, double a_weight,
                     CombiningScheme scheme, double sigma_db)
    : band_(band), n_single_(n_single), a_weight_(a_weight), scheme_(scheme), sigma_db_(sigma_db) {
  if (!(n_single > 0.0) || !std::isfinite(n_single)) {
    throw Error(ErrorCode::Domain, "single-beam path loss exponent must be positive");
  }
  if (!(a_weight >= 0.0 && a_weight < 1.0)) {
    throw Error(ErrorCode::Domain,
                "weighting factor A must lie in [0, 1), got " + std::to_string(a_weight));
  }
  if (!(sigma_db >= 0.0) || !std::isfinite(sigma_db)) {
    throw Error(ErrorCode::Domain, "shadowing sigma must be >= 0 dB");
  }
}

double combine(std::span<const double> powers_mw, CombiningScheme scheme) {
  if (powers_mw.empty()) throw Error(ErrorCode::EmptyInput, "no powers to combine");
  for (double p : powers_mw) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::Domain, "received powers must be positive (mW)");
    }
  }
  // Schemes coincide on one beam; skip the sqrt round trip.
  if (powers_mw.size() == 1) return powers_mw.front();

  std::vector<double> sorted(powers_mw.begin(), powers_mw.end());
  std::sort(sorted.begin(), sorted.end());
  // Equal powers: use N^2 P and N P directly so the ratios are exact.
  if (sorted.front() == sorted.back()) {
    const auto n = static_cast<double>(sorted.size());
    return scheme == CombiningScheme::Coherent ? n * n * sorted.front() : n * sorted.front();
  }
  if (scheme == CombiningScheme::NonCoherent) return simd::sum(sorted);
  const double amplitude = simd::sum_sqrt(sorted);
  return amplitude * amplitude;
}

BeamSet select_best_beams(const BeamSet& set, std::size_t n_r) {
  if (n_r < 1) throw Error(ErrorCode::Domain, "N_r must be >= 1");
  if (n_r > set.size()) {
    throw Error(ErrorCode::InsufficientBeams,
                "requested " + std::to_string(n_r) + " beams but '" + set.location_id() +
                    "' has " + std::to_string(set.size()));
  }
  std::vector<Beam> beams = set.beams();
  std::sort(beams.begin(), beams.end(), [](const Beam& lhs, const Beam& rhs) {
    if (lhs.power_mw != rhs.power_mw) return lhs.power_mw > rhs.power_mw;
    return lhs.index < rhs.index;
  });
  beams.resize(n_r);
  return BeamSet(set.location_id(), set.distance_m(), std::move(beams));
}

EffectivePle effective_ple(const BcCiModel& model, int n_r) {
  if (n_r < 1) {
    throw Error(ErrorCode::Domain, "N_r must be >= 1, got " + std::to_string(n_r));
  }
  const double value =
      model.n_single() * (1.0 - model.a_weight() * std::log2(static_cast<double>(n_r)));
  if (!(value > 0.0)) {
    throw Error(ErrorCode::Domain, "effective exponent is non-positive at N_r = " +
                                       std::to_string(n_r));
  }
  return {value, value < 2.0};
}

double bc_ci_path_loss(const BcCiModel& model, int n_r, double d_m,
                       const std::optional<ShadowingSpec>& shadow) {
  require_reference_distance(d_m);
  const double n_eff = effective_ple(model, n_r).value;
  const double loss = fspl_1m(model.band()) + 10.0 * n_eff * std::log10(d_m);
  return shadow ? loss + sample_shadowing(*shadow) : loss;
}

void bc_ci_path_loss_batch(const BcCiModel& model, int n_r, std::span<const double> distances_m,
                           std::span<double> out) {
  assert(out.size() == distances_m.size());
  const double n_eff = effective_ple(model, n_r).value;
  std::vector<double> x(distances_m.size());
  for (std::size_t i = 0; i < distances_m.size(); ++i) {
    require_reference_distance(distances_m[i]);
    x[i] = std::log10(distances_m[i]);
  }
  simd::affine(x, fspl_1m(model.band()), 10.0 * n_eff, out);
}

double measured_path_loss_from_beams(const BeamSet& set, std::size_t n_r, CombiningScheme scheme,
                                     double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi) {
  const BeamSet best = select_best_beams(set, n_r);
  const auto powers = best.powers_mw();
  return tx_power_dbm + tx_gain_dbi + rx_gain_dbi - to_db(combine(powers, scheme));
}

}  // namespace mmwave
