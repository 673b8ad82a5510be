#include "mmwave/link_analysis.hpp"

#include <cmath>
#include <string>

#include "mmwave/errors.hpp"

namespace mmwave {

namespace {

void validate(const RangeQuery& q) {
  if (!(q.effective_ple > 0.0) || !std::isfinite(q.effective_ple)) {
    throw Error(ErrorCode::Domain, "effective path loss exponent must be positive");
  }
  if (!(q.atmospheric_db_per_km >= 0.0) || !std::isfinite(q.atmospheric_db_per_km)) {
    throw Error(ErrorCode::Domain, "atmospheric loss rate must be >= 0 dB/km");
  }
  const double anchor = fspl_1m(q.band);
  if (!(q.target_loss_db >= anchor) || !std::isfinite(q.target_loss_db)) {
    throw Error(ErrorCode::Domain, "target loss " + std::to_string(q.target_loss_db) +
                                       " dB is below the 1 m anchor " + std::to_string(anchor) +
                                       " dB");
  }
  const double ceiling =
      link_path_loss(q.band, q.effective_ple, kRangeBracketHighM, q.atmospheric_db_per_km);
  if (q.target_loss_db > ceiling) {
    throw Error(ErrorCode::OutOfRange, "target loss " + std::to_string(q.target_loss_db) +
                                           " dB is not reached within 1e6 m");
  }
}

}  // namespace

RangeQuery RangeQuery::for_model(const CiModel& model, double target_loss_db,
                                 double atmospheric_db_per_km) {
  return {model.band(), model.ple(), target_loss_db, atmospheric_db_per_km};
}

RangeQuery RangeQuery::for_model(const BcCiModel& model, int n_r, double target_loss_db,
                                 double atmospheric_db_per_km) {
  return {model.band(), mmwave::effective_ple(model, n_r).value, target_loss_db, atmospheric_db_per_km};
}

double link_path_loss(const FrequencyBand& band, double effective_ple, double d_m,
                      double atmospheric_db_per_km) {
  require_reference_distance(d_m);
  return fspl_1m(band) + 10.0 * effective_ple * std::log10(d_m) +
         atmospheric_loss(atmospheric_db_per_km, d_m);
}

double distance_for_loss(const RangeQuery& query) {
  validate(query);
  if (query.atmospheric_db_per_km > 0.0) return distance_for_loss_bisection(query);
  const double excess = query.target_loss_db - fspl_1m(query.band);
  return std::pow(10.0, excess / (10.0 * query.effective_ple));
}

double distance_for_loss_bisection(const RangeQuery& query) {
  validate(query);
  double lo = kRangeBracketLowM;
  double hi = kRangeBracketHighM;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12 * lo; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double loss =
        link_path_loss(query.band, query.effective_ple, mid, query.atmospheric_db_per_km);
    if (loss < query.target_loss_db) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double attenuation_per_decade_delta(double ple_a, double ple_b) {
  if (!(ple_a > 0.0) || !(ple_b > 0.0)) {
    throw Error(ErrorCode::Domain, "path loss exponents must be positive");
  }
  return 10.0 * (ple_a - ple_b);
}

double atmospheric_loss(double db_per_km, double d_m) {
  if (!(db_per_km >= 0.0) || !std::isfinite(db_per_km)) {
    throw Error(ErrorCode::Domain, "atmospheric loss rate must be >= 0 dB/km");
  }
  if (!(d_m >= 0.0) || !std::isfinite(d_m)) {
    throw Error(ErrorCode::Domain, "distance must be >= 0 m");
  }
  return db_per_km * d_m / 1000.0;
}

}  // namespace mmwave
