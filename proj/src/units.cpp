#include "mmwave/units.hpp"

#include <cmath>
#include <string>

#include "mmwave/errors.hpp"

namespace mmwave {

FrequencyBand::FrequencyBand(double carrier_ghz) : ghz_(carrier_ghz) {
  if (!std::isfinite(carrier_ghz) || carrier_ghz <= 0.0) {
    throw Error(ErrorCode::Domain,
                "carrier frequency must be positive, got " + std::to_string(carrier_ghz) + " GHz");
  }
}

}  // namespace mmwave
