#pragma once

// Published model parameters for the 60 GHz and 73 GHz slope-correction
// tables and the 28/73 GHz beam-combining table. These are the inputs from
// which export_table recomputes every derived cell; the printed derived
// values are kept alongside so the recomputation can be checked.

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "mmwave/beam_combining.hpp"
#include "mmwave/data_io.hpp"
#include "mmwave/propagation.hpp"

namespace mmwave {

/// A number as printed, with the number of decimals it was printed with.
struct PrintedValue {
  double value;
  int decimals;
};

struct SlopeColumn {
  std::string_view label;
  Scenario scenario;
  double h_tx_m;
  double h_rx_m;
  double ple;
  PrintedValue sigma_db;
  // NLOS: modified-SUI alpha per terrain A/B/C (absent where not printed).
  // LOS: element 0 holds the modified-FS alpha.
  std::array<std::optional<PrintedValue>, 3> alpha;
};

struct SlopeTableSpec {
  double frequency_ghz;
  double gain_dbi;
  double hpbw_deg;
  std::span<const SlopeColumn> columns;
  // Measurement distance spans used for synthetic grids.
  double los_span_lo_m, los_span_hi_m;
  double nlos_span_lo_m, nlos_span_hi_m;
};

struct SchemeBlock {
  CombiningScheme scheme;
  PrintedValue a_weight;
  std::array<PrintedValue, 4> bc_ple;      // n_single (1 - A log2 N_r), N_r = 1..4
  std::array<PrintedValue, 4> ple_ref;     // per-N_r CI exponents fitted independently
  std::array<PrintedValue, 4> sigma_bc;    // dB
  std::array<PrintedValue, 4> sigma_ref;   // dB
};

struct BeamCombiningBlock {
  std::string_view label;
  double frequency_ghz;
  double h_rx_m;
  double n_single;
  SchemeBlock coherent;
  SchemeBlock non_coherent;
};

const SlopeTableSpec& slope_table_60ghz();
const SlopeTableSpec& slope_table_73ghz();
std::span<const BeamCombiningBlock> beam_combining_table();

}  // namespace mmwave
