#pragma once

// Measurement and beam CSV ingestion, seeded synthetic dataset generation.
//
// Measurement CSV header (fixed order):
//   frequency_ghz,environment,scenario,tx_height_m,rx_height_m,distance_m,path_loss_db
// Beam CSV header (fixed order):
//   location_id,frequency_ghz,environment,scenario,tx_height_m,rx_height_m,distance_m,
//   beam_index,received_power_mw,tx_power_dbm,tx_gain_dbi,rx_gain_dbi
//
// UTF-8, LF line endings, '.' decimal separator. Lines starting with '#' and
// blank lines are ignored. Numbers are emitted with 6 decimals.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmwave/beam_combining.hpp"
#include "mmwave/propagation.hpp"

namespace mmwave {

enum class Scenario { Los, Nlos };

std::string_view to_string(Scenario scenario) noexcept;

inline constexpr std::string_view kMeasurementHeader =
    "frequency_ghz,environment,scenario,tx_height_m,rx_height_m,distance_m,path_loss_db";
inline constexpr std::string_view kBeamHeader =
    "location_id,frequency_ghz,environment,scenario,tx_height_m,rx_height_m,distance_m,"
    "beam_index,received_power_mw,tx_power_dbm,tx_gain_dbi,rx_gain_dbi";

/// How far below FSPL(f, 1 m) a loss may sit before it is flagged.
inline constexpr double kPathLossFloorMarginDb = 6.0;

struct MeasurementRecord {
  double frequency_ghz;
  std::string environment;
  Scenario scenario;
  double tx_height_m;
  double rx_height_m;
  double distance_m;
  double path_loss_db;

  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

struct BeamRecord {
  std::string location_id;
  double frequency_ghz;
  std::string environment;
  Scenario scenario;
  double tx_height_m;
  double rx_height_m;
  double distance_m;
  int beam_index;
  double received_power_mw;
  double tx_power_dbm;
  double tx_gain_dbi;
  double rx_gain_dbi;
};

enum class Severity { Rejected, Warning };

struct Diagnostic {
  std::size_t line;  // 1-based
  Severity severity;
  std::string reason;
};

template <typename Record>
struct ParseResult {
  std::vector<Record> records;
  std::vector<Diagnostic> diagnostics;
};

/// Never aborts on a bad row: rejects are reported per line. Throws Format
/// when the header is missing or wrong, or when data rows exist but none
/// parse.
ParseResult<MeasurementRecord> parse_measurements(std::istream& in);
ParseResult<BeamRecord> parse_beam_records(std::istream& in);

/// Comment lines are written first, each prefixed with "# ".
std::string emit_measurements(std::span<const MeasurementRecord> records,
                              std::span<const std::string> comments = {});
std::string emit_beam_records(std::span<const BeamRecord> records);

/// Groups beam records by location (first-appearance order).
std::vector<BeamSet> group_beam_sets(std::span<const BeamRecord> records);

struct SyntheticSetup {
  std::string environment = "synthetic";
  Scenario scenario = Scenario::Nlos;
  double tx_height_m = 1.5;
  double rx_height_m = 1.5;
};

/// One record per distance, path loss = ci_path_loss + sigma * z_i with z_i
/// the i-th draw of ShadowSampler(seed).
std::vector<MeasurementRecord> generate_ci_dataset(const CiModel& model,
                                                   std::span<const double> distances_m,
                                                   std::uint64_t seed,
                                                   const SyntheticSetup& setup = {});

/// Header comments naming the model, seed and sampler of a generated dataset.
std::vector<std::string> synthetic_dataset_comments(const CiModel& model, std::uint64_t seed);

/// count points log-spaced on [lo, hi], endpoints exact.
std::vector<double> log_spaced(double lo_m, double hi_m, std::size_t count);

}  // namespace mmwave
