#include "mmwave/data_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <locale>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "mmwave/errors.hpp"
#include "mmwave/format.hpp"

namespace mmwave {

namespace {

constexpr int kEmitDecimals = 6;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<Scenario> parse_scenario(std::string_view text) {
  if (text == "LOS") return Scenario::Los;
  if (text == "NLOS") return Scenario::Nlos;
  return std::nullopt;
}

// Row-level rejection, converted into a diagnostic by the line loop.
struct RowError {
  std::string reason;
};

double number_field(std::string_view text, std::string_view name) {
  if (auto value = parse_double(text)) return *value;
  throw RowError{std::string(name) + ": '" + std::string(text) + "' is not a number"};
}

double positive_field(std::string_view text, std::string_view name) {
  const double value = number_field(text, name);
  if (!(value > 0.0)) throw RowError{std::string(name) + " must be positive"};
  return value;
}

double distance_field(std::string_view text) {
  const double value = number_field(text, "distance_m");
  if (!(value >= kReferenceDistanceM)) {
    throw RowError{"distance_m " + std::string(text) +
                   " is below the 1 m reference distance"};
  }
  return value;
}

std::string text_field(std::string_view text, std::string_view name) {
  if (text.empty()) throw RowError{std::string(name) + " is empty"};
  return std::string(text);
}

Scenario scenario_field(std::string_view text) {
  if (auto s = parse_scenario(text)) return *s;
  throw RowError{"scenario must be LOS or NLOS, got '" + std::string(text) + "'"};
}

// Walks lines, enforcing the header, and hands each data row to `row`.
template <typename Record, typename RowFn>
ParseResult<Record> parse_csv(std::istream& in, std::string_view header, std::size_t columns,
                              RowFn row) {
  ParseResult<Record> result;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t data_rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      if (line != header) {
        throw Error(ErrorCode::Format, "line " + std::to_string(line_no) +
                                           ": expected header '" + std::string(header) + "'");
      }
      have_header = true;
      continue;
    }
    ++data_rows;
    const auto fields = split_fields(line);
    if (fields.size() != columns) {
      result.diagnostics.push_back({line_no, Severity::Rejected,
                                    "expected " + std::to_string(columns) + " fields, found " +
                                        std::to_string(fields.size())});
      continue;
    }
    try {
      row(fields, line_no, result);
    } catch (const RowError& e) {
      result.diagnostics.push_back({line_no, Severity::Rejected, e.reason});
    }
  }
  if (!have_header) throw Error(ErrorCode::Format, "missing header row");
  if (data_rows > 0 && result.records.empty()) {
    throw Error(ErrorCode::Format, "no parseable records in " + std::to_string(data_rows) +
                                       " data rows");
  }
  return result;
}

void check_loss_floor(double frequency_ghz, double path_loss_db, std::size_t line_no,
                      std::vector<Diagnostic>& diagnostics) {
  const double floor = fspl_1m(FrequencyBand(frequency_ghz)) - kPathLossFloorMarginDb;
  if (path_loss_db < floor) {
    diagnostics.push_back({line_no, Severity::Warning,
                           "path_loss_db " + format_fixed(path_loss_db, 3) +
                               " is below the sanity floor " + format_fixed(floor, 3) +
                               " dB (FSPL at 1 m minus 6 dB)"});
  }
}

void require_plain_text(const std::string& text, const char* name) {
  if (text.empty() || text.find_first_of(",\n\r") != std::string::npos) {
    throw Error(ErrorCode::Format,
                std::string(name) + " must be non-empty and free of commas and newlines");
  }
}

}  // namespace

std::string_view to_string(Scenario scenario) noexcept {
  return scenario == Scenario::Los ? "LOS" : "NLOS";
}

ParseResult<MeasurementRecord> parse_measurements(std::istream& in) {
  return parse_csv<MeasurementRecord>(
      in, kMeasurementHeader, 7,
      [](const std::vector<std::string_view>& f, std::size_t line_no,
         ParseResult<MeasurementRecord>& out) {
        MeasurementRecord rec;
        rec.frequency_ghz = positive_field(f[0], "frequency_ghz");
        rec.environment = text_field(f[1], "environment");
        rec.scenario = scenario_field(f[2]);
        rec.tx_height_m = positive_field(f[3], "tx_height_m");
        rec.rx_height_m = positive_field(f[4], "rx_height_m");
        rec.distance_m = distance_field(f[5]);
        rec.path_loss_db = number_field(f[6], "path_loss_db");
        check_loss_floor(rec.frequency_ghz, rec.path_loss_db, line_no, out.diagnostics);
        out.records.push_back(std::move(rec));
      });
}

ParseResult<BeamRecord> parse_beam_records(std::istream& in) {
  std::set<std::pair<std::string, int>> seen;
  return parse_csv<BeamRecord>(
      in, kBeamHeader, 12,
      [&seen](const std::vector<std::string_view>& f, std::size_t,
              ParseResult<BeamRecord>& out) {
        BeamRecord rec;
        rec.location_id = text_field(f[0], "location_id");
        rec.frequency_ghz = positive_field(f[1], "frequency_ghz");
        rec.environment = text_field(f[2], "environment");
        rec.scenario = scenario_field(f[3]);
        rec.tx_height_m = positive_field(f[4], "tx_height_m");
        rec.rx_height_m = positive_field(f[5], "rx_height_m");
        rec.distance_m = distance_field(f[6]);
        const auto index = parse_int(f[7]);
        if (!index || *index < 0) throw RowError{"beam_index must be an integer >= 0"};
        rec.beam_index = *index;
        rec.received_power_mw = positive_field(f[8], "received_power_mw");
        rec.tx_power_dbm = number_field(f[9], "tx_power_dbm");
        rec.tx_gain_dbi = number_field(f[10], "tx_gain_dbi");
        rec.rx_gain_dbi = number_field(f[11], "rx_gain_dbi");
        if (!seen.emplace(rec.location_id, rec.beam_index).second) {
          throw RowError{"duplicate beam " + std::to_string(rec.beam_index) + " at location '" +
                         rec.location_id + "'"};
        }
        out.records.push_back(std::move(rec));
      });
}

std::string emit_measurements(std::span<const MeasurementRecord> records,
                              std::span<const std::string> comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  out << kMeasurementHeader << '\n';
  for (const MeasurementRecord& r : records) {
    require_plain_text(r.environment, "environment");
    out << format_fixed(r.frequency_ghz, kEmitDecimals) << ',' << r.environment << ','
        << to_string(r.scenario) << ',' << format_fixed(r.tx_height_m, kEmitDecimals) << ','
        << format_fixed(r.rx_height_m, kEmitDecimals) << ','
        << format_fixed(r.distance_m, kEmitDecimals) << ','
        << format_fixed(r.path_loss_db, kEmitDecimals) << '\n';
  }
  return out.str();
}

std::string emit_beam_records(std::span<const BeamRecord> records) {
  std::ostringstream out;
  out << kBeamHeader << '\n';
  for (const BeamRecord& r : records) {
    require_plain_text(r.location_id, "location_id");
    require_plain_text(r.environment, "environment");
    // Received powers span many decades; fixed 6-dp would erase them.
    std::ostringstream power;
    power.imbue(std::locale::classic());
    power.precision(17);
    power << r.received_power_mw;
    out << r.location_id << ',' << format_fixed(r.frequency_ghz, kEmitDecimals) << ','
        << r.environment << ',' << to_string(r.scenario) << ','
        << format_fixed(r.tx_height_m, kEmitDecimals) << ','
        << format_fixed(r.rx_height_m, kEmitDecimals) << ','
        << format_fixed(r.distance_m, kEmitDecimals) << ',' << r.beam_index << ','
        << power.str() << ',' << format_fixed(r.tx_power_dbm, kEmitDecimals) << ','
        << format_fixed(r.tx_gain_dbi, kEmitDecimals) << ','
        << format_fixed(r.rx_gain_dbi, kEmitDecimals) << '\n';
  }
  return out.str();
}

std::vector<BeamSet> group_beam_sets(std::span<const BeamRecord> records) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<double, std::vector<Beam>>> by_location;
  for (const BeamRecord& r : records) {
    auto [it, inserted] = by_location.try_emplace(r.location_id, r.distance_m, std::vector<Beam>{});
    if (inserted) {
      order.push_back(r.location_id);
    } else if (it->second.first != r.distance_m) {
      throw Error(ErrorCode::Format,
                  "location '" + r.location_id + "' appears with two different distances");
    }
    it->second.second.push_back({r.beam_index, r.received_power_mw});
  }
  std::vector<BeamSet> sets;
  sets.reserve(order.size());
  for (const std::string& id : order) {
    auto& [distance, beams] = by_location.at(id);
    sets.emplace_back(id, distance, std::move(beams));
  }
  return sets;
}

std::vector<MeasurementRecord> generate_ci_dataset(const CiModel& model,
                                                   std::span<const double> distances_m,
                                                   std::uint64_t seed,
                                                   const SyntheticSetup& setup) {
  for (double d : distances_m) require_reference_distance(d);
  ShadowSampler sampler({model.sigma_db(), seed});
  std::vector<MeasurementRecord> records;
  records.reserve(distances_m.size());
  for (double d : distances_m) {
    const double loss = ci_path_loss(model, d) + sampler.next();
    records.push_back({model.band().ghz(), setup.environment, setup.scenario, setup.tx_height_m,
                       setup.rx_height_m, d, loss});
  }
  return records;
}

std::vector<std::string> synthetic_dataset_comments(const CiModel& model, std::uint64_t seed) {
  return {
      "synthetic CI dataset (not measured data)",
      "frequency_ghz=" + format_fixed(model.band().ghz(), kEmitDecimals) +
          " ple=" + format_fixed(model.ple(), kEmitDecimals) +
          " sigma_db=" + format_fixed(model.sigma_db(), kEmitDecimals),
      "seed=" + std::to_string(seed) + " sampler=" + std::string(kShadowSamplerName),
  };
}

std::vector<double> log_spaced(double lo_m, double hi_m, std::size_t count) {
  if (!(lo_m > 0.0) || !(hi_m >= lo_m) || !std::isfinite(hi_m)) {
    throw Error(ErrorCode::Domain, "log grid needs 0 < lo <= hi");
  }
  if (count == 0) throw Error(ErrorCode::EmptyInput, "log grid needs at least one point");
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo_m;
    return grid;
  }
  const double log_lo = std::log10(lo_m);
  const double step = (std::log10(hi_m) - log_lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::pow(10.0, log_lo + step * static_cast<double>(i));
  }
  grid.front() = lo_m;
  grid.back() = hi_m;
  return grid;
}

}  // namespace mmwave
