#include "mmwave/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>

#include "mmwave/beam_combining.hpp"
#include "mmwave/data_io.hpp"
#include "mmwave/errors.hpp"
#include "mmwave/estimation.hpp"
#include "mmwave/format.hpp"
#include "mmwave/link_analysis.hpp"
#include "mmwave/plot_data.hpp"
#include "mmwave/propagation.hpp"
#include "mmwave/tables.hpp"

namespace mmwave::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDecimals = 6;

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  return OutputFormat::Text;
}

using Scalar = std::variant<double, long long, std::string>;

struct Field {
  std::string key;
  Scalar value;
};

using Row = std::vector<Field>;

struct Report {
  std::string command;
  std::vector<Row> rows;
  std::vector<std::string> warnings;
  json meta = json::object();
};

std::string scalar_text(const Scalar& value) {
  if (const auto* d = std::get_if<double>(&value)) return format_fixed(*d, kDecimals);
  if (const auto* i = std::get_if<long long>(&value)) return std::to_string(*i);
  return std::get<std::string>(value);
}

json scalar_json(const Scalar& value) {
  if (const auto* d = std::get_if<double>(&value)) return *d;
  if (const auto* i = std::get_if<long long>(&value)) return *i;
  return std::get<std::string>(value);
}

json envelope(const std::string& command, json results, const std::vector<std::string>& warnings,
              const json& meta) {
  json doc;
  doc["command"] = command;
  doc["format_version"] = 1;
  doc["results"] = std::move(results);
  doc["warnings"] = warnings;
  if (!meta.empty()) doc["meta"] = meta;
  return doc;
}

void write_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

void write_report(const Report& report, OutputFormat format, std::ostream& out,
                  std::ostream& err) {
  if (format == OutputFormat::Json) {
    json results = json::array();
    for (const Row& row : report.rows) {
      json obj = json::object();
      for (const Field& f : row) obj[f.key] = scalar_json(f.value);
      results.push_back(std::move(obj));
    }
    out << envelope(report.command, std::move(results), report.warnings, report.meta).dump(2)
        << '\n';
    return;
  }
  write_warnings(report.warnings, err);
  if (report.rows.empty()) return;
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back();
  for (const Field& f : report.rows.front()) grid.back().push_back(f.key);
  for (const Row& row : report.rows) {
    grid.emplace_back();
    for (const Field& f : row) grid.back().push_back(scalar_text(f.value));
  }
  if (format == OutputFormat::Csv) {
    for (const auto& line : grid) {
      for (std::size_t c = 0; c < line.size(); ++c) out << (c ? "," : "") << line[c];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Flag validation

std::optional<double> parse_number(const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

CLI::Validator bounded(std::optional<double> lo, bool lo_inclusive, std::optional<double> hi,
                       bool hi_inclusive, const std::string& rule) {
  return CLI::Validator(
      [=](std::string& text) -> std::string {
        const auto value = parse_number(text);
        if (!value) return "'" + text + "' is not a number";
        const bool below = lo && (lo_inclusive ? *value < *lo : *value <= *lo);
        const bool above = hi && (hi_inclusive ? *value > *hi : *value >= *hi);
        if (below || above) return "value " + text + " violates " + rule;
        return {};
      },
      rule);
}

const CLI::Validator kDistanceRule =
    bounded(1.0, true, std::nullopt, false, "the 1 m close-in reference distance (d >= 1 m)");
const CLI::Validator kFrequencyRule =
    bounded(0.0, false, std::nullopt, false, "carrier frequency > 0 GHz");
const CLI::Validator kPleRule = bounded(0.0, false, std::nullopt, false, "path loss exponent > 0");
const CLI::Validator kAlphaRule =
    bounded(0.0, false, std::nullopt, false, "slope correction factor > 0");
const CLI::Validator kHeightRule = bounded(0.0, false, std::nullopt, false, "antenna height > 0 m");
const CLI::Validator kSigmaRule = bounded(0.0, true, std::nullopt, false, "shadowing sigma >= 0 dB");
const CLI::Validator kBeamsRule = bounded(1.0, true, std::nullopt, false, "N_r >= 1");
const CLI::Validator kWeightRule = bounded(0.0, true, 1.0, false, "weighting factor 0 <= A < 1");
const CLI::Validator kRateRule =
    bounded(0.0, true, std::nullopt, false, "atmospheric loss rate >= 0 dB/km");

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorCode::Usage, message); }

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

void require_flag(const CLI::Option* opt, const std::string& context) {
  if (!given(opt)) usage(context + " requires " + opt->get_name());
}

void forbid_flag(const CLI::Option* opt, const std::string& context) {
  if (given(opt)) usage(opt->get_name() + " does not apply to " + context);
}

TerrainClass parse_terrain(const std::string& text) {
  if (text == "A") return TerrainClass::A;
  if (text == "B") return TerrainClass::B;
  return TerrainClass::C;
}

CombiningScheme parse_scheme(const std::string& text) {
  return text == "ncc" ? CombiningScheme::NonCoherent : CombiningScheme::Coherent;
}

Scenario parse_scenario_flag(const std::string& text) {
  return text == "LOS" ? Scenario::Los : Scenario::Nlos;
}

std::string diagnostic_text(const Diagnostic& d) {
  return "line " + std::to_string(d.line) + ": " +
         (d.severity == Severity::Rejected ? "rejected: " : "") + d.reason;
}

// ---------------------------------------------------------------------------
// Input helpers

template <typename Fn>
auto with_input(const std::string& path, std::istream& in, Fn fn) {
  if (path == "-") return fn(in);
  std::ifstream file(path);
  if (!file) usage("cannot open input file '" + path + "'");
  return fn(file);
}

struct GroupKey {
  double frequency_ghz;
  std::string environment;
  Scenario scenario;
  double tx_height_m;
  double rx_height_m;

  friend bool operator==(const GroupKey&, const GroupKey&) = default;
};

Row group_fields(const GroupKey& key) {
  return {{"frequency_ghz", key.frequency_ghz},
          {"environment", key.environment},
          {"scenario", std::string(to_string(key.scenario))},
          {"tx_height_m", key.tx_height_m},
          {"rx_height_m", key.rx_height_m}};
}

// Groups in first-appearance order.
template <typename Record>
std::vector<std::pair<GroupKey, std::vector<const Record*>>> group_records(
    const std::vector<Record>& records) {
  std::vector<std::pair<GroupKey, std::vector<const Record*>>> groups;
  for (const Record& r : records) {
    GroupKey key{r.frequency_ghz, r.environment, r.scenario, r.tx_height_m, r.rx_height_m};
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.push_back({std::move(key), {}});
      it = std::prev(groups.end());
    }
    it->second.push_back(&r);
  }
  return groups;
}

FitDataset dataset_of(const GroupKey& key, const std::vector<const MeasurementRecord*>& records) {
  std::vector<FitSample> samples;
  samples.reserve(records.size());
  for (const auto* r : records) samples.push_back({r->distance_m, r->path_loss_db, 1});
  return FitDataset(FrequencyBand(key.frequency_ghz), std::move(samples));
}

void append_fit(Row& row, const std::string& name, const FitResult& fit) {
  row.push_back({name, fit.value});
  row.push_back({"sigma_db", fit.sigma_db});
  row.push_back({"rmse_db", fit.rmse_db});
}

// ---------------------------------------------------------------------------
// Subcommands

struct Common {
  std::string format = "text";
};

void add_format(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

struct PathlossCmd {
  Common common;
  std::string model;
  double freq_ghz = 0.0;
  std::vector<double> distances;
  double ple = 0.0, alpha = 0.0, h_tx = 0.0, h_rx = 2.0, tx_gain = 0.0, rx_gain = 0.0;
  double n_single = 0.0, a_weight = 0.0, sigma = 0.0;
  int beams = 1;
  std::string terrain = "A", scheme = "cc";
  std::uint64_t seed = 1;
  bool no_shadow = false;
  CLI::Option *o_ple, *o_alpha, *o_h_tx, *o_h_rx, *o_tx_gain, *o_rx_gain, *o_n_single,
      *o_a_weight, *o_beams, *o_terrain, *o_scheme, *o_sigma, *o_seed;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("pathloss", "Evaluate a path loss model at given distances");
    sub->add_option("--model", model, "fs | sui | ci | fs-los | sui-nlos | bc-ci")
        ->required()
        ->check(CLI::IsMember({"fs", "sui", "ci", "fs-los", "sui-nlos", "bc-ci"}));
    sub->add_option("--freq-ghz", freq_ghz, "Carrier frequency (GHz)")->required()->check(kFrequencyRule);
    sub->add_option("--distance-m", distances, "TX-RX distance(s) in meters")
        ->required()
        ->delimiter(',')
        ->check(kDistanceRule);
    o_ple = sub->add_option("--ple", ple, "CI path loss exponent")->check(kPleRule);
    o_alpha = sub->add_option("--alpha", alpha, "Slope correction factor")->check(kAlphaRule);
    o_terrain = sub->add_option("--terrain", terrain, "SUI terrain class")
                    ->check(CLI::IsMember({"A", "B", "C"}));
    o_h_tx = sub->add_option("--h-tx-m", h_tx, "TX antenna height (m)")->check(kHeightRule);
    o_h_rx = sub->add_option("--h-rx-m", h_rx, "RX antenna height (m), default 2")->check(kHeightRule);
    o_tx_gain = sub->add_option("--tx-gain-dbi", tx_gain, "TX antenna gain (dBi)");
    o_rx_gain = sub->add_option("--rx-gain-dbi", rx_gain, "RX antenna gain (dBi)");
    o_n_single = sub->add_option("--n-single", n_single, "Single-best-beam exponent")->check(kPleRule);
    o_a_weight = sub->add_option("--a-weight", a_weight, "BC-CI weighting factor A")->check(kWeightRule);
    o_beams = sub->add_option("--beams", beams, "Number of combined beams N_r")->check(kBeamsRule);
    o_scheme = sub->add_option("--scheme", scheme, "cc | ncc")->check(CLI::IsMember({"cc", "ncc"}));
    o_sigma = sub->add_option("--sigma-db", sigma, "Shadowing sigma (dB); enables shadowing")
                  ->check(kSigmaRule);
    o_seed = sub->add_option("--seed", seed, "Shadowing seed (distance i uses seed + i)");
    auto* o_no_shadow = sub->add_flag("--no-shadow", no_shadow, "Disable shadowing (default)");
    o_sigma->excludes(o_no_shadow);
    add_format(sub, common);
  }

  Report run() const {
    const std::string ctx = "--model " + model;
    const bool ci = model == "ci", fs = model == "fs", sui = model == "sui";
    const bool fs_los = model == "fs-los", sui_nlos = model == "sui-nlos", bc = model == "bc-ci";
    if (ci) require_flag(o_ple, ctx); else forbid_flag(o_ple, ctx);
    if (fs_los || sui_nlos) require_flag(o_alpha, ctx); else forbid_flag(o_alpha, ctx);
    if (sui || sui_nlos) {
      require_flag(o_h_tx, ctx);
      if (freq_ghz < 2.0) {
        usage("--freq-ghz " + format_fixed(freq_ghz, 3) + " is below the 2 GHz minimum of the SUI "
              "frequency correction (" + ctx + ")");
      }
    } else {
      forbid_flag(o_h_tx, ctx);
      forbid_flag(o_h_rx, ctx);
      forbid_flag(o_terrain, ctx);
    }
    if (!(fs || fs_los)) {
      forbid_flag(o_tx_gain, ctx);
      forbid_flag(o_rx_gain, ctx);
    }
    if (bc) {
      require_flag(o_n_single, ctx);
      require_flag(o_a_weight, ctx);
      require_flag(o_beams, ctx);
    } else {
      forbid_flag(o_n_single, ctx);
      forbid_flag(o_a_weight, ctx);
      forbid_flag(o_beams, ctx);
      forbid_flag(o_scheme, ctx);
    }
    if (fs) forbid_flag(o_sigma, ctx);
    if (given(o_seed) && !given(o_sigma)) usage("--seed needs --sigma-db (shadowing is off)");

    const FrequencyBand band(freq_ghz);
    Report report{"pathloss", {}, {}};
    auto shadow_at = [&](std::size_t i) -> std::optional<ShadowingSpec> {
      if (!given(o_sigma)) return std::nullopt;
      return ShadowingSpec{sigma, seed + i};
    };
    if (bc) {
      const BcCiModel m(band, n_single, a_weight, parse_scheme(scheme));
      const auto n_eff = effective_ple(m, beams);
      if (n_eff.below_free_space) {
        report.warnings.push_back("effective exponent " + format_fixed(n_eff.value, 3) +
                                  " at N_r = " + std::to_string(beams) + " is below free space (2)");
      }
    }
    for (std::size_t i = 0; i < distances.size(); ++i) {
      const double d = distances[i];
      double loss = 0.0;
      if (ci) {
        loss = ci_path_loss(CiModel(band, ple), d, shadow_at(i));
      } else if (fs) {
        loss = fs_path_loss(band, d, tx_gain, rx_gain);
      } else if (sui) {
        loss = sui_path_loss(SuiContext(band, parse_terrain(terrain), h_tx, h_rx), d, shadow_at(i));
      } else if (fs_los) {
        const ModifiedModel m(FreeSpaceBase{band, tx_gain, rx_gain}, alpha);
        loss = modified_fs_path_loss(m, d, shadow_at(i));
      } else if (sui_nlos) {
        const ModifiedModel m(SuiContext(band, parse_terrain(terrain), h_tx, h_rx), alpha);
        loss = modified_sui_path_loss(m, d, shadow_at(i));
      } else {
        const BcCiModel m(band, n_single, a_weight, parse_scheme(scheme));
        loss = bc_ci_path_loss(m, beams, d, shadow_at(i));
      }
      report.rows.push_back({{"distance_m", d}, {"path_loss_db", loss}});
    }
    return report;
  }
};

struct FitCiCmd {
  Common common;
  std::string input;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("fit-ci", "Fit the CI path loss exponent per measurement group");
    sub->add_option("--input", input, "Measurement CSV ('-' for stdin)")->required();
    add_format(sub, common);
  }

  Report run(std::istream& in) const {
    auto parsed = with_input(input, in, [](std::istream& s) { return parse_measurements(s); });
    Report report{"fit-ci", {}, {}};
    for (const auto& d : parsed.diagnostics) report.warnings.push_back(diagnostic_text(d));
    for (const auto& [key, records] : group_records(parsed.records)) {
      Row row = group_fields(key);
      row.push_back({"samples", static_cast<long long>(records.size())});
      append_fit(row, "ple", fit_ci_ple(dataset_of(key, records)));
      report.rows.push_back(std::move(row));
    }
    return report;
  }
};

struct FitAlphaCmd {
  Common common;
  std::string input, base, terrain = "A";
  double h_tx = 0.0;
  CLI::Option *o_terrain, *o_h_tx;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("fit-alpha", "Fit the slope correction factor of modified FS/SUI");
    sub->add_option("--input", input, "Measurement CSV ('-' for stdin)")->required();
    sub->add_option("--base", base, "fs | sui")->required()->check(CLI::IsMember({"fs", "sui"}));
    o_terrain = sub->add_option("--terrain", terrain, "SUI terrain class")
                    ->check(CLI::IsMember({"A", "B", "C"}));
    o_h_tx = sub->add_option("--h-tx-m", h_tx, "TX height override (default: from records)")
                 ->check(kHeightRule);
    add_format(sub, common);
  }

  Report run(std::istream& in) const {
    if (base == "fs") {
      forbid_flag(o_terrain, "--base fs");
      forbid_flag(o_h_tx, "--base fs");
    }
    auto parsed = with_input(input, in, [](std::istream& s) { return parse_measurements(s); });
    Report report{"fit-alpha", {}, {}};
    for (const auto& d : parsed.diagnostics) report.warnings.push_back(diagnostic_text(d));
    for (const auto& [key, records] : group_records(parsed.records)) {
      const FrequencyBand band(key.frequency_ghz);
      Row row = group_fields(key);
      row.push_back({"samples", static_cast<long long>(records.size())});
      row.push_back({"base", base});
      FitResult fit;
      if (base == "fs") {
        fit = fit_slope_correction(dataset_of(key, records), FreeSpaceBase{band});
      } else {
        const double tx = given(o_h_tx) ? h_tx : key.tx_height_m;
        row.push_back({"terrain", terrain});
        fit = fit_slope_correction(dataset_of(key, records),
                                   SuiContext(band, parse_terrain(terrain), tx, key.rx_height_m));
      }
      append_fit(row, "alpha", fit);
      report.rows.push_back(std::move(row));
    }
    return report;
  }
};

struct FitBcCmd {
  Common common;
  std::string input, scheme;
  int max_beams = 4;
  double n_single = 0.0;
  CLI::Option* o_n_single;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("fit-bc", "Fit the BC-CI weighting factor A from beam records");
    sub->add_option("--input", input, "Beam CSV ('-' for stdin)")->required();
    sub->add_option("--scheme", scheme, "cc | ncc")->required()->check(CLI::IsMember({"cc", "ncc"}));
    sub->add_option("--max-beams", max_beams, "Combine up to this many best beams")
        ->check(kBeamsRule)
        ->capture_default_str();
    o_n_single = sub->add_option("--n-single", n_single,
                                 "Single-beam exponent (default: CI fit of the N_r = 1 losses)")
                     ->check(kPleRule);
    add_format(sub, common);
  }

  Report run(std::istream& in) const {
    auto parsed = with_input(input, in, [](std::istream& s) { return parse_beam_records(s); });
    Report report{"fit-bc", {}, {}};
    for (const auto& d : parsed.diagnostics) report.warnings.push_back(diagnostic_text(d));
    const CombiningScheme combining = parse_scheme(scheme);
    for (const auto& [key, records] : group_records(parsed.records)) {
      std::vector<BeamRecord> group;
      std::map<std::string, const BeamRecord*> budget;
      for (const auto* r : records) {
        group.push_back(*r);
        budget.try_emplace(r->location_id, r);
      }
      std::vector<FitSample> samples, single;
      const auto sets = group_beam_sets(group);
      for (const BeamSet& set : sets) {
        const BeamRecord& link = *budget.at(set.location_id());
        const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(max_beams), set.size());
        for (std::size_t n = 1; n <= top; ++n) {
          const double loss = measured_path_loss_from_beams(set, n, combining, link.tx_power_dbm,
                                                            link.tx_gain_dbi, link.rx_gain_dbi);
          samples.push_back({set.distance_m(), loss, static_cast<int>(n)});
          if (n == 1) single.push_back(samples.back());
        }
      }
      const FrequencyBand band(key.frequency_ghz);
      const double n1 = given(o_n_single) ? n_single : fit_ci_ple(FitDataset(band, single)).value;
      const FitResult fit = fit_bc_weight(FitDataset(band, samples), n1);
      Row row = group_fields(key);
      row.push_back({"scheme", std::string(to_string(combining))});
      row.push_back({"locations", static_cast<long long>(sets.size())});
      row.push_back({"samples", static_cast<long long>(samples.size())});
      row.push_back({"n_single", n1});
      append_fit(row, "a_weight", fit);
      if (fit.value >= 0.0 && fit.value < 1.0) {
        const BcCiModel model(band, n1, fit.value, combining);
        for (int n = 1; n <= max_beams; ++n) {
          row.push_back({"ple_nr" + std::to_string(n), effective_ple(model, n).value});
        }
      } else {
        report.warnings.push_back("fitted A = " + format_fixed(fit.value, 4) +
                                  " is outside [0, 1); per-N_r exponents omitted");
      }
      report.rows.push_back(std::move(row));
    }
    return report;
  }
};

struct SigmaCmd {
  Common common;
  std::vector<double> residuals;
  std::string input;
  CLI::Option *o_residuals, *o_input;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("sigma", "Shadowing sigma (population RMS) of residuals");
    o_residuals = sub->add_option("--residuals-db", residuals, "Residuals in dB")->delimiter(',');
    o_input = sub->add_option("--input", input, "File with one residual per line ('-' for stdin)");
    o_residuals->excludes(o_input);
    add_format(sub, common);
  }

  Report run(std::istream& in) const {
    std::vector<double> values = residuals;
    if (given(o_input)) {
      values = with_input(input, in, [](std::istream& s) {
        std::vector<double> v;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(s, line)) {
          ++line_no;
          if (line.empty() || line.front() == '#') continue;
          const auto value = parse_number(line);
          if (!value) {
            throw Error(ErrorCode::Format, "line " + std::to_string(line_no) + ": '" + line +
                                               "' is not a number");
          }
          v.push_back(*value);
        }
        return v;
      });
    } else if (!given(o_residuals)) {
      usage("sigma requires --residuals-db or --input");
    }
    Report report{"sigma", {}, {}};
    report.rows.push_back({{"count", static_cast<long long>(values.size())},
                           {"sigma_db", shadowing_sigma(values)}});
    return report;
  }
};

struct TablesCmd {
  Common common;
  std::string table = "all";

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("tables", "Recompute the published parameter tables");
    sub->add_option("--table", table, "I | II | III | all")
        ->check(CLI::IsMember({"I", "II", "III", "all"}))
        ->capture_default_str();
    add_format(sub, common);
  }

  void run(std::ostream& out) const {
    std::vector<ReferenceTable> tables;
    if (table == "all") {
      for (TableId id : {TableId::I, TableId::II, TableId::III}) tables.push_back(export_table(id));
    } else {
      tables.push_back(export_table(parse_table_id(table)));
    }
    const OutputFormat format = parse_format(common.format);
    if (format == OutputFormat::Json) {
      json results = json::array();
      std::size_t flags = 0;
      for (const ReferenceTable& t : tables) {
        flags += t.flag_count();
        for (const TableRow& row : t.rows) {
          json cells = json::array();
          for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const TableCell& cell = row.cells[c];
            json jc;
            jc["column"] = t.columns[c];
            jc["value"] = cell.value ? json(round_to(*cell.value, cell.decimals)) : json(nullptr);
            jc["printed"] = cell.printed ? json(cell.printed->value) : json(nullptr);
            jc["derived"] = cell.derived;
            jc["flagged"] = cell.flagged;
            cells.push_back(std::move(jc));
          }
          results.push_back({{"table", std::string(to_string(t.id))},
                             {"row", row.label},
                             {"cells", std::move(cells)}});
        }
      }
      json meta;
      meta["flag_count"] = flags;
      out << envelope("tables", std::move(results), {}, meta).dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i) out << '\n';
      out << (format == OutputFormat::Csv ? render_table_csv(tables[i])
                                          : render_table_text(tables[i]));
    }
  }
};

struct RangeCmd {
  Common common;
  double freq_ghz = 0.0, ple = 0.0, n_single = 0.0, a_weight = 0.0;
  int beams = 1;
  std::string scheme = "cc";
  double target = 0.0, ple_ref = 0.0, at_m = 0.0, rate = 0.0;
  bool target_of = false;
  CLI::Option *o_ple, *o_n_single, *o_a_weight, *o_beams, *o_scheme, *o_target, *o_target_of,
      *o_ple_ref, *o_at_m, *o_rate;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("range", "Distance at which a model reaches a target loss");
    sub->add_option("--freq-ghz", freq_ghz, "Carrier frequency (GHz)")->required()->check(kFrequencyRule);
    o_ple = sub->add_option("--ple", ple, "Effective CI exponent of the model")->check(kPleRule);
    o_n_single = sub->add_option("--n-single", n_single, "BC-CI single-beam exponent")->check(kPleRule);
    o_a_weight = sub->add_option("--a-weight", a_weight, "BC-CI weighting factor A")->check(kWeightRule);
    o_beams = sub->add_option("--beams", beams, "Number of combined beams N_r")->check(kBeamsRule);
    o_scheme = sub->add_option("--scheme", scheme, "cc | ncc")->check(CLI::IsMember({"cc", "ncc"}));
    o_target = sub->add_option("--target-loss-db", target, "Target path loss (dB)");
    o_target_of = sub->add_flag("--target-loss-of", target_of,
                                "Take the target from a reference CI model (--ple-ref, --at-m)");
    o_ple_ref = sub->add_option("--ple-ref", ple_ref, "Reference model exponent")->check(kPleRule);
    o_at_m = sub->add_option("--at-m", at_m, "Reference distance (m)")->check(kDistanceRule);
    o_rate = sub->add_option("--atm-db-per-km", rate, "Atmospheric loss rate (dB/km)")->check(kRateRule);
    o_target->excludes(o_target_of);
    o_ple->excludes(o_n_single);
    add_format(sub, common);
  }

  Report run() const {
    if (!given(o_ple) && !given(o_n_single)) usage("range requires --ple or --n-single");
    if (given(o_n_single)) {
      require_flag(o_a_weight, "--n-single");
      require_flag(o_beams, "--n-single");
    } else {
      forbid_flag(o_a_weight, "--ple");
      forbid_flag(o_beams, "--ple");
      forbid_flag(o_scheme, "--ple");
    }
    if (!given(o_target) && !target_of) usage("range requires --target-loss-db or --target-loss-of");
    if (target_of) {
      require_flag(o_ple_ref, "--target-loss-of");
      require_flag(o_at_m, "--target-loss-of");
    } else {
      forbid_flag(o_ple_ref, "--target-loss-db");
      forbid_flag(o_at_m, "--target-loss-db");
    }

    const FrequencyBand band(freq_ghz);
    Report report{"range", {}, {}};
    const double target_db = target_of ? ci_path_loss(CiModel(band, ple_ref), at_m) : target;
    RangeQuery query{band, 0.0, 0.0};
    if (given(o_ple)) {
      query = RangeQuery::for_model(CiModel(band, ple), target_db, rate);
    } else {
      const BcCiModel model(band, n_single, a_weight, parse_scheme(scheme));
      query = RangeQuery::for_model(model, beams, target_db, rate);
    }
    Row row{{"effective_ple", query.effective_ple},
            {"target_loss_db", query.target_loss_db},
            {"atm_db_per_km", query.atmospheric_db_per_km},
            {"distance_m", distance_for_loss(query)}};
    if (target_of) {
      row.push_back({"reference_ple", ple_ref});
      row.push_back({"reference_distance_m", at_m});
      row.push_back({"delta_db_per_decade", attenuation_per_decade_delta(ple_ref, query.effective_ple)});
    }
    report.rows.push_back(std::move(row));
    return report;
  }
};

struct SynthCmd {
  Common common;
  double freq_ghz = 0.0, ple = 0.0, sigma = 0.0;
  std::uint64_t seed = 1;
  std::vector<double> distances;
  double d_min = 0.0, d_max = 0.0;
  std::size_t count = 0;
  std::string environment = "synthetic", scenario = "NLOS", output;
  double h_tx = 1.5, h_rx = 1.5;
  CLI::Option *o_distances, *o_d_min, *o_d_max, *o_count, *o_output;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("synth", "Generate a seeded synthetic CI measurement dataset");
    sub->add_option("--freq-ghz", freq_ghz, "Carrier frequency (GHz)")->required()->check(kFrequencyRule);
    sub->add_option("--ple", ple, "CI path loss exponent")->required()->check(kPleRule);
    sub->add_option("--sigma-db", sigma, "Shadowing sigma (dB)")->check(kSigmaRule)->capture_default_str();
    sub->add_option("--seed", seed, "Shadowing seed")->capture_default_str();
    o_distances = sub->add_option("--distances-m", distances, "Explicit distances (m)")
                      ->delimiter(',')
                      ->check(kDistanceRule);
    o_d_min = sub->add_option("--d-min-m", d_min, "Log grid start (m)")->check(kDistanceRule);
    o_d_max = sub->add_option("--d-max-m", d_max, "Log grid end (m)")->check(kDistanceRule);
    o_count = sub->add_option("--count", count, "Log grid points")->check(kBeamsRule);
    sub->add_option("--environment", environment, "Environment tag")->capture_default_str();
    sub->add_option("--scenario", scenario, "LOS | NLOS")
        ->check(CLI::IsMember({"LOS", "NLOS"}))
        ->capture_default_str();
    sub->add_option("--h-tx-m", h_tx, "TX height recorded in the dataset")->check(kHeightRule);
    sub->add_option("--h-rx-m", h_rx, "RX height recorded in the dataset")->check(kHeightRule);
    o_output = sub->add_option("--output", output, "Write the dataset here instead of stdout");
    o_distances->excludes(o_d_min)->excludes(o_d_max)->excludes(o_count);
    add_format(sub, common);
  }

  void run(std::ostream& out) const {
    std::vector<double> grid = distances;
    if (!given(o_distances)) {
      if (!given(o_d_min) || !given(o_d_max) || !given(o_count)) {
        usage("synth requires --distances-m or all of --d-min-m, --d-max-m, --count");
      }
      if (d_max < d_min) usage("--d-max-m must not be below --d-min-m");
      grid = log_spaced(d_min, d_max, count);
    }
    const CiModel model(FrequencyBand(freq_ghz), ple, sigma);
    if (environment.empty() || environment.find_first_of(",\n\r") != std::string::npos) {
      usage("--environment must be non-empty and free of commas");
    }
    const SyntheticSetup setup{environment, parse_scenario_flag(scenario), h_tx, h_rx};
    const auto records = generate_ci_dataset(model, grid, seed, setup);
    const auto comments = synthetic_dataset_comments(model, seed);

    std::string text;
    if (parse_format(common.format) == OutputFormat::Json) {
      json results = json::array();
      for (const auto& r : records) {
        results.push_back({{"frequency_ghz", r.frequency_ghz},
                           {"environment", r.environment},
                           {"scenario", std::string(to_string(r.scenario))},
                           {"tx_height_m", r.tx_height_m},
                           {"rx_height_m", r.rx_height_m},
                           {"distance_m", r.distance_m},
                           {"path_loss_db", r.path_loss_db}});
      }
      json meta;
      meta["comments"] = comments;
      text = envelope("synth", std::move(results), {}, meta).dump(2) + "\n";
    } else {
      text = emit_measurements(records, comments);
    }
    if (given(o_output)) {
      std::ofstream file(output, std::ios::binary);
      if (!file) usage("cannot open output file '" + output + "'");
      file << text;
    } else {
      out << text;
    }
  }
};

struct PlotCmd {
  Common common;
  int figure = 0;
  int resolution = 10;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("plot-data", "Model curves for figures 1-7 as CSV");
    sub->add_option("--figure", figure, "Figure id (1-7)")
        ->required()
        ->check(bounded(1.0, true, static_cast<double>(kFigureCount), true, "figure id in 1..7"));
    sub->add_option("--resolution", resolution, "Points per decade")
        ->check(bounded(2.0, true, std::nullopt, false, "resolution >= 2 points per decade"))
        ->capture_default_str();
    add_format(sub, common);
  }

  void run(std::ostream& out) const {
    const PlotData data = export_plot_data(figure, resolution);
    if (parse_format(common.format) != OutputFormat::Json) {
      out << render_plot_csv(data);
      return;
    }
    json results = json::array();
    for (std::size_t i = 0; i < data.distances_m.size(); ++i) {
      json row;
      row["distance_m"] = data.distances_m[i];
      for (std::size_t c = 0; c < data.curve_names.size(); ++c) {
        row[data.curve_names[c]] = data.losses_db[c][i];
      }
      results.push_back(std::move(row));
    }
    json meta;
    meta["figure"] = figure;
    meta["curves"] = data.curve_names;
    out << envelope("plot-data", std::move(results), {}, meta).dump(2) << '\n';
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Millimeter-wave path loss toolkit: CI, modified FS/SUI and beam-combining models",
               "mmwave"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  PathlossCmd pathloss;
  FitCiCmd fit_ci;
  FitAlphaCmd fit_alpha;
  FitBcCmd fit_bc;
  SigmaCmd sigma;
  TablesCmd tables;
  RangeCmd range;
  SynthCmd synth;
  PlotCmd plot;
  pathloss.add(app);
  fit_ci.add(app);
  fit_alpha.add(app);
  fit_bc.add(app);
  sigma.add(app);
  tables.add(app);
  range.add(app);
  synth.add(app);
  plot.add(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kExitUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    auto emit = [&](const Report& report, const Common& common) {
      write_report(report, parse_format(common.format), out, err);
    };
    if (name == "pathloss") emit(pathloss.run(), pathloss.common);
    else if (name == "fit-ci") emit(fit_ci.run(in), fit_ci.common);
    else if (name == "fit-alpha") emit(fit_alpha.run(in), fit_alpha.common);
    else if (name == "fit-bc") emit(fit_bc.run(in), fit_bc.common);
    else if (name == "sigma") emit(sigma.run(in), sigma.common);
    else if (name == "range") emit(range.run(), range.common);
    else if (name == "tables") tables.run(out);
    else if (name == "synth") synth.run(out);
    else if (name == "plot-data") plot.run(out);
  } catch (const Error& e) {
    err << (e.code() == ErrorCode::Usage ? "" : "error: ") << e.what() << '\n';
    return e.code() == ErrorCode::Usage ? kExitUsage : kExitDomainError;
  }
  return kExitOk;
}

}  // namespace mmwave::cli
