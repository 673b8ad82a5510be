#include "mmwave/tables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mmwave/errors.hpp"
#include "mmwave/estimation.hpp"
#include "mmwave/format.hpp"

namespace mmwave {

namespace {

long scaled(double value, int decimals) {
  return std::lround(value * std::pow(10.0, decimals));
}

// Fewest decimals (up to 4) that represent an input exactly.
int natural_decimals(double value) {
  for (int d = 0; d < 4; ++d) {
    if (std::fabs(round_to(value, d) - value) < 1e-9) return d;
  }
  return 4;
}

TableCell input_cell(double value) {
  TableCell cell;
  cell.value = value;
  cell.decimals = natural_decimals(value);
  return cell;
}

TableCell input_cell(const PrintedValue& printed) {
  TableCell cell;
  cell.value = printed.value;
  cell.decimals = printed.decimals;
  cell.printed = printed;
  return cell;
}

TableCell derived_cell(double value, int decimals, const std::optional<PrintedValue>& printed) {
  TableCell cell;
  cell.value = value;
  cell.decimals = decimals;
  cell.derived = true;
  cell.printed = printed;
  if (printed) {
    cell.flagged = scaled(value, printed->decimals) != scaled(printed->value, printed->decimals);
    cell.mismatch_thousandths = std::labs(scaled(value, 3) - scaled(printed->value, 3));
  }
  return cell;
}

ModifiedBase base_for(const SlopeColumn& col, const FrequencyBand& band, TerrainClass terrain) {
  if (col.scenario == Scenario::Los) return FreeSpaceBase{band};
  return SuiContext(band, terrain, col.h_tx_m, col.h_rx_m);
}

ReferenceTable slope_table(TableId id, const SlopeTableSpec& spec, int terrain_rows) {
  ReferenceTable table;
  table.id = id;
  table.title = "Slope correction factors for the modified FS and SUI models at " +
                format_fixed(spec.frequency_ghz, 0) + " GHz";
  for (const auto& col : spec.columns) table.columns.emplace_back(col.label);

  auto add_input_row = [&](std::string label, auto value_of) {
    TableRow row{std::move(label), {}};
    for (const auto& col : spec.columns) row.cells.push_back(value_of(col));
    table.rows.push_back(std::move(row));
  };
  add_input_row("TX height (m)", [](const SlopeColumn& c) { return input_cell(c.h_tx_m); });
  add_input_row("RX height (m)", [](const SlopeColumn& c) { return input_cell(c.h_rx_m); });
  add_input_row("d0 (m)", [](const SlopeColumn&) { return input_cell(kReferenceDistanceM); });
  add_input_row("PLE n", [](const SlopeColumn& c) { return input_cell(c.ple); });
  add_input_row("sigma (dB)", [](const SlopeColumn& c) { return input_cell(c.sigma_db); });
  add_input_row("TX gain (dBi)", [&](const SlopeColumn&) { return input_cell(spec.gain_dbi); });
  add_input_row("TX HPBW (deg)", [&](const SlopeColumn&) { return input_cell(spec.hpbw_deg); });
  add_input_row("RX gain (dBi)", [&](const SlopeColumn&) { return input_cell(spec.gain_dbi); });
  add_input_row("RX HPBW (deg)", [&](const SlopeColumn&) { return input_cell(spec.hpbw_deg); });

  const FrequencyBand band(spec.frequency_ghz);
  const TerrainClass terrains[] = {TerrainClass::A, TerrainClass::B, TerrainClass::C};
  for (int t = 0; t < terrain_rows; ++t) {
    TableRow row{std::string("alpha (terrain ") + terrain_letter(terrains[t]) + ")", {}};
    for (const auto& col : spec.columns) {
      // LOS alpha belongs to the modified FS model and sits in the first row.
      if (col.scenario == Scenario::Los && t > 0) {
        row.cells.emplace_back();
        continue;
      }
      const double alpha = slope_correction_ratio(col.ple, base_for(col, band, terrains[t]));
      row.cells.push_back(derived_cell(alpha, 3, col.alpha[t]));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ReferenceTable beam_table() {
  ReferenceTable table;
  table.id = TableId::III;
  table.title = "Directional CI and BC-CI path loss model parameters at 28 GHz and 73 GHz (NLOS)";
  for (const char* scheme : {"CC", "NCC"}) {
    for (int n = 1; n <= 4; ++n) {
      table.columns.push_back(std::string(scheme) + " N_r=" + std::to_string(n));
    }
  }
  for (const BeamCombiningBlock& block : beam_combining_table()) {
    const std::string prefix = std::string(block.label) + ": ";
    TableRow a_row{prefix + "A", {}};
    TableRow bc_row{prefix + "n_1beam (1 - A log2 N_r)", {}};
    TableRow ref_row{prefix + "PLE per-N_r CI fit", {}};
    TableRow sbc_row{prefix + "sigma BC-CI (dB)", {}};
    TableRow sref_row{prefix + "sigma CI (dB)", {}};
    TableRow dsig_row{prefix + "|delta sigma| (dB)", {}};
    for (const SchemeBlock* scheme : {&block.coherent, &block.non_coherent}) {
      const BcCiModel model(FrequencyBand(block.frequency_ghz), block.n_single,
                            scheme->a_weight.value, scheme->scheme);
      for (int n = 1; n <= 4; ++n) {
        const auto k = static_cast<std::size_t>(n - 1);
        a_row.cells.push_back(input_cell(scheme->a_weight));
        bc_row.cells.push_back(derived_cell(effective_ple(model, n).value, 3, scheme->bc_ple[k]));
        ref_row.cells.push_back(input_cell(scheme->ple_ref[k]));
        sbc_row.cells.push_back(input_cell(scheme->sigma_bc[k]));
        sref_row.cells.push_back(input_cell(scheme->sigma_ref[k]));
        const double delta = std::fabs(scheme->sigma_ref[k].value - scheme->sigma_bc[k].value);
        dsig_row.cells.push_back(derived_cell(delta, 1, PrintedValue{0.0, 0}));
      }
    }
    for (TableRow* row : {&a_row, &bc_row, &ref_row, &sbc_row, &sref_row, &dsig_row}) {
      table.rows.push_back(std::move(*row));
    }
  }
  return table;
}

std::string cell_text(const TableCell& cell) {
  return cell.value ? format_fixed(*cell.value, cell.decimals) : std::string();
}

std::vector<std::string> flag_notes(const ReferenceTable& table) {
  std::vector<std::string> notes;
  for (const TableRow& row : table.rows) {
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const TableCell& cell = row.cells[c];
      if (!cell.flagged) continue;
      notes.push_back(row.label + " / " + table.columns[c] + ": computed " + cell_text(cell) +
                      ", printed " + format_fixed(cell.printed->value, cell.printed->decimals));
    }
  }
  return notes;
}

}  // namespace

std::string_view to_string(TableId id) noexcept {
  switch (id) {
    case TableId::I: return "I";
    case TableId::II: return "II";
    case TableId::III: return "III";
  }
  return "?";
}

TableId parse_table_id(std::string_view text) {
  if (text == "I" || text == "1") return TableId::I;
  if (text == "II" || text == "2") return TableId::II;
  if (text == "III" || text == "3") return TableId::III;
  throw Error(ErrorCode::Usage, "unknown table '" + std::string(text) + "' (expected I, II or III)");
}

std::size_t ReferenceTable::flag_count() const {
  std::size_t count = 0;
  for (const TableRow& row : rows) {
    count += static_cast<std::size_t>(
        std::count_if(row.cells.begin(), row.cells.end(), [](const TableCell& c) { return c.flagged; }));
  }
  return count;
}

const TableRow& ReferenceTable::row(std::string_view label) const {
  for (const TableRow& r : rows) {
    if (r.label == label) return r;
  }
  throw Error(ErrorCode::Usage, "no row '" + std::string(label) + "'");
}

ReferenceTable export_table(TableId id) {
  switch (id) {
    case TableId::I: return slope_table(TableId::I, slope_table_60ghz(), 3);
    case TableId::II: return slope_table(TableId::II, slope_table_73ghz(), 2);
    case TableId::III: return beam_table();
  }
  throw Error(ErrorCode::Usage, "unknown table id");
}

std::string render_table_csv(const ReferenceTable& table) {
  std::ostringstream out;
  out << "table,row";
  for (const auto& col : table.columns) out << ',' << col;
  out << ",flags\n";
  for (const TableRow& row : table.rows) {
    out << to_string(table.id) << ',' << row.label;
    std::string flags;
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const TableCell& cell = row.cells[c];
      out << ',' << cell_text(cell);
      if (cell.flagged) {
        if (!flags.empty()) flags += "; ";
        flags += table.columns[c] + " printed " +
                 format_fixed(cell.printed->value, cell.printed->decimals);
      }
    }
    out << ',' << flags << '\n';
  }
  return out.str();
}

std::string render_table_text(const ReferenceTable& table) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({""});
  for (const auto& col : table.columns) grid.back().push_back(col);
  for (const TableRow& row : table.rows) {
    std::vector<std::string> line{row.label};
    for (const TableCell& cell : row.cells) line.push_back(cell_text(cell) + (cell.flagged ? "*" : ""));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width;
  for (const auto& line : grid) {
    if (width.size() < line.size()) width.resize(line.size(), 0);
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  out << "Table " << to_string(table.id) << ": " << table.title << '\n';
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        out << line[c] << std::string(width[c] - line[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - line[c].size(), ' ') << line[c];
      }
    }
    out << '\n';
  }
  const auto notes = flag_notes(table);
  for (const auto& note : notes) out << "* " << note << '\n';
  return out.str();
}

}  // namespace mmwave
