#include "mmwave/plot_data.hpp"

#include <cmath>
#include <sstream>

#include "mmwave/errors.hpp"
#include "mmwave/format.hpp"
#include "mmwave/reference_tables.hpp"

namespace mmwave {

namespace {

PlotCurve ci_curve(const FrequencyBand& band, double ple, const std::string& label) {
  return {"CI n=" + format_fixed(ple, 3) + " " + label, CiModel(band, ple), true, ple};
}

PlotCurve modified_curve(ModifiedBase base, const PrintedValue& alpha, const std::string& label) {
  const bool fs = std::holds_alternative<FreeSpaceBase>(base);
  const double n_base = base_ple(base);
  return {std::string(fs ? "modified FS" : "modified SUI") + " alpha=" +
              format_fixed(alpha.value, alpha.decimals) + " " + label,
          ModifiedModel(std::move(base), alpha.value), true, alpha.value * n_base};
}

PlotCurve fs_curve(const FrequencyBand& band) { return {"FS", FreeSpaceBase{band}, false, 2.0}; }

PlotCurve sui_curve(const SuiContext& ctx, const std::string& label) {
  return {std::string("SUI ") + terrain_letter(ctx.terrain().terrain_class) + " " + label, ctx,
          false, sui_ple(ctx.terrain(), ctx.h_tx_m())};
}

// Figures 1-6 compare CI fits against FS (LOS) or SUI terrain A (NLOS) and
// their slope-corrected versions, for the table columns listed.
FigureSpec slope_figure(int id, std::string title, const SlopeTableSpec& spec,
                        std::initializer_list<std::size_t> column_ids) {
  const FrequencyBand band(spec.frequency_ghz);
  const SlopeColumn& first = spec.columns[*column_ids.begin()];
  const bool los = first.scenario == Scenario::Los;
  FigureSpec fig{id,
                 std::move(title),
                 band,
                 los ? spec.los_span_lo_m : spec.nlos_span_lo_m,
                 los ? spec.los_span_hi_m : spec.nlos_span_hi_m,
                 los ? spec.los_span_hi_m : spec.nlos_span_hi_m,
                 {}};
  for (std::size_t c : column_ids) {
    fig.curves.push_back(ci_curve(band, spec.columns[c].ple, std::string(spec.columns[c].label)));
  }
  if (los) {
    fig.curves.push_back(fs_curve(band));
    for (std::size_t c : column_ids) {
      fig.curves.push_back(
          modified_curve(FreeSpaceBase{band}, *spec.columns[c].alpha[0],
                         std::string(spec.columns[c].label)));
    }
  } else {
    for (std::size_t c : column_ids) {
      const SlopeColumn& col = spec.columns[c];
      SuiContext ctx(band, TerrainClass::A, col.h_tx_m, col.h_rx_m);
      fig.curves.push_back(sui_curve(ctx, std::string(col.label)));
    }
    for (std::size_t c : column_ids) {
      const SlopeColumn& col = spec.columns[c];
      fig.curves.push_back(modified_curve(SuiContext(band, TerrainClass::A, col.h_tx_m, col.h_rx_m),
                                          *col.alpha[0], std::string(col.label)));
    }
  }
  return fig;
}

FigureSpec beam_figure() {
  const BeamCombiningBlock& block = beam_combining_table()[0];
  const FrequencyBand band(block.frequency_ghz);
  const BcCiModel model(band, block.n_single, block.coherent.a_weight.value,
                        CombiningScheme::Coherent);
  FigureSpec fig{7, "BC-CI path loss for an arbitrary number of coherently combined beams, 28 GHz",
                 band, 1.0, 1000.0, 1000.0, {}};
  for (int n_r : {1, 2, 4, 6, 8, 10}) {
    const double ple = effective_ple(model, n_r).value;
    fig.curves.push_back({"BC-CI N_r=" + std::to_string(n_r), BcCiCurve{model, n_r}, true, ple});
  }
  for (int n_r : {2, 4}) {
    const double ple = block.coherent.ple_ref[static_cast<std::size_t>(n_r - 1)].value;
    fig.curves.push_back(ci_curve(band, ple, "N_r=" + std::to_string(n_r)));
  }
  return fig;
}

struct BatchEvaluator {
  std::span<const double> d;
  std::span<double> out;
  void operator()(const CiModel& m) const { ci_path_loss_batch(m, d, out); }
  void operator()(const ModifiedModel& m) const { modified_path_loss_batch(m, d, out); }
  void operator()(const SuiContext& m) const { sui_path_loss_batch(m, d, out); }
  void operator()(const FreeSpaceBase& m) const { fs_path_loss_batch(m.band, d, out); }
  void operator()(const BcCiCurve& m) const { bc_ci_path_loss_batch(m.model, m.n_r, d, out); }
};

std::vector<double> figure_grid(double d_max, int points_per_decade) {
  std::vector<double> grid;
  const double ppd = static_cast<double>(points_per_decade);
  for (int k = 0;; ++k) {
    const double d = std::pow(10.0, static_cast<double>(k) / ppd);
    if (d > d_max * (1.0 + 1e-12)) break;
    grid.push_back(d);
  }
  if (grid.back() < d_max * (1.0 - 1e-12)) grid.push_back(d_max);
  return grid;
}

}  // namespace

FigureSpec figure_spec(int figure) {
  const auto& s60 = slope_table_60ghz();
  const auto& s73 = slope_table_73ghz();
  switch (figure) {
    case 1: return slope_figure(1, "60 GHz LOS courtyard and in-vehicle, modified FS", s60, {2, 3});
    case 2: return slope_figure(2, "60 GHz NLOS courtyard and in-vehicle, modified SUI (terrain A)", s60, {0, 1});
    case 3: return slope_figure(3, "73 GHz LOS, RX 2 m, modified FS", s73, {4, 5});
    case 4: return slope_figure(4, "73 GHz NLOS, RX 2 m, modified SUI (terrain A)", s73, {0, 1});
    case 5: return slope_figure(5, "73 GHz LOS, RX 4.06 m, modified FS", s73, {6, 7});
    case 6: return slope_figure(6, "73 GHz NLOS, RX 4.06 m, modified SUI (terrain A)", s73, {2, 3});
    case 7: return beam_figure();
    default: break;
  }
  throw Error(ErrorCode::Usage,
              "unknown figure " + std::to_string(figure) + " (expected 1 to " +
                  std::to_string(kFigureCount) + ")");
}

PlotData export_plot_data(int figure, int points_per_decade) {
  if (points_per_decade < 2) {
    throw Error(ErrorCode::Usage, "plot resolution must be at least 2 points per decade");
  }
  const FigureSpec spec = figure_spec(figure);
  PlotData data;
  data.figure = figure;
  data.distances_m = figure_grid(spec.d_max_m, points_per_decade);
  for (const PlotCurve& curve : spec.curves) {
    data.curve_names.push_back(curve.name);
    std::vector<double> losses(data.distances_m.size());
    std::visit(BatchEvaluator{data.distances_m, losses}, curve.model);
    data.losses_db.push_back(std::move(losses));
  }
  return data;
}

std::string render_plot_csv(const PlotData& data) {
  std::ostringstream out;
  out << "distance_m";
  for (const auto& name : data.curve_names) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < data.distances_m.size(); ++i) {
    out << format_fixed(data.distances_m[i], 6);
    for (const auto& curve : data.losses_db) out << ',' << format_fixed(curve[i], 6);
    out << '\n';
  }
  return out.str();
}

}  // namespace mmwave
