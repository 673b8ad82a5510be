#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mmwave/beam_combining.hpp"
#include "mmwave/propagation.hpp"

namespace mmwave {

struct BcCiCurve {
  BcCiModel model;
  int n_r;
};

using CurveModel = std::variant<CiModel, ModifiedModel, SuiContext, FreeSpaceBase, BcCiCurve>;

struct PlotCurve {
  std::string name;
  CurveModel model;
  /// Every curve except unmodified FS (Friis with the exact constant) and
  /// unmodified SUI (carries its correction terms) passes through FSPL(f, 1 m).
  bool anchored;
  /// Exponent of the distance term: n, alpha * n_base, or the BC-CI value.
  double ple;
};

struct FigureSpec {
  int id;
  std::string title;
  FrequencyBand band;
  double span_lo_m;  // measurement span the curves are compared over
  double span_hi_m;
  double d_max_m;    // grid runs from 1 m to here
  std::vector<PlotCurve> curves;
};

inline constexpr int kFigureCount = 7;

/// Throws Usage for ids outside 1..7.
FigureSpec figure_spec(int figure);

struct PlotData {
  int figure;
  std::vector<std::string> curve_names;
  std::vector<double> distances_m;
  std::vector<std::vector<double>> losses_db;  // [curve][point]
};

/// Log grid from 1 m to d_max with points_per_decade points per decade
/// (grid points at 10^(k / ppd), plus d_max). Requires points_per_decade >= 2.
PlotData export_plot_data(int figure, int points_per_decade);

/// Wide CSV: distance_m followed by one column per curve.
std::string render_plot_csv(const PlotData& data);

}  // namespace mmwave
