#include "mmwave/reference_tables.hpp"

namespace mmwave {

namespace {

constexpr PrintedValue p(double value, int decimals) { return {value, decimals}; }

constexpr std::optional<PrintedValue> none = std::nullopt;

// 60 GHz courtyard / in-vehicle, TX and RX at 1.5 m, 25 dBi horns (7.3 deg).
const SlopeColumn k60GhzColumns[] = {
    {"NLOS Courtyard", Scenario::Nlos, 1.5, 1.5, 3.6, p(9.0, 1),
     {p(0.277, 3), p(0.234, 3), p(0.213, 3)}},
    {"NLOS In-vehicle", Scenario::Nlos, 1.5, 1.5, 5.4, p(14.8, 1),
     {p(0.416, 3), p(0.351, 3), p(0.319, 3)}},
    {"LOS Courtyard", Scenario::Los, 1.5, 1.5, 2.2, p(2.0, 1), {p(1.10, 2), none, none}},
    {"LOS In-vehicle", Scenario::Los, 1.5, 1.5, 2.5, p(3.5, 1), {p(1.25, 2), none, none}},
};

// 73 GHz downtown, TX at 17/7 m, RX at 2 m (mobile) / 4.06 m (backhaul),
// 27 dBi horns (7 deg). NLOS alpha for terrains A and B only.
const SlopeColumn k73GhzColumns[] = {
    {"NLOS TX17 RX2", Scenario::Nlos, 17.0, 2.0, 4.4, p(11.7, 1), {p(0.844, 3), p(0.899, 3), none}},
    {"NLOS TX7 RX2", Scenario::Nlos, 7.0, 2.0, 4.9, p(11.9, 1), {p(0.772, 3), p(0.766, 3), none}},
    {"NLOS TX17 RX4.06", Scenario::Nlos, 17.0, 4.06, 4.5, p(12.6, 1),
     {p(0.863, 3), p(0.919, 3), none}},
    {"NLOS TX7 RX4.06", Scenario::Nlos, 7.0, 4.06, 4.8, p(12.4, 1),
     {p(0.756, 3), p(0.75, 2), none}},
    {"LOS TX17 RX2", Scenario::Los, 17.0, 2.0, 2.2, p(4.1, 1), {p(1.1, 1), none, none}},
    {"LOS TX7 RX2", Scenario::Los, 7.0, 2.0, 2.3, p(6.9, 1), {p(1.15, 2), none, none}},
    {"LOS TX17 RX4.06", Scenario::Los, 17.0, 4.06, 2.3, p(4.6, 1), {p(1.15, 2), none, none}},
    {"LOS TX7 RX4.06", Scenario::Los, 7.0, 4.06, 2.4, p(9.1, 1), {p(1.2, 1), none, none}},
};

const SlopeTableSpec k60Ghz{60.0, 25.0, 7.3, k60GhzColumns, 29.0, 129.0, 29.0, 129.0};
const SlopeTableSpec k73Ghz{73.0, 27.0, 7.0, k73GhzColumns, 31.0, 102.0, 53.0, 187.0};

constexpr std::array<PrintedValue, 4> row3(double a, double b, double c, double d) {
  return {p(a, 3), p(b, 3), p(c, 3), p(d, 3)};
}
constexpr std::array<PrintedValue, 4> row1(double a, double b, double c, double d) {
  return {p(a, 1), p(b, 1), p(c, 1), p(d, 1)};
}

const BeamCombiningBlock kBeamCombining[] = {
    {"28 GHz (RX 1.5 m)", 28.0, 1.5, 3.812,
     {CombiningScheme::Coherent, p(0.0671, 4), row3(3.812, 3.557, 3.407, 3.301),
      row3(3.812, 3.548, 3.406, 3.307), row1(9.1, 9.1, 9.2, 9.2), row1(9.1, 9.1, 9.2, 9.2)},
     {CombiningScheme::NonCoherent, p(0.0297, 4), row3(3.812, 3.699, 3.633, 3.586),
      row3(3.812, 3.692, 3.631, 3.591), row1(9.1, 9.2, 9.2, 9.2), row1(9.1, 9.2, 9.2, 9.2)}},
    {"73 GHz mobile (RX 2 m)", 73.0, 2.0, 3.728,
     {CombiningScheme::Coherent, p(0.0673, 4), row3(3.728, 3.477, 3.330, 3.226),
      row3(3.728, 3.466, 3.327, 3.235), row1(7.6, 7.3, 7.2, 7.2), row1(7.6, 7.3, 7.2, 7.2)},
     {CombiningScheme::NonCoherent, p(0.0284, 4), row3(3.728, 3.622, 3.560, 3.516),
      row3(3.728, 3.613, 3.557, 3.523), row1(7.6, 7.4, 7.3, 7.3), row1(7.6, 7.4, 7.3, 7.3)}},
    {"73 GHz backhaul (RX 4.06 m)", 73.0, 4.06, 3.823,
     {CombiningScheme::Coherent, p(0.0621, 4), row3(3.823, 3.586, 3.447, 3.348),
      row3(3.823, 3.578, 3.446, 3.353), row1(8.9, 8.5, 8.1, 7.8), row1(8.9, 8.5, 8.1, 7.8)},
     {CombiningScheme::NonCoherent, p(0.0256, 4), row3(3.823, 3.726, 3.668, 3.628),
      row3(3.823, 3.718, 3.667, 3.632), row1(8.9, 8.6, 8.3, 8.1), row1(8.9, 8.6, 8.3, 8.1)}},
};

}  // namespace

const SlopeTableSpec& slope_table_60ghz() { return k60Ghz; }
const SlopeTableSpec& slope_table_73ghz() { return k73Ghz; }
std::span<const BeamCombiningBlock> beam_combining_table() { return kBeamCombining; }

}  // namespace mmwave
