#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "mmwave/beam_combining.hpp"
#include "mmwave/cli.hpp"
#include "mmwave/data_io.hpp"
#include "mmwave/estimation.hpp"
#include "mmwave/format.hpp"
#include "mmwave/link_analysis.hpp"
#include "mmwave/plot_data.hpp"
#include "mmwave/tables.hpp"

using namespace mmwave;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = invoke(std::move(args), stdin_text);
  REQUIRE(r.status == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("pathloss ci") {
  const auto r = invoke({"pathloss", "--model", "ci", "--freq-ghz", "73", "--ple", "4.4",
                         "--distance-m", "100", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == "distance_m,path_loss_db\n100.000000," +
                     format_fixed(ci_path_loss(CiModel(FrequencyBand(73), 4.4), 100.0), 6) + "\n");
  CHECK(r.out.find("157.666") != std::string::npos);
}

TEST_CASE("pathloss models agree with the library") {
  const FrequencyBand f73(73.0);
  const SuiContext ctx(f73, TerrainClass::B, 7.0, 4.06);
  auto j = invoke_json({"pathloss", "--model", "sui-nlos", "--freq-ghz", "73", "--alpha", "0.75",
                        "--terrain", "B", "--h-tx-m", "7", "--h-rx-m", "4.06", "--distance-m",
                        "53,187"});
  CHECK(j["results"][1]["path_loss_db"].get<double>() ==
        modified_sui_path_loss(ModifiedModel(ctx, 0.75), 187.0));

  j = invoke_json({"pathloss", "--model", "sui", "--freq-ghz", "73", "--terrain", "B", "--h-tx-m",
                   "7", "--h-rx-m", "4.06", "--distance-m", "60"});
  CHECK(j["results"][0]["path_loss_db"].get<double>() == sui_path_loss(ctx, 60.0));

  j = invoke_json({"pathloss", "--model", "fs-los", "--freq-ghz", "60", "--alpha", "1.1",
                   "--distance-m", "100"});
  CHECK(j["results"][0]["path_loss_db"].get<double>() ==
        modified_fs_path_loss(ModifiedModel(FreeSpaceBase{FrequencyBand(60)}, 1.1), 100.0));

  j = invoke_json({"pathloss", "--model", "fs", "--freq-ghz", "73", "--distance-m", "1",
                   "--tx-gain-dbi", "3"});
  CHECK(j["results"][0]["path_loss_db"].get<double>() == fs_path_loss(f73, 1.0, 3.0, 0.0));

  const BcCiModel bc(FrequencyBand(28), 3.812, 0.0297, CombiningScheme::NonCoherent);
  j = invoke_json({"pathloss", "--model", "bc-ci", "--freq-ghz", "28", "--n-single", "3.812",
                   "--a-weight", "0.0297", "--beams", "6", "--scheme", "ncc", "--distance-m", "250"});
  CHECK(j["results"][0]["path_loss_db"].get<double>() == bc_ci_path_loss(bc, 6, 250.0));

  j = invoke_json({"pathloss", "--model", "ci", "--freq-ghz", "28", "--ple", "3", "--sigma-db",
                   "8", "--seed", "5", "--distance-m", "10,20"});
  const CiModel ci(FrequencyBand(28), 3.0);
  CHECK(j["results"][0]["path_loss_db"].get<double>() ==
        ci_path_loss(ci, 10.0, ShadowingSpec{8.0, 5}));
  CHECK(j["results"][1]["path_loss_db"].get<double>() ==
        ci_path_loss(ci, 20.0, ShadowingSpec{8.0, 6}));
}

TEST_CASE("usage errors exit with status 2") {
  auto r = invoke({"pathloss", "--model", "ci", "--freq-ghz", "73", "--ple", "3", "--distance-m",
                   "0.5"});
  CHECK(r.status == 2);
  CHECK(r.err.find("--distance-m") != std::string::npos);
  CHECK(r.err.find("1 m close-in reference distance") != std::string::npos);

  r = invoke({"pathloss", "--model", "bc-ci", "--freq-ghz", "28", "--n-single", "3.8",
              "--a-weight", "0.06", "--beams", "0", "--distance-m", "10"});
  CHECK(r.status == 2);
  CHECK(r.err.find("N_r >= 1") != std::string::npos);

  r = invoke({"pathloss", "--model", "ci", "--freq-ghz", "73", "--ple", "3", "--alpha", "0.9",
              "--distance-m", "10"});
  CHECK(r.status == 2);
  CHECK(r.err.find("--alpha") != std::string::npos);

  r = invoke({"pathloss", "--model", "ci", "--freq-ghz", "73", "--distance-m", "10"});
  CHECK(r.status == 2);
  CHECK(r.err.find("--ple") != std::string::npos);

  r = invoke({"pathloss", "--model", "sui-nlos", "--freq-ghz", "1.5", "--alpha", "0.8",
              "--h-tx-m", "7", "--distance-m", "10"});
  CHECK(r.status == 2);

  r = invoke({"pathloss", "--model", "sui-nlos", "--freq-ghz", "2", "--alpha", "0.8", "--h-tx-m",
              "7", "--distance-m", "10"});
  CHECK(r.status == 0);

  CHECK(invoke({}).status == 2);
  CHECK(invoke({"bogus"}).status == 2);
  CHECK(invoke({"pathloss", "--model", "ci", "--sigma-db", "2", "--no-shadow", "--freq-ghz", "3",
                "--ple", "2", "--distance-m", "4"})
            .status == 2);
  CHECK(invoke({"--help"}).status == 0);
  CHECK(invoke({"tables", "--table", "IV"}).status == 2);
}

TEST_CASE("domain errors exit with status 1") {
  auto r = invoke({"range", "--freq-ghz", "73", "--ple", "3", "--target-loss-db", "20"});
  CHECK(r.status == 1);
  r = invoke({"fit-ci", "--input", "-"}, "not,a,header\n");
  CHECK(r.status == 1);
  r = invoke({"pathloss", "--model", "bc-ci", "--freq-ghz", "28", "--n-single", "3", "--a-weight",
              "0.5", "--beams", "4", "--distance-m", "10"});
  CHECK(r.status == 1);
}

TEST_CASE("range") {
  auto j = invoke_json({"range", "--freq-ghz", "73", "--ple", "3.226", "--target-loss-of",
                        "--ple-ref", "3.728", "--at-m", "100"});
  const double d = j["results"][0]["distance_m"].get<double>();
  CHECK(std::fabs(d - 204.8) <= 0.1);
  const FrequencyBand f73(73.0);
  CHECK(d == distance_for_loss(RangeQuery::for_model(CiModel(f73, 3.226),
                                                     ci_path_loss(CiModel(f73, 3.728), 100.0))));
  CHECK(j["results"][0]["delta_db_per_decade"].get<double>() ==
        attenuation_per_decade_delta(3.728, 3.226));

  auto r = invoke({"range", "--freq-ghz", "73", "--ple", "3.226", "--target-loss-of", "--ple-ref",
                   "3.728", "--at-m", "100"});
  CHECK(r.status == 0);
  CHECK(r.out.find("204.7") != std::string::npos);
}

TEST_CASE("synth, fit-ci, fit-alpha and sigma pipeline") {
  const auto synth = invoke({"synth", "--freq-ghz", "73", "--ple", "4.4", "--sigma-db", "0",
                             "--d-min-m", "53", "--d-max-m", "187", "--count", "20", "--scenario",
                             "NLOS", "--h-tx-m", "17", "--h-rx-m", "2"});
  REQUIRE(synth.status == 0);
  CHECK(synth.out == invoke({"synth", "--freq-ghz", "73", "--ple", "4.4", "--sigma-db", "0",
                             "--d-min-m", "53", "--d-max-m", "187", "--count", "20", "--scenario",
                             "NLOS", "--h-tx-m", "17", "--h-rx-m", "2"})
                         .out);

  auto j = invoke_json({"fit-ci", "--input", "-"}, synth.out);
  CHECK(std::fabs(j["results"][0]["ple"].get<double>() - 4.4) < 1e-6);
  CHECK(j["results"][0]["samples"].get<int>() == 20);

  j = invoke_json({"fit-alpha", "--input", "-", "--base", "sui", "--terrain", "A"}, synth.out);
  CHECK(round_to(j["results"][0]["alpha"].get<double>(), 3) == 0.844);

  std::istringstream in(synth.out);
  const auto parsed = parse_measurements(in);
  std::vector<FitSample> s;
  for (const auto& rec : parsed.records) s.push_back({rec.distance_m, rec.path_loss_db});
  const auto fit =
      fit_slope_correction(FitDataset(FrequencyBand(73), s),
                           SuiContext(FrequencyBand(73), TerrainClass::A, 17.0, 2.0));
  CHECK(j["results"][0]["alpha"].get<double>() == fit.value);

  j = invoke_json({"sigma", "--residuals-db", "1,2,2,4,6"});
  CHECK(j["results"][0]["sigma_db"].get<double>() == shadowing_sigma(std::vector<double>{1, 2, 2, 4, 6}));
}

TEST_CASE("fit-bc on generated beam records") {
  const FrequencyBand f28(28.0);
  const BcCiModel truth(f28, 3.812, 0.0671, CombiningScheme::Coherent);
  std::vector<BeamRecord> records;
  int loc = 0;
  for (double d : log_spaced(30.0, 200.0, 8)) {
    // Received powers whose 1..3-beam coherent combinations sit on the model.
    const double link = 30.0 + 24.5 + 24.5;
    const double p1 = to_linear(link - bc_ci_path_loss(truth, 1, d));
    const double c2 = to_linear(link - bc_ci_path_loss(truth, 2, d));
    const double c3 = to_linear(link - bc_ci_path_loss(truth, 3, d));
    const double p2 = std::pow(std::sqrt(c2) - std::sqrt(p1), 2.0);
    const double p3 = std::pow(std::sqrt(c3) - std::sqrt(c2), 2.0);
    const std::string id = "L" + std::to_string(loc++);
    for (auto [idx, p] : {std::pair{0, p1}, std::pair{1, p2}, std::pair{2, p3}}) {
      records.push_back({id, 28.0, "synthetic", Scenario::Nlos, 7.0, 1.5, d, idx, p, 30.0, 24.5,
                         24.5});
    }
  }
  const std::string csv = emit_beam_records(records);
  const auto j = invoke_json({"fit-bc", "--input", "-", "--scheme", "cc", "--max-beams", "3",
                              "--n-single", "3.812"},
                             csv);
  CHECK(std::fabs(j["results"][0]["a_weight"].get<double>() - 0.0671) < 1e-6);
  CHECK(j["results"][0]["locations"].get<int>() == 8);
}

TEST_CASE("tables and plot data") {
  auto r = invoke({"tables", "--table", "II"});
  CHECK(r.status == 0);
  for (const char* alpha : {"0.844", "0.772", "0.863", "0.756", "0.899", "0.766", "0.919"}) {
    CHECK(r.out.find(alpha) != std::string::npos);
  }
  CHECK(invoke({"tables", "--format", "csv"}).out ==
        render_table_csv(export_table(TableId::I)) + "\n" +
            render_table_csv(export_table(TableId::II)) + "\n" +
            render_table_csv(export_table(TableId::III)));

  r = invoke({"plot-data", "--figure", "7", "--resolution", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == render_plot_csv(export_plot_data(7, 5)));
  CHECK(invoke({"plot-data", "--figure", "9"}).status == 2);
}

TEST_CASE("json envelope") {
  const auto j = invoke_json({"tables", "--table", "III"});
  CHECK(j["command"] == "tables");
  CHECK(j["results"].is_array());
  CHECK(j["warnings"].is_array());
  CHECK(j["meta"]["flag_count"].get<int>() == static_cast<int>(export_table(TableId::III).flag_count()));
}
