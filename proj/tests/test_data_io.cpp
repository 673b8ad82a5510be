#include <doctest.h>

#include <sstream>

#include "mmwave/data_io.hpp"
#include "mmwave/format.hpp"
#include "mmwave/shadowing.hpp"
#include "support.hpp"

using namespace mmwave;

namespace {
ParseResult<MeasurementRecord> parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_measurements(in);
}
const std::string kHeader = std::string(kMeasurementHeader) + "\n";
}  // namespace

TEST_CASE("measurement parsing") {
  const auto empty = parse_text(kHeader);
  CHECK(empty.records.empty());
  CHECK(empty.diagnostics.empty());

  const auto one = parse_text(kHeader + "73,urban,NLOS,17,2,100,157.7\n");
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0] == MeasurementRecord{73.0, "urban", Scenario::Nlos, 17.0, 2.0, 100.0, 157.7});
  CHECK(one.diagnostics.empty());

  const auto mixed = parse_text("# comment\n" + kHeader + "\n73,urban,NLOS,17,2,0.5,157.7\r\n" +
                                "73,urban,LOS,17,2,50,120\n73,urban,XLOS,17,2,50,120\n" +
                                "73,urban,LOS,17,2,abc,120\n73,urban,LOS,17\n");
  REQUIRE(mixed.records.size() == 1);
  CHECK(mixed.records[0].scenario == Scenario::Los);
  REQUIRE(mixed.diagnostics.size() == 4);
  CHECK(mixed.diagnostics[0].line == 4);
  CHECK(mixed.diagnostics[0].severity == Severity::Rejected);
  CHECK(mixed.diagnostics[0].reason.find("1 m") != std::string::npos);
}

TEST_CASE("measurement format errors") {
  CHECK_ERROR(parse_text(""), ErrorCode::Format);
  CHECK_ERROR(parse_text("a,b,c\n1,2,3\n"), ErrorCode::Format);
  CHECK_ERROR(parse_text(kHeader + "73,urban,NLOS,17,2,0.2,157.7\n"), ErrorCode::Format);
}

TEST_CASE("implausibly low loss is a warning") {
  const auto r = parse_text(kHeader + "73,urban,LOS,17,2,10,40\n");
  REQUIRE(r.records.size() == 1);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].severity == Severity::Warning);
}

TEST_CASE("emit and parse round trip") {
  const CiModel model(FrequencyBand(28.0), 3.3, 8.0);
  const auto d = log_spaced(1.0, 500.0, 50);
  const auto records = generate_ci_dataset(model, d, 77);
  const auto comments = synthetic_dataset_comments(model, 77);
  const std::string text = emit_measurements(records, comments);
  CHECK(text.rfind("# ", 0) == 0);
  CHECK(text.find(kShadowSamplerName) != std::string::npos);
  const auto back = parse_text(text);
  REQUIRE(back.records.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(std::fabs(back.records[i].path_loss_db - records[i].path_loss_db) <= 0.5e-6 + 1e-12);
    CHECK(back.records[i].environment == records[i].environment);
  }
  CHECK(emit_measurements(back.records, comments) == text);
}

TEST_CASE("synthetic generation") {
  const CiModel flat(FrequencyBand(60.0), 3.6, 0.0);
  const std::vector<double> d{10.0, 100.0};
  const auto r = generate_ci_dataset(flat, d, 1);
  CHECK(r[0].path_loss_db == fspl_1m(FrequencyBand(60.0)) + 36.0);
  CHECK(r[1].path_loss_db == fspl_1m(FrequencyBand(60.0)) + 72.0);

  const CiModel noisy(FrequencyBand(60.0), 3.6, 9.0);
  const auto a = emit_measurements(generate_ci_dataset(noisy, d, 5));
  const auto b = emit_measurements(generate_ci_dataset(noisy, d, 5));
  CHECK(a == b);

  const std::vector<double> same(10000, 100.0);
  const auto big = generate_ci_dataset(noisy, same, 2024);
  double sum = 0.0, sum2 = 0.0;
  for (const auto& x : big) sum += x.path_loss_db;
  const double mean = sum / big.size();
  for (const auto& x : big) sum2 += (x.path_loss_db - mean) * (x.path_loss_db - mean);
  CHECK(std::fabs(std::sqrt(sum2 / (big.size() - 1)) - 9.0) < 0.02 * 9.0);

  const std::vector<double> bad{0.5};
  CHECK_ERROR(generate_ci_dataset(noisy, bad, 1), ErrorCode::BelowReferenceDistance);
}

TEST_CASE("log spacing") {
  const auto g = log_spaced(29.0, 129.0, 7);
  CHECK(g.front() == 29.0);
  CHECK(g.back() == 129.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
}

TEST_CASE("beam records") {
  std::string text = std::string(kBeamHeader) + "\n";
  text += "L1,28,urban,NLOS,7,1.5,60,0,1e-9,30,24.5,24.5\n";
  text += "L1,28,urban,NLOS,7,1.5,60,1,5e-10,30,24.5,24.5\n";
  text += "L2,28,urban,NLOS,7,1.5,90,0,2e-10,30,24.5,24.5\n";
  text += "L1,28,urban,NLOS,7,1.5,60,1,7e-10,30,24.5,24.5\n";
  std::istringstream in(text);
  const auto parsed = parse_beam_records(in);
  REQUIRE(parsed.records.size() == 3);
  REQUIRE(parsed.diagnostics.size() == 1);
  const auto sets = group_beam_sets(parsed.records);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].location_id() == "L1");
  CHECK(sets[0].size() == 2);
  CHECK(sets[1].distance_m() == 90.0);

  std::istringstream again(emit_beam_records(parsed.records));
  const auto round = parse_beam_records(again);
  REQUIRE(round.records.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(round.records[i].received_power_mw == parsed.records[i].received_power_mw);
  }

  auto conflicting = parsed.records;
  conflicting[1].distance_m = 61.0;
  CHECK_ERROR(group_beam_sets(conflicting), ErrorCode::Format);
}
