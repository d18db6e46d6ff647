#include <array>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "handballsim/hbsim.h"
#include "json.hpp"

extern "C" int capi_smoke_run(void);

namespace {

struct ConfigHandle {
  hbsim_config* ptr;
  ConfigHandle() : ptr(hbsim_config_new()) {}
  ~ConfigHandle() { hbsim_config_free(ptr); }
  operator hbsim_config*() const { return ptr; }
};

struct ResultsHandle {
  hbsim_results* ptr;
  explicit ResultsHandle(hbsim_results* p) : ptr(p) {}
  ~ResultsHandle() { hbsim_results_free(ptr); }
  operator hbsim_results*() const { return ptr; }
};

hbsim_results* run_pair(uint64_t runs, uint64_t seed) {
  ConfigHandle config;
  REQUIRE(hbsim_config_set_runs(config, runs) == HBSIM_OK);
  REQUIRE(hbsim_config_set_seed(config, seed) == HBSIM_OK);
  REQUIRE(hbsim_config_set_threads(config, 1) == HBSIM_OK);
  REQUIRE(hbsim_config_add_design(config, "rr", "seeded") == HBSIM_OK);
  REQUIRE(hbsim_config_add_design(config, "ko", "seeded") == HBSIM_OK);
  hbsim_results* results = hbsim_run(config);
  REQUIRE(results != nullptr);
  return results;
}

}  // namespace

TEST_CASE("pure C translation unit drives the library") {
  CHECK(capi_smoke_run() == 0);
}

TEST_CASE("results expose reports by index and by name") {
  ResultsHandle results(run_pair(600, 21));
  CHECK(hbsim_results_count(results) == 2);
  CHECK(hbsim_results_report(results, 0) != nullptr);
  CHECK(hbsim_results_report(results, 1) != nullptr);
  CHECK(hbsim_results_report(results, 2) == nullptr);
  CHECK(hbsim_results_report(results, -1) == nullptr);

  CHECK(hbsim_results_find(results, "ko", "seeded") != nullptr);
  CHECK(hbsim_results_find(results, "ko", "random") == nullptr);
  CHECK(hbsim_results_find(results, "g64", nullptr) == nullptr);
  // Round robin has no draw; any seeding spelling finds it.
  const hbsim_report* rr = hbsim_results_find(results, "rr", nullptr);
  CHECK(rr != nullptr);
  CHECK(hbsim_results_find(results, "rr", "random") == rr);
  CHECK(std::string(hbsim_report_seeding(rr)).empty());
  CHECK(hbsim_report_has_final(rr) == 0);
}

TEST_CASE("metric queries cover counts proportions and guards") {
  ResultsHandle results(run_pair(600, 21));
  const hbsim_report* rr = hbsim_results_find(results, "rr", nullptr);
  const hbsim_report* ko = hbsim_results_find(results, "ko", "seeded");
  REQUIRE(rr != nullptr);
  REQUIRE(ko != nullptr);

  double value = -1, se = -1;
  CHECK(hbsim_report_metric(rr, HBSIM_METRIC_TOTAL_GAMES, &value, &se) == HBSIM_OK);
  CHECK(value == 276.0);
  CHECK(se == 0.0);
  CHECK(hbsim_report_metric(rr, HBSIM_METRIC_MIN_GAMES, &value, nullptr) == HBSIM_OK);
  CHECK(value == 23.0);
  CHECK(hbsim_report_metric(ko, HBSIM_METRIC_MIN_GAMES, &value, nullptr) == HBSIM_OK);
  CHECK(value == 5.0);
  CHECK(hbsim_report_metric(ko, HBSIM_METRIC_MAX_GAMES, &value, nullptr) == HBSIM_OK);
  CHECK(value == 9.0);

  CHECK(hbsim_report_metric(ko, HBSIM_METRIC_WIN_TOP1, &value, &se) == HBSIM_OK);
  CHECK(value > 0.0);
  CHECK(value < 1.0);
  CHECK(se > 0.0);
  CHECK(hbsim_report_metric(ko, HBSIM_METRIC_FINAL_QUALITY, &value, &se) == HBSIM_OK);
  CHECK(value >= 3.0);
  CHECK(hbsim_report_metric(ko, HBSIM_METRIC_MAX_SEMIFINAL_RANK, &value, nullptr) == HBSIM_OK);
  CHECK(value >= 4.0);

  // Final metrics have no meaning for a pure round robin.
  value = -1;
  CHECK(hbsim_report_metric(rr, HBSIM_METRIC_FINAL_QUALITY, &value, nullptr) ==
        HBSIM_ERR_ARGUMENT);
  CHECK(value == -1);  // outputs untouched on failure
  CHECK(std::string(hbsim_last_error()).find("final") != std::string::npos);
  CHECK(hbsim_report_metric(rr, HBSIM_METRIC_BOTH_TOP_TWO_FINAL, nullptr, nullptr) ==
        HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_report_metric(ko, hbsim_metric(15), &value, nullptr) == HBSIM_ERR_ARGUMENT);
}

TEST_CASE("series queries fill 24 slots with guards intact") {
  ResultsHandle results(run_pair(600, 21));
  const hbsim_report* rr = hbsim_results_find(results, "rr", nullptr);
  const hbsim_report* ko = hbsim_results_find(results, "ko", "seeded");

  std::array<double, 24> values{}, errors{};
  CHECK(hbsim_report_series(ko, HBSIM_SERIES_WIN_BEST_P, values.data(), errors.data()) ==
        HBSIM_OK);
  for (int p = 1; p < 24; ++p) CHECK(values[p] >= values[p - 1]);
  CHECK(values[23] == 1.0);
  CHECK(errors[23] == 0.0);

  CHECK(hbsim_report_series(ko, HBSIM_SERIES_FINAL_REACH_BEST_P, values.data(), nullptr) ==
        HBSIM_OK);
  CHECK(values[23] == 1.0);
  CHECK(hbsim_report_series(rr, HBSIM_SERIES_FINAL_REACH_BEST_P, values.data(), nullptr) ==
        HBSIM_ERR_ARGUMENT);

  CHECK(hbsim_report_series(rr, HBSIM_SERIES_PLACEMENT_1, values.data(), nullptr) == HBSIM_OK);
  double sum = 0;
  for (double v : values) sum += v;
  CHECK(sum == doctest::Approx(1.0));
  CHECK(hbsim_report_series(rr, hbsim_series(7), values.data(), nullptr) == HBSIM_ERR_ARGUMENT);
}

TEST_CASE("diffs compare reports of one experiment only") {
  ResultsHandle results(run_pair(600, 21));
  const hbsim_report* rr = hbsim_results_find(results, "rr", nullptr);
  const hbsim_report* ko = hbsim_results_find(results, "ko", "seeded");

  std::array<double, 24> out{};
  CHECK(hbsim_diff_win_best_p(ko, rr, out.data()) == HBSIM_OK);
  CHECK(out[23] == 0.0);  // both series end at 1
  for (double d : out) {
    CHECK(d >= -1.0);
    CHECK(d <= 1.0);
  }
  CHECK(hbsim_diff_placement(ko, rr, 1, out.data()) == HBSIM_OK);
  CHECK(hbsim_diff_placement(ko, rr, 0, out.data()) == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_diff_placement(ko, rr, 5, out.data()) == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_diff_win_best_p(ko, nullptr, out.data()) == HBSIM_ERR_ARGUMENT);

  // A different run count is a different experiment.
  ResultsHandle other(run_pair(500, 21));
  const hbsim_report* other_ko = hbsim_results_find(other, "ko", "seeded");
  CHECK(hbsim_diff_win_best_p(ko, other_ko, out.data()) == HBSIM_ERR_ARGUMENT);
}

TEST_CASE("match count queries mirror the fixed schedules") {
  uint32_t counts[24];
  REQUIRE(hbsim_match_counts("ko", counts) == HBSIM_OK);
  uint32_t expect[24] = {};
  expect[5] = 8;
  expect[6] = 8;
  expect[7] = 4;
  expect[9] = 4;
  for (int m = 0; m < 24; ++m) CHECK(counts[m] == expect[m]);

  REQUIRE(hbsim_match_counts("rr", counts) == HBSIM_OK);
  CHECK(counts[23] == 24);
  CHECK(hbsim_match_counts("nope", counts) == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_match_counts(nullptr, counts) == HBSIM_ERR_ARGUMENT);
}

TEST_CASE("format descriptions serialize to parseable JSON") {
  const int needed = hbsim_format_describe("g66", nullptr, 0);
  REQUIRE(needed > 0);

  std::vector<char> buf(std::size_t(needed) + 1, '\x7f');
  CHECK(hbsim_format_describe("g66", buf.data(), buf.size()) == needed);
  CHECK(buf[std::size_t(needed)] == '\0');

  const auto j = nlohmann::json::parse(buf.data());
  CHECK(j.at("name") == "g66");
  CHECK(j.at("total_matches") == 82);
  CHECK(j.at("prelim").at("groups") == 4);
  CHECK(j.at("main").at("size") == 6);
  CHECK(j.at("bracket").size() == 4);

  // Truncation still reports the full length and terminates the buffer.
  char small[8];
  CHECK(hbsim_format_describe("g66", small, sizeof small) == needed);
  CHECK(small[7] == '\0');
  CHECK(std::strlen(small) == 7);

  CHECK(hbsim_format_describe("bogus", nullptr, 0) == -1);
  CHECK(hbsim_format_describe(nullptr, nullptr, 0) == -1);
}

TEST_CASE("convergence snapshots run through the C surface") {
  ConfigHandle config;
  REQUIRE(hbsim_config_set_seed(config, 5) == HBSIM_OK);
  REQUIRE(hbsim_config_set_threads(config, 1) == HBSIM_OK);
  REQUIRE(hbsim_config_add_design(config, "ko", "random") == HBSIM_OK);

  const uint64_t checkpoints[2] = {200, 400};
  double win[2] = {-1, -1};
  double both[2] = {-1, -1};
  REQUIRE(hbsim_convergence(config, checkpoints, 2, win, both) == HBSIM_OK);
  for (double v : win) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK(hbsim_convergence(config, checkpoints, 2, win, nullptr) == HBSIM_OK);

  const uint64_t bad[2] = {400, 200};
  CHECK(hbsim_convergence(config, bad, 2, win, both) == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_convergence(config, checkpoints, 0, win, both) == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_convergence(nullptr, checkpoints, 2, win, both) == HBSIM_ERR_ARGUMENT);

  REQUIRE(hbsim_config_add_design(config, "g66", "random") == HBSIM_OK);
  CHECK(hbsim_convergence(config, checkpoints, 2, win, both) == HBSIM_ERR_ARGUMENT);
}

TEST_CASE("validation battery crosses the C surface intact") {
  hbsim_validation* validation = hbsim_validate(400, 2, 1);
  REQUIRE(validation != nullptr);
  CHECK(hbsim_validation_count(validation) == 17);
  for (int i = 0; i < 17; ++i) {
    CHECK(hbsim_validation_name(validation, i)[0] != '\0');
    const int passed = hbsim_validation_passed(validation, i);
    CHECK((passed == 0 || passed == 1));
  }
  CHECK(hbsim_validation_passed(validation, 17) == -1);
  CHECK(hbsim_validation_passed(validation, -1) == -1);
  CHECK(std::string(hbsim_validation_name(validation, 17)).empty());

  double observed = -1, expected = -1, tolerance = -1;
  CHECK(hbsim_validation_values(validation, 0, &observed, &expected, &tolerance) == HBSIM_OK);
  CHECK(tolerance > 0.0);
  CHECK(hbsim_validation_values(validation, 17, &observed, &expected, &tolerance) ==
        HBSIM_ERR_ARGUMENT);
  hbsim_validation_free(validation);
}

TEST_CASE("bad configuration is reported not executed") {
  CHECK(hbsim_config_set_runs(nullptr, 10) == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_run(nullptr) == nullptr);

  ConfigHandle config;
  CHECK(hbsim_config_set_strength(config, -1.0, 24.0) == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_config_set_runs(config, 0) == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_config_add_design(config, "xx", "seeded") == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_config_add_design(config, "ko", "sorted") == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_config_add_design(config, nullptr, "seeded") == HBSIM_ERR_ARGUMENT);
  CHECK(hbsim_last_error()[0] != '\0');

  // No designs at all: the run itself fails.
  CHECK(hbsim_run(config) == nullptr);
  CHECK(hbsim_last_error()[0] != '\0');

  REQUIRE(hbsim_config_add_design(config, "ko", "seeded") == HBSIM_OK);
  REQUIRE(hbsim_config_add_design(config, "ko", "seeded") == HBSIM_OK);
  CHECK(hbsim_run(config) == nullptr);  // duplicate design
}
