#include "handballsim/hbsim.h"

#include <cstring>
#include <string>
#include <vector>

#include "handballsim/error.hpp"
#include "handballsim/formats.hpp"
#include "handballsim/metrics.hpp"
#include "handballsim/simulate.hpp"

using namespace hbsim;

extern "C" {

struct hbsim_config {
  SimulationConfig config;
};

struct hbsim_report {
  MetricsReport report;
};

struct hbsim_results {
  std::vector<hbsim_report> reports;
};

struct hbsim_validation {
  std::vector<ValidationCheck> checks;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error = "no error";

hbsim_status set_error(hbsim_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <class Fn>
hbsim_status guarded(Fn&& fn) {
  try {
    fn();
    return HBSIM_OK;
  } catch (const StructuralError& e) {
    return set_error(HBSIM_ERR_STRUCTURE, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(HBSIM_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(HBSIM_ERR_INTERNAL, e.what());
  }
}

const MetricsReport* unwrap(const hbsim_report* report) {
  return report != nullptr ? &report->report : nullptr;
}

}  // namespace

extern "C" {

const char* hbsim_last_error(void) { return g_last_error.c_str(); }

hbsim_config* hbsim_config_new(void) {
  auto* config = new (std::nothrow) hbsim_config;
  if (config != nullptr) config->config.designs.clear();
  return config;
}

void hbsim_config_free(hbsim_config* config) { delete config; }

hbsim_status hbsim_config_set_strength(hbsim_config* config, double alpha, double beta) {
  if (config == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null config");
  return guarded([&] {
    probability_matrix({alpha, beta});  // validates
    config->config.params = {alpha, beta};
  });
}

hbsim_status hbsim_config_set_deterministic(hbsim_config* config, int enabled) {
  if (config == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null config");
  config->config.deterministic = enabled != 0;
  return HBSIM_OK;
}

hbsim_status hbsim_config_set_runs(hbsim_config* config, uint64_t runs) {
  if (config == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null config");
  if (runs == 0) return set_error(HBSIM_ERR_ARGUMENT, "run count must be positive");
  config->config.runs = runs;
  return HBSIM_OK;
}

hbsim_status hbsim_config_set_seed(hbsim_config* config, uint64_t seed) {
  if (config == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null config");
  config->config.seed = seed;
  return HBSIM_OK;
}

hbsim_status hbsim_config_set_threads(hbsim_config* config, unsigned threads) {
  if (config == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null config");
  config->config.threads = threads;
  return HBSIM_OK;
}

hbsim_status hbsim_config_add_design(hbsim_config* config, const char* format,
                                     const char* seeding) {
  if (config == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null config");
  if (format == nullptr || seeding == nullptr)
    return set_error(HBSIM_ERR_ARGUMENT, "null design name");
  return guarded([&] {
    config->config.designs.push_back({format_from_name(format), seeding_from_name(seeding)});
  });
}

hbsim_results* hbsim_run(const hbsim_config* config) {
  if (config == nullptr) {
    set_error(HBSIM_ERR_ARGUMENT, "null config");
    return nullptr;
  }
  hbsim_results* results = nullptr;
  const hbsim_status status = guarded([&] {
    auto reports = run_experiment(config->config);
    results = new hbsim_results;
    results->reports.reserve(reports.size());
    for (auto& r : reports) results->reports.push_back({std::move(r)});
  });
  return status == HBSIM_OK ? results : nullptr;
}

void hbsim_results_free(hbsim_results* results) { delete results; }

int hbsim_results_count(const hbsim_results* results) {
  return results != nullptr ? int(results->reports.size()) : 0;
}

const hbsim_report* hbsim_results_report(const hbsim_results* results, int index) {
  if (results == nullptr || index < 0 || index >= int(results->reports.size())) return nullptr;
  return &results->reports[index];
}

const hbsim_report* hbsim_results_find(const hbsim_results* results, const char* format,
                                       const char* seeding) {
  if (results == nullptr || format == nullptr) return nullptr;
  for (const auto& wrapped : results->reports) {
    if (wrapped.report.format != format) continue;
    if (wrapped.report.seeding.empty() || seeding == nullptr ||
        wrapped.report.seeding == seeding)
      return &wrapped;
  }
  return nullptr;
}

const char* hbsim_report_format(const hbsim_report* report) {
  const auto* r = unwrap(report);
  return r != nullptr ? r->format.c_str() : "";
}

const char* hbsim_report_seeding(const hbsim_report* report) {
  const auto* r = unwrap(report);
  return r != nullptr ? r->seeding.c_str() : "";
}

uint64_t hbsim_report_runs(const hbsim_report* report) {
  const auto* r = unwrap(report);
  return r != nullptr ? r->runs : 0;
}

int hbsim_report_has_final(const hbsim_report* report) {
  const auto* r = unwrap(report);
  return r != nullptr && r->has_final ? 1 : 0;
}

hbsim_status hbsim_report_metric(const hbsim_report* report, hbsim_metric metric, double* value,
                                 double* std_error) {
  const auto* r = unwrap(report);
  if (r == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null report");
  double v = 0, se = 0;
  switch (metric) {
    case HBSIM_METRIC_AVG_RANK_1:
    case HBSIM_METRIC_AVG_RANK_2:
    case HBSIM_METRIC_AVG_RANK_3:
    case HBSIM_METRIC_AVG_RANK_4: {
      const int place = int(metric) - int(HBSIM_METRIC_AVG_RANK_1);
      v = r->avg_rank[place];
      se = r->avg_rank_se[place];
      break;
    }
    case HBSIM_METRIC_WIN_TOP1:
      v = r->win_best_p[0];
      se = r->se(v);
      break;
    case HBSIM_METRIC_FINAL_QUALITY:
    case HBSIM_METRIC_FINAL_BALANCE:
    case HBSIM_METRIC_BOTH_TOP_TWO_FINAL:
    case HBSIM_METRIC_TOP_PAIR_SEMIFINAL:
    case HBSIM_METRIC_MAX_SEMIFINAL_RANK:
      if (!r->has_final) return set_error(HBSIM_ERR_ARGUMENT, "design has no final");
      switch (metric) {
        case HBSIM_METRIC_FINAL_QUALITY:
          v = r->final_quality;
          se = r->final_quality_se;
          break;
        case HBSIM_METRIC_FINAL_BALANCE:
          v = r->final_balance;
          se = r->final_balance_se;
          break;
        case HBSIM_METRIC_BOTH_TOP_TWO_FINAL:
          v = r->both_top_two_final;
          se = r->se(v);
          break;
        case HBSIM_METRIC_TOP_PAIR_SEMIFINAL:
          v = r->top_pair_semifinal;
          se = r->se(v);
          break;
        default:
          v = double(r->max_semifinal_rank);
          break;
      }
      break;
    case HBSIM_METRIC_MIN_GAMES: v = r->min_games; break;
    case HBSIM_METRIC_MAX_GAMES: v = r->max_games; break;
    case HBSIM_METRIC_TOTAL_GAMES: v = r->total_games; break;
    default:
      return set_error(HBSIM_ERR_ARGUMENT, "unknown metric");
  }
  if (value != nullptr) *value = v;
  if (std_error != nullptr) *std_error = se;
  return HBSIM_OK;
}

hbsim_status hbsim_report_series(const hbsim_report* report, hbsim_series series, double* values,
                                 double* std_errors) {
  const auto* r = unwrap(report);
  if (r == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null report");
  const double* src = nullptr;
  std::array<double, kTeams> scratch{};
  switch (series) {
    case HBSIM_SERIES_WIN_BEST_P: src = r->win_best_p.data(); break;
    case HBSIM_SERIES_FINAL_REACH_BEST_P:
      if (!r->has_final) return set_error(HBSIM_ERR_ARGUMENT, "design has no final");
      src = r->final_reach_best_p.data();
      break;
    case HBSIM_SERIES_PLACEMENT_1:
    case HBSIM_SERIES_PLACEMENT_2:
    case HBSIM_SERIES_PLACEMENT_3:
    case HBSIM_SERIES_PLACEMENT_4: {
      const int place = int(series) - int(HBSIM_SERIES_PLACEMENT_1);
      for (int t = 0; t < kTeams; ++t) scratch[t] = r->placement[t][place];
      src = scratch.data();
      break;
    }
    default:
      return set_error(HBSIM_ERR_ARGUMENT, "unknown series");
  }
  for (int t = 0; t < kTeams; ++t) {
    if (values != nullptr) values[t] = src[t];
    if (std_errors != nullptr) std_errors[t] = r->se(src[t]);
  }
  return HBSIM_OK;
}

hbsim_status hbsim_diff_win_best_p(const hbsim_report* report, const hbsim_report* reference,
                                   double* out) {
  const auto* a = unwrap(report);
  const auto* b = unwrap(reference);
  if (a == nullptr || b == nullptr || out == nullptr)
    return set_error(HBSIM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto d = diff_win_best_p(*a, *b);
    std::memcpy(out, d.data(), sizeof(double) * kTeams);
  });
}

hbsim_status hbsim_diff_placement(const hbsim_report* report, const hbsim_report* reference,
                                  int place, double* out) {
  const auto* a = unwrap(report);
  const auto* b = unwrap(reference);
  if (a == nullptr || b == nullptr || out == nullptr)
    return set_error(HBSIM_ERR_ARGUMENT, "null argument");
  if (place < 1 || place > 4) return set_error(HBSIM_ERR_ARGUMENT, "place outside 1..4");
  return guarded([&] {
    const auto d = diff_placement(*a, *b);
    for (int t = 0; t < kTeams; ++t) out[t] = d[t][place - 1];
  });
}

hbsim_status hbsim_match_counts(const char* format, uint32_t out[24]) {
  if (format == nullptr || out == nullptr) return set_error(HBSIM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto dist = match_count_distribution(format_from_name(format));
    for (int m = 0; m < kTeams; ++m) out[m] = 0;
    for (const auto& [games, teams] : dist) out[games] = std::uint32_t(teams);
  });
}

int hbsim_format_describe(const char* format, char* buf, size_t cap) {
  if (format == nullptr) {
    set_error(HBSIM_ERR_ARGUMENT, "null format");
    return -1;
  }
  std::string text;
  const hbsim_status status =
      guarded([&] { text = format_to_json(format_spec(format_from_name(format))); });
  if (status != HBSIM_OK) return -1;
  if (buf != nullptr && cap > 0) {
    const size_t n = std::min(cap - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return int(text.size());
}

hbsim_status hbsim_convergence(const hbsim_config* config, const uint64_t* checkpoints, int n,
                               double* win_top1, double* both_top_two) {
  if (config == nullptr || checkpoints == nullptr || n <= 0)
    return set_error(HBSIM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const std::vector<std::uint64_t> cps(checkpoints, checkpoints + n);
    const auto points = convergence_trace(config->config, cps);
    for (int i = 0; i < n; ++i) {
      if (win_top1 != nullptr) win_top1[i] = points[i].win_top1;
      if (both_top_two != nullptr) both_top_two[i] = points[i].both_top_two;
    }
  });
}

hbsim_validation* hbsim_validate(uint64_t runs, uint64_t seed, unsigned threads) {
  hbsim_validation* validation = nullptr;
  const hbsim_status status = guarded([&] {
    auto checks = run_validation(runs, seed, threads);
    validation = new hbsim_validation{std::move(checks)};
  });
  return status == HBSIM_OK ? validation : nullptr;
}

void hbsim_validation_free(hbsim_validation* validation) { delete validation; }

int hbsim_validation_count(const hbsim_validation* validation) {
  return validation != nullptr ? int(validation->checks.size()) : 0;
}

int hbsim_validation_passed(const hbsim_validation* validation, int index) {
  if (validation == nullptr || index < 0 || index >= int(validation->checks.size())) return -1;
  return validation->checks[index].pass ? 1 : 0;
}

const char* hbsim_validation_name(const hbsim_validation* validation, int index) {
  if (validation == nullptr || index < 0 || index >= int(validation->checks.size())) return "";
  return validation->checks[index].name.c_str();
}

hbsim_status hbsim_validation_values(const hbsim_validation* validation, int index,
                                     double* observed, double* expected, double* tolerance) {
  if (validation == nullptr || index < 0 || index >= int(validation->checks.size()))
    return set_error(HBSIM_ERR_ARGUMENT, "validation index out of range");
  const auto& check = validation->checks[index];
  if (observed != nullptr) *observed = check.observed;
  if (expected != nullptr) *expected = check.expected;
  if (tolerance != nullptr) *tolerance = check.tolerance;
  return HBSIM_OK;
}

}  // extern "C"
