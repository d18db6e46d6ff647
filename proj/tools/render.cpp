#include "render.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace render {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string integer(double v) { return std::to_string(long(v + 0.5)); }

struct SummaryRow {
  const char* label;
  hbsim_metric metric;
  bool is_count;
};

constexpr SummaryRow kSummaryRows[] = {
    {"min_games", HBSIM_METRIC_MIN_GAMES, true},
    {"max_games", HBSIM_METRIC_MAX_GAMES, true},
    {"total_games", HBSIM_METRIC_TOTAL_GAMES, true},
    {"avg_rank_1", HBSIM_METRIC_AVG_RANK_1, false},
    {"avg_rank_2", HBSIM_METRIC_AVG_RANK_2, false},
    {"avg_rank_3", HBSIM_METRIC_AVG_RANK_3, false},
    {"avg_rank_4", HBSIM_METRIC_AVG_RANK_4, false},
    {"win_top1", HBSIM_METRIC_WIN_TOP1, false},
    {"final_quality", HBSIM_METRIC_FINAL_QUALITY, false},
    {"final_balance", HBSIM_METRIC_FINAL_BALANCE, false},
};

}  // namespace

std::string cell_label(const hbsim_report* report) {
  std::string label = hbsim_report_format(report);
  for (auto& c : label) c = char(std::toupper(unsigned(c)));
  const std::string seeding = hbsim_report_seeding(report);
  if (!seeding.empty()) label += seeding == "seeded" ? "/S" : "/R";
  return label;
}

std::string summary_table(const std::vector<const hbsim_report*>& reports,
                          const std::string& heading) {
  constexpr int width = 9;
  std::ostringstream out;
  if (!heading.empty()) out << heading << "\n";
  out << std::string(14, ' ');
  for (const auto* r : reports) {
    const std::string label = cell_label(r);
    out << std::string(width - label.size(), ' ') << label;
  }
  out << "\n";
  for (const auto& row : kSummaryRows) {
    out << row.label << std::string(14 - std::string(row.label).size(), ' ');
    for (const auto* r : reports) {
      double v = 0;
      std::string cell = hbsim_report_metric(r, row.metric, &v, nullptr) == HBSIM_OK
                             ? (row.is_count ? integer(v) : fixed(v, 2))
                             : std::string("-");
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

std::string summary_csv(const std::vector<const hbsim_report*>& reports) {
  std::ostringstream out;
  out << "metric";
  for (const auto* r : reports) out << "," << cell_label(r);
  out << "\n";
  for (const auto& row : kSummaryRows) {
    out << row.label;
    for (const auto* r : reports) {
      double v = 0;
      out << ",";
      if (hbsim_report_metric(r, row.metric, &v, nullptr) == HBSIM_OK)
        out << (row.is_count ? integer(v) : fixed(v, 6));
    }
    out << "\n";
  }
  return out.str();
}

std::string report_csv(const hbsim_report* report) {
  std::ostringstream out;
  const std::string runs = std::to_string(hbsim_report_runs(report));
  out << "metric,value,std_error,runs\n";
  for (const auto& row : kSummaryRows) {
    double v = 0, se = 0;
    if (hbsim_report_metric(report, row.metric, &v, &se) != HBSIM_OK) continue;
    out << row.label << ",";
    if (row.is_count)
      out << integer(v) << ",";
    else
      out << fixed(v, 6) << "," << fixed(se, 6);
    out << "," << runs << "\n";
  }
  for (hbsim_metric extra : {HBSIM_METRIC_BOTH_TOP_TWO_FINAL, HBSIM_METRIC_TOP_PAIR_SEMIFINAL}) {
    double v = 0, se = 0;
    if (hbsim_report_metric(report, extra, &v, &se) != HBSIM_OK) continue;
    out << (extra == HBSIM_METRIC_BOTH_TOP_TWO_FINAL ? "both_top_two_final"
                                                     : "top_pair_semifinal")
        << "," << fixed(v, 6) << "," << fixed(se, 6) << "," << runs << "\n";
  }
  double values[24], errors[24];
  if (hbsim_report_series(report, HBSIM_SERIES_WIN_BEST_P, values, errors) == HBSIM_OK)
    for (int p = 0; p < 24; ++p)
      out << "win_best_" << p + 1 << "," << fixed(values[p], 6) << "," << fixed(errors[p], 6)
          << "," << runs << "\n";
  if (hbsim_report_series(report, HBSIM_SERIES_FINAL_REACH_BEST_P, values, errors) == HBSIM_OK)
    for (int p = 0; p < 24; ++p)
      out << "final_reach_" << p + 1 << "," << fixed(values[p], 6) << "," << fixed(errors[p], 6)
          << "," << runs << "\n";
  for (int place = 0; place < 4; ++place) {
    if (hbsim_report_series(report, hbsim_series(HBSIM_SERIES_PLACEMENT_1 + place), values,
                            errors) != HBSIM_OK)
      continue;
    for (int t = 0; t < 24; ++t)
      out << "placement_r" << t + 1 << "_p" << place + 1 << "," << fixed(values[t], 6) << ","
          << fixed(errors[t], 6) << "," << runs << "\n";
  }
  return out.str();
}

std::string report_json(const hbsim_report* report) {
  std::ostringstream out;
  const auto series = [&](hbsim_series s) {
    std::string text = "[";
    double values[24];
    if (hbsim_report_series(report, s, values, nullptr) == HBSIM_OK)
      for (int i = 0; i < 24; ++i) text += (i != 0 ? "," : "") + fixed(values[i], 6);
    return text + "]";
  };
  out << "{\n";
  out << "  \"format\": \"" << hbsim_report_format(report) << "\",\n";
  out << "  \"seeding\": \"" << hbsim_report_seeding(report) << "\",\n";
  out << "  \"runs\": " << hbsim_report_runs(report) << ",\n";
  out << "  \"has_final\": " << (hbsim_report_has_final(report) ? "true" : "false") << ",\n";
  out << "  \"metrics\": {";
  bool first = true;
  for (const auto& row : kSummaryRows) {
    double v = 0, se = 0;
    if (hbsim_report_metric(report, row.metric, &v, &se) != HBSIM_OK) continue;
    out << (first ? "" : ",") << "\n    \"" << row.label << "\": {\"value\": "
        << (row.is_count ? integer(v) : fixed(v, 6)) << ", \"std_error\": " << fixed(se, 6)
        << "}";
    first = false;
  }
  out << "\n  },\n";
  out << "  \"win_best_p\": " << series(HBSIM_SERIES_WIN_BEST_P);
  if (hbsim_report_has_final(report))
    out << ",\n  \"final_reach_best_p\": " << series(HBSIM_SERIES_FINAL_REACH_BEST_P);
  out << ",\n  \"placement\": [";
  for (int place = 0; place < 4; ++place)
    out << (place != 0 ? ", " : "") << series(hbsim_series(HBSIM_SERIES_PLACEMENT_1 + place));
  out << "]\n}\n";
  return out.str();
}

std::string win_best_p_csv(const std::vector<const hbsim_report*>& reports, int max_p) {
  std::ostringstream out;
  out << "p";
  for (const auto* r : reports) out << "," << hbsim_report_format(r);
  out << "\n";
  std::vector<std::array<double, 24>> columns(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    hbsim_report_series(reports[i], HBSIM_SERIES_WIN_BEST_P, columns[i].data(), nullptr);
  for (int p = 1; p <= max_p; ++p) {
    out << p;
    for (const auto& col : columns) out << "," << fixed(col[p - 1], 6);
    out << "\n";
  }
  return out.str();
}

std::string win_diff_vs_rr_csv(const std::vector<const hbsim_report*>& reports,
                               const hbsim_report* rr, int max_p) {
  std::ostringstream out;
  out << "p";
  for (const auto* r : reports) out << "," << hbsim_report_format(r);
  out << "\n";
  std::vector<std::array<double, 24>> columns(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (hbsim_diff_win_best_p(reports[i], rr, columns[i].data()) != HBSIM_OK)
      columns[i].fill(0.0);
  for (int p = 1; p <= max_p; ++p) {
    out << p;
    for (const auto& col : columns) out << "," << fixed(col[p - 1], 6);
    out << "\n";
  }
  return out.str();
}

std::string final_reach_csv(const std::vector<const hbsim_report*>& reports, int max_p) {
  std::ostringstream out;
  out << "p";
  for (const auto* r : reports) out << "," << hbsim_report_format(r);
  out << "\n";
  std::vector<std::array<double, 24>> columns(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (hbsim_report_series(reports[i], HBSIM_SERIES_FINAL_REACH_BEST_P, columns[i].data(),
                            nullptr) != HBSIM_OK)
      columns[i].fill(0.0);
  for (int p = 1; p <= max_p; ++p) {
    out << p;
    for (const auto& col : columns) out << "," << fixed(col[p - 1], 6);
    out << "\n";
  }
  return out.str();
}

std::string placement_diff_csv(const std::vector<const hbsim_report*>& reports,
                               const hbsim_report* reference) {
  std::ostringstream out;
  out << "design,rank,place1,place2,place3,place4\n";
  for (const auto* r : reports) {
    std::array<std::array<double, 24>, 4> diff{};
    bool ok = true;
    for (int place = 1; place <= 4 && ok; ++place)
      ok = hbsim_diff_placement(r, reference, place, diff[place - 1].data()) == HBSIM_OK;
    if (!ok) continue;
    for (int t = 0; t < 24; ++t) {
      out << hbsim_report_format(r) << "," << t + 1;
      for (int place = 0; place < 4; ++place) out << "," << fixed(diff[place][t] * 100.0, 6);
      out << "\n";
    }
  }
  return out.str();
}

std::string convergence_csv(const std::vector<uint64_t>& checkpoints,
                            const std::vector<double>& win_top1,
                            const std::vector<double>& both_top_two) {
  std::ostringstream out;
  out << "runs,win_top1,both_top_two\n";
  for (std::size_t i = 0; i < checkpoints.size(); ++i)
    out << checkpoints[i] << "," << fixed(win_top1[i], 6) << "," << fixed(both_top_two[i], 6)
        << "\n";
  return out.str();
}

}  // namespace render
