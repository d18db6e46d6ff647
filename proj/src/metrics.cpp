#include "handballsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hbsim {

void MetricAccumulator::add(const TournamentResult& r) {
  runs += 1;
  const int places[4] = {r.champion, r.runner_up, r.third, r.fourth};
  for (int p = 0; p < 4; ++p) {
    place_count[p][places[p] - 1] += 1;
    rank_sum[p] += places[p];
    rank_sq[p] += std::uint64_t(places[p]) * places[p];
  }
  if (!r.has_final) return;
  final_runs += 1;
  const int lo = std::min(r.champion, r.runner_up);
  const int hi = std::max(r.champion, r.runner_up);
  min_finalist_count[lo - 1] += 1;
  if (lo == 1 && hi == 2) both_top_two_final += 1;
  const std::uint64_t quality = std::uint64_t(lo) + hi;
  const std::uint64_t balance = std::uint64_t(hi) - lo;
  quality_sum += quality;
  quality_sq += quality * quality;
  balance_sum += balance;
  balance_sq += balance * balance;
  for (const auto& sf : r.semifinals) {
    if (std::min(sf[0], sf[1]) == 1 && std::max(sf[0], sf[1]) == 2) top_pair_semifinal += 1;
    max_semifinal_rank = std::max({max_semifinal_rank, sf[0], sf[1]});
  }
}

void MetricAccumulator::merge(const MetricAccumulator& o) {
  runs += o.runs;
  final_runs += o.final_runs;
  for (int p = 0; p < 4; ++p) {
    for (int t = 0; t < kTeams; ++t) place_count[p][t] += o.place_count[p][t];
    rank_sum[p] += o.rank_sum[p];
    rank_sq[p] += o.rank_sq[p];
  }
  for (int t = 0; t < kTeams; ++t) min_finalist_count[t] += o.min_finalist_count[t];
  quality_sum += o.quality_sum;
  quality_sq += o.quality_sq;
  balance_sum += o.balance_sum;
  balance_sq += o.balance_sq;
  both_top_two_final += o.both_top_two_final;
  top_pair_semifinal += o.top_pair_semifinal;
  max_semifinal_rank = std::max(max_semifinal_rank, o.max_semifinal_rank);
}

double MetricsReport::se(double p) const {
  if (runs == 0) return 0.0;
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / double(runs));
}

namespace {

double mean_se(std::uint64_t sum, std::uint64_t sq, std::uint64_t n) {
  if (n < 2) return 0.0;
  const double mean = double(sum) / double(n);
  const double var = (double(sq) - double(n) * mean * mean) / double(n - 1);
  return std::sqrt(std::max(0.0, var) / double(n));
}

}  // namespace

MetricsReport finalize(const MetricAccumulator& acc, FormatId format, SeedingPolicy policy,
                       double alpha, double beta) {
  if (acc.runs == 0) throw std::invalid_argument("cannot finalize an empty accumulator");
  if (acc.final_runs != 0 && acc.final_runs != acc.runs)
    throw std::invalid_argument("mixed results with and without finals in one accumulator");

  MetricsReport r;
  const FormatSpec& spec = format_spec(format);
  r.format = spec.name;
  r.seeding = spec.prelim.groups > 1 ? std::string(seeding_name(policy)) : std::string();
  r.alpha = alpha;
  r.beta = beta;
  r.runs = acc.runs;
  r.has_final = acc.final_runs == acc.runs;

  const double n = double(acc.runs);
  std::uint64_t champion_cum = 0, reach_cum = 0;
  for (int t = 0; t < kTeams; ++t) {
    champion_cum += acc.place_count[0][t];
    r.win_best_p[t] = double(champion_cum) / n;
    if (r.has_final) {
      reach_cum += acc.min_finalist_count[t];
      r.final_reach_best_p[t] = double(reach_cum) / n;
    }
    for (int p = 0; p < 4; ++p) r.placement[t][p] = double(acc.place_count[p][t]) / n;
  }
  for (int p = 0; p < 4; ++p) {
    r.avg_rank[p] = double(acc.rank_sum[p]) / n;
    r.avg_rank_se[p] = mean_se(acc.rank_sum[p], acc.rank_sq[p], acc.runs);
  }
  if (r.has_final) {
    r.final_quality = double(acc.quality_sum) / n;
    r.final_quality_se = mean_se(acc.quality_sum, acc.quality_sq, acc.runs);
    r.final_balance = double(acc.balance_sum) / n;
    r.final_balance_se = mean_se(acc.balance_sum, acc.balance_sq, acc.runs);
    r.both_top_two_final = double(acc.both_top_two_final) / n;
    r.top_pair_semifinal = double(acc.top_pair_semifinal) / n;
    r.max_semifinal_rank = acc.max_semifinal_rank;
  }

  const auto dist = match_count_distribution(format);
  r.min_games = dist.begin()->first;
  r.max_games = dist.rbegin()->first;
  r.total_games = spec.total_matches;
  return r;
}

namespace {

void check_comparable(const MetricsReport& a, const MetricsReport& b) {
  if (a.alpha != b.alpha || a.beta != b.beta)
    throw std::invalid_argument("reports use different strength parameters");
  if (a.runs != b.runs)
    throw std::invalid_argument("reports use different run counts");
}

}  // namespace

std::array<double, kTeams> diff_win_best_p(const MetricsReport& report,
                                           const MetricsReport& reference) {
  check_comparable(report, reference);
  std::array<double, kTeams> d{};
  for (int t = 0; t < kTeams; ++t) d[t] = report.win_best_p[t] - reference.win_best_p[t];
  return d;
}

std::array<std::array<double, 4>, kTeams> diff_placement(const MetricsReport& report,
                                                         const MetricsReport& reference) {
  check_comparable(report, reference);
  std::array<std::array<double, 4>, kTeams> d{};
  for (int t = 0; t < kTeams; ++t)
    for (int p = 0; p < 4; ++p) d[t][p] = report.placement[t][p] - reference.placement[t][p];
  return d;
}

}  // namespace hbsim
