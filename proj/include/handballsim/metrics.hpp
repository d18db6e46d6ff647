#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "handballsim/engine.hpp"
#include "handballsim/formats.hpp"

namespace hbsim {

// Integer tallies over tournament results. Exact under merging: combining
// accumulators in any order yields the same report.
struct MetricAccumulator {
  std::uint64_t runs = 0;
  std::uint64_t final_runs = 0;  // results that ended with a final
  std::array<std::array<std::uint64_t, kTeams>, 4> place_count{};  // [place][rank-1]
  std::array<std::uint64_t, kTeams> min_finalist_count{};          // [rank-1]
  std::array<std::uint64_t, 4> rank_sum{}, rank_sq{};
  std::uint64_t quality_sum = 0, quality_sq = 0;
  std::uint64_t balance_sum = 0, balance_sq = 0;
  std::uint64_t both_top_two_final = 0;    // finalists are exactly ranks 1 and 2
  std::uint64_t top_pair_semifinal = 0;    // ranks 1 and 2 paired in a semifinal
  int max_semifinal_rank = 0;

  void add(const TournamentResult& result);
  void merge(const MetricAccumulator& other);
};

struct MetricsReport {
  std::string format;
  std::string seeding;  // empty when the design has no draw to seed
  double alpha = 0, beta = 0;
  std::uint64_t runs = 0;
  bool has_final = false;

  // Cumulative by p: probability the champion is among the best p, and that
  // at least one of the best p reaches the final. Non-decreasing, ending at 1.
  std::array<double, kTeams> win_best_p{};
  std::array<double, kTeams> final_reach_best_p{};

  std::array<double, 4> avg_rank{}, avg_rank_se{};
  std::array<std::array<double, 4>, kTeams> placement{};  // [rank-1][place]
  double final_quality = 0, final_quality_se = 0;   // sum of finalist ranks
  double final_balance = 0, final_balance_se = 0;   // absolute finalist rank gap
  double both_top_two_final = 0;
  double top_pair_semifinal = 0;
  int max_semifinal_rank = 0;

  int min_games = 0, max_games = 0, total_games = 0;

  // Binomial standard error for any proportion in this report.
  double se(double p) const;
};

MetricsReport finalize(const MetricAccumulator& acc, FormatId format, SeedingPolicy policy,
                       double alpha, double beta);

// Differences against a reference report from the same experiment (equal
// parameters and run count); throws std::invalid_argument otherwise.
std::array<double, kTeams> diff_win_best_p(const MetricsReport& report,
                                           const MetricsReport& reference);
std::array<std::array<double, 4>, kTeams> diff_placement(const MetricsReport& report,
                                                         const MetricsReport& reference);

}  // namespace hbsim
