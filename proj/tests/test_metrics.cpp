#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "handballsim/engine.hpp"
#include "handballsim/metrics.hpp"

using namespace hbsim;

namespace {

TournamentResult final_result(int champion, int runner_up, int third, int fourth,
                              std::array<int, 2> sf1, std::array<int, 2> sf2) {
  TournamentResult r;
  r.champion = champion;
  r.runner_up = runner_up;
  r.third = third;
  r.fourth = fourth;
  r.has_final = true;
  r.semifinals = {sf1, sf2};
  return r;
}

}  // namespace

TEST_CASE("accumulator tallies one result correctly") {
  MetricAccumulator acc;
  acc.add(final_result(2, 1, 5, 7, {2, 5}, {1, 7}));
  CHECK(acc.runs == 1);
  CHECK(acc.final_runs == 1);
  CHECK(acc.place_count[0][1] == 1);
  CHECK(acc.place_count[1][0] == 1);
  CHECK(acc.place_count[2][4] == 1);
  CHECK(acc.place_count[3][6] == 1);
  CHECK(acc.rank_sum[0] == 2);
  CHECK(acc.rank_sum[3] == 7);
  CHECK(acc.min_finalist_count[0] == 1);  // rank 1 reached the final
  CHECK(acc.quality_sum == 3);
  CHECK(acc.balance_sum == 1);
  CHECK(acc.both_top_two_final == 1);
  CHECK(acc.top_pair_semifinal == 0);
  CHECK(acc.max_semifinal_rank == 7);

  acc.add(final_result(3, 4, 1, 2, {3, 1}, {4, 2}));
  CHECK(acc.both_top_two_final == 1);
  CHECK(acc.min_finalist_count[2] == 1);
  CHECK(acc.quality_sum == 3 + 7);
  CHECK(acc.balance_sum == 1 + 1);

  acc.add(final_result(1, 2, 3, 4, {1, 2}, {3, 4}));
  CHECK(acc.top_pair_semifinal == 1);
  CHECK(acc.both_top_two_final == 2);
}

TEST_CASE("merge equals accumulating in one pass") {
  const TournamentResult results[] = {
      final_result(1, 2, 3, 4, {1, 3}, {2, 4}),
      final_result(5, 2, 9, 1, {5, 9}, {2, 1}),
      final_result(3, 8, 2, 6, {3, 2}, {8, 6}),
      final_result(2, 1, 4, 7, {2, 4}, {1, 7}),
      final_result(10, 11, 12, 13, {10, 12}, {11, 13}),
  };
  MetricAccumulator whole, left, right;
  for (const auto& r : results) whole.add(r);
  for (int i = 0; i < 2; ++i) left.add(results[i]);
  for (int i = 2; i < 5; ++i) right.add(results[i]);
  left.merge(right);
  CHECK(left.runs == whole.runs);
  CHECK(left.place_count == whole.place_count);
  CHECK(left.min_finalist_count == whole.min_finalist_count);
  CHECK(left.rank_sum == whole.rank_sum);
  CHECK(left.rank_sq == whole.rank_sq);
  CHECK(left.quality_sum == whole.quality_sum);
  CHECK(left.quality_sq == whole.quality_sq);
  CHECK(left.balance_sum == whole.balance_sum);
  CHECK(left.balance_sq == whole.balance_sq);
  CHECK(left.both_top_two_final == whole.both_top_two_final);
  CHECK(left.top_pair_semifinal == whole.top_pair_semifinal);
  CHECK(left.max_semifinal_rank == whole.max_semifinal_rank);
}

TEST_CASE("report derives means errors and cumulative series") {
  MetricAccumulator acc;
  acc.add(final_result(1, 2, 3, 4, {1, 3}, {2, 4}));
  acc.add(final_result(2, 3, 1, 5, {2, 1}, {3, 5}));
  acc.add(final_result(3, 1, 2, 6, {3, 2}, {1, 6}));
  const MetricsReport r = finalize(acc, FormatId::ko, SeedingPolicy::seeded, 4, 24);

  CHECK(r.format == "ko");
  CHECK(r.seeding == "seeded");
  CHECK(r.runs == 3);
  CHECK(r.has_final);
  CHECK(r.avg_rank[0] == doctest::Approx(2.0));
  // Champions 1, 2, 3: sample variance 1.
  CHECK(r.avg_rank_se[0] == doctest::Approx(std::sqrt(1.0 / 3)));
  CHECK(r.win_best_p[0] == doctest::Approx(1.0 / 3));
  CHECK(r.win_best_p[2] == doctest::Approx(1.0));
  CHECK(r.win_best_p[23] == doctest::Approx(1.0));
  // Best finalists per run: 1, 2, 1.
  CHECK(r.final_reach_best_p[0] == doctest::Approx(2.0 / 3));
  CHECK(r.final_reach_best_p[1] == doctest::Approx(1.0));
  CHECK(r.final_quality == doctest::Approx((3 + 5 + 4) / 3.0));
  CHECK(r.final_balance == doctest::Approx((1 + 1 + 2) / 3.0));
  CHECK(r.both_top_two_final == doctest::Approx(1.0 / 3));
  CHECK(r.top_pair_semifinal == doctest::Approx(1.0 / 3));
  CHECK(r.max_semifinal_rank == 6);
  CHECK(r.min_games == 5);
  CHECK(r.max_games == 9);
  CHECK(r.total_games == 76);
  CHECK(r.se(0.5) == doctest::Approx(std::sqrt(0.25 / 3)));

  for (int p = 1; p < kTeams; ++p) {
    CHECK(r.win_best_p[p] >= r.win_best_p[p - 1]);
    CHECK(r.final_reach_best_p[p] >= r.final_reach_best_p[p - 1]);
  }
  for (int place = 0; place < 4; ++place) {
    double column = 0;
    for (int t = 0; t < kTeams; ++t) column += r.placement[t][place];
    CHECK(column == doctest::Approx(1.0));
  }
  CHECK(r.placement[0][0] == doctest::Approx(r.win_best_p[0]));
}

TEST_CASE("placement reports work without a final") {
  MetricAccumulator acc;
  TournamentResult r;
  r.champion = 1;
  r.runner_up = 3;
  r.third = 2;
  r.fourth = 8;
  acc.add(r);
  const MetricsReport report = finalize(acc, FormatId::rr, SeedingPolicy::random, 4, 24);
  CHECK(report.seeding.empty());  // no draw to seed
  CHECK_FALSE(report.has_final);
  CHECK(report.win_best_p[0] == doctest::Approx(1.0));
  CHECK(report.final_quality == 0.0);
  CHECK(report.total_games == 276);
  CHECK(report.min_games == 23);
}

TEST_CASE("finalize rejects empty or mixed accumulators") {
  MetricAccumulator empty;
  CHECK_THROWS_AS(finalize(empty, FormatId::ko, SeedingPolicy::seeded, 4, 24),
                  std::invalid_argument);
  MetricAccumulator mixed;
  mixed.add(final_result(1, 2, 3, 4, {1, 3}, {2, 4}));
  TournamentResult table_only;
  table_only.champion = 1;
  table_only.runner_up = 2;
  table_only.third = 3;
  table_only.fourth = 4;
  mixed.add(table_only);
  CHECK_THROWS_AS(finalize(mixed, FormatId::ko, SeedingPolicy::seeded, 4, 24),
                  std::invalid_argument);
}

TEST_CASE("report differences require comparable experiments") {
  MetricAccumulator acc;
  acc.add(final_result(1, 2, 3, 4, {1, 3}, {2, 4}));
  acc.add(final_result(2, 1, 4, 3, {2, 4}, {1, 3}));
  const MetricsReport a = finalize(acc, FormatId::ko, SeedingPolicy::seeded, 4, 24);
  const MetricsReport b = finalize(acc, FormatId::g66, SeedingPolicy::seeded, 4, 24);
  const auto diff = diff_win_best_p(a, b);
  for (double d : diff) CHECK(d == doctest::Approx(0.0));
  const auto pdiff = diff_placement(a, b);
  CHECK(pdiff[0][0] == doctest::Approx(0.0));

  const MetricsReport other_params = finalize(acc, FormatId::g66, SeedingPolicy::seeded, 3, 24);
  CHECK_THROWS_AS(diff_win_best_p(a, other_params), std::invalid_argument);
  MetricAccumulator longer = acc;
  longer.add(final_result(1, 2, 3, 4, {1, 3}, {2, 4}));
  const MetricsReport other_runs = finalize(longer, FormatId::g66, SeedingPolicy::seeded, 4, 24);
  CHECK_THROWS_AS(diff_placement(a, other_runs), std::invalid_argument);
}

// Exhaustive cross-check on a four-team single group: every possible set of
// results, enumerated twice by unrelated methods.
TEST_CASE("four team group placement matches exhaustive enumeration") {
  constexpr int n = 4;
  constexpr double alpha = 4.0, beta = 24.0;
  const int pair_count = n * (n - 1) / 2;
  int pair_a[6], pair_b[6];
  {
    int k = 0;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b, ++k) {
        pair_a[k] = a;
        pair_b[k] = b;
      }
  }
  const auto lower_win_prob = [&](int a, int b) {
    return 1.0 / (1.0 + std::pow((a + beta) / (b + beta), alpha));
  };

  // Route one: the engine's table builder plus an explicit walk of every
  // tied-block permutation, weighted uniformly within each block.
  std::array<std::array<double, n>, n> engine_placement{};
  // Route two: direct enumeration of all total orders compatible with the
  // points; uniform tie-breaking makes each compatible order equally likely.
  std::array<std::array<double, n>, n> oracle_placement{};

  std::array<int, n> order{};
  std::iota(order.begin(), order.end(), 1);

  for (int mask = 0; mask < (1 << pair_count); ++mask) {
    double mass = 1.0;
    OutcomeTables tables;
    std::array<int, n + 1> wins{};
    for (int k = 0; k < pair_count; ++k) {
      const bool lower_wins = (mask >> k) & 1;
      const double p = lower_win_prob(pair_a[k], pair_b[k]);
      mass *= lower_wins ? p : 1.0 - p;
      tables.first[pair_a[k] - 1][pair_b[k] - 1] = lower_wins;
      tables.first[pair_b[k] - 1][pair_a[k] - 1] = !lower_wins;
      ++wins[lower_wins ? pair_a[k] : pair_b[k]];
    }

    {
      MatchCursor cursor(tables);
      const GroupTable table = compute_group_table({1, 2, 3, 4}, {}, cursor);
      // Blocks of equal points, best first, in member order within a block.
      std::vector<std::vector<int>> blocks;
      for (int points = 2 * (n - 1); points >= 0; points -= 2) {
        std::vector<int> block;
        for (int m = 0; m < n; ++m)
          if (table.points[m] == points) block.push_back(table.members[m]);
        if (!block.empty()) blocks.push_back(block);
      }
      double perms = 1.0;
      for (const auto& block : blocks)
        for (std::size_t f = 2; f <= block.size(); ++f) perms *= double(f);
      // Walk every combination of within-block permutations.
      std::vector<std::vector<int>> arrangements{{}};
      for (auto block : blocks) {
        std::sort(block.begin(), block.end());
        std::vector<std::vector<int>> extended;
        do {
          for (const auto& prefix : arrangements) {
            std::vector<int> next = prefix;
            next.insert(next.end(), block.begin(), block.end());
            extended.push_back(std::move(next));
          }
        } while (std::next_permutation(block.begin(), block.end()));
        arrangements = std::move(extended);
      }
      for (const auto& standing : arrangements)
        for (int place = 0; place < n; ++place)
          engine_placement[standing[place] - 1][place] += mass / perms;
    }

    {
      std::vector<std::array<int, n>> admissible;
      std::array<int, n> candidate = order;
      std::sort(candidate.begin(), candidate.end());
      do {
        bool ok = true;
        for (int i = 1; i < n && ok; ++i)
          if (wins[candidate[i - 1]] < wins[candidate[i]]) ok = false;
        if (ok) admissible.push_back(candidate);
      } while (std::next_permutation(candidate.begin(), candidate.end()));
      for (const auto& standing : admissible)
        for (int place = 0; place < n; ++place)
          oracle_placement[standing[place] - 1][place] += mass / double(admissible.size());
    }
  }

  for (int team = 0; team < n; ++team) {
    double engine_row = 0, oracle_row = 0;
    for (int place = 0; place < n; ++place) {
      CHECK(std::abs(engine_placement[team][place] - oracle_placement[team][place]) < 1e-12);
      engine_row += engine_placement[team][place];
      oracle_row += oracle_placement[team][place];
    }
    CHECK(std::abs(engine_row - 1.0) < 1e-12);
    CHECK(std::abs(oracle_row - 1.0) < 1e-12);
  }
}
