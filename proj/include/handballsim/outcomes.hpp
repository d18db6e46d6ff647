#pragma once

#include <array>
#include <cstdint>

#include "handballsim/rng.hpp"
#include "handballsim/strength.hpp"

namespace hbsim {

// Pre-drawn results for every possible pairing: one table for a pair's first
// meeting and one for a possible rematch. Shared by all designs within a run
// so that format comparisons use common random numbers.
struct OutcomeTables {
  // [i-1][j-1] nonzero iff rank i beats rank j at that meeting; antisymmetric.
  std::array<std::array<std::uint8_t, kTeams>, kTeams> first{};
  std::array<std::array<std::uint8_t, kTeams>, kTeams> second{};
};

// Draw order is fixed: the first-meeting table row-major over i < j, then the
// rematch table. 552 Bernoulli draws total.
OutcomeTables generate_outcomes(const ProbMatrix& probs, RandomStream& rng);

// Serves results during one tournament and enforces the rematch limit: a pair
// meets at most twice, the second time from the rematch table.
class MatchCursor {
 public:
  explicit MatchCursor(const OutcomeTables& tables) : tables_(&tables) {}

  // Returns the winner and counts one match for both teams.
  int play(int rank_a, int rank_b);

  int meetings(int rank_a, int rank_b) const {
    return met_[rank_a - 1][rank_b - 1];
  }

  const std::array<std::uint8_t, kTeams>& matches_played() const { return played_; }

 private:
  const OutcomeTables* tables_;
  std::array<std::array<std::uint8_t, kTeams>, kTeams> met_{};
  std::array<std::uint8_t, kTeams> played_{};
};

}  // namespace hbsim
