#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "handballsim/draw.hpp"
#include "handballsim/formats.hpp"
#include "handballsim/outcomes.hpp"

namespace hbsim {

// A result taken into a main-round group without a replay.
struct CarriedResult {
  int winner, loser;
};

// Points per member after a full single round robin; two points per win,
// carried results included, no draws.
struct GroupTable {
  std::vector<int> members;
  std::vector<int> points;  // parallel to members
};

GroupTable compute_group_table(const std::vector<int>& members,
                               const std::vector<CarriedResult>& carried, MatchCursor& cursor);

// Standings, best first: points descending, every tied block ordered by a
// uniformly random permutation. Draws exactly one key per member so stream
// consumption does not depend on the results.
std::vector<int> order_standings(const GroupTable& table, RandomStream& ties);

struct TournamentResult {
  int champion = 0;
  int runner_up = 0;
  int third = 0;
  int fourth = 0;
  bool has_final = false;  // false when placement comes from a standings table
  std::array<std::array<int, 2>, 2> semifinals{};  // meaningful iff has_final
  std::array<std::uint8_t, kTeams> matches_played{};
};

TournamentResult play_tournament(const FormatSpec& spec, const GroupAssignment& assignment,
                                 const OutcomeTables& outcomes, RandomStream& ties);

}  // namespace hbsim
