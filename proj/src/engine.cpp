#include "handballsim/engine.hpp"

#include <algorithm>
#include <string>

#include "handballsim/error.hpp"

namespace hbsim {

GroupTable compute_group_table(const std::vector<int>& members,
                               const std::vector<CarriedResult>& carried, MatchCursor& cursor) {
  const int n = int(members.size());
  GroupTable table;
  table.members = members;
  table.points.assign(n, 0);

  auto index_of = [&](int rank) {
    for (int i = 0; i < n; ++i)
      if (members[i] == rank) return i;
    throw StructuralError("carried result names rank " + std::to_string(rank) +
                          " outside the group");
  };

  std::vector<std::uint8_t> settled(n * n, 0);
  for (const auto& c : carried) {
    const int w = index_of(c.winner);
    const int l = index_of(c.loser);
    if (w == l) throw StructuralError("carried result pairs a team with itself");
    if (settled[w * n + l]) throw StructuralError("pair carries two results");
    settled[w * n + l] = settled[l * n + w] = 1;
    table.points[w] += 2;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (settled[x * n + y]) continue;
      const int w = cursor.play(members[x], members[y]);
      table.points[w == members[x] ? x : y] += 2;
    }
  }
  return table;
}

std::vector<int> order_standings(const GroupTable& table, RandomStream& ties) {
  const int n = int(table.members.size());
  struct Row {
    int points;
    std::uint64_t key;
    int member;
  };
  std::vector<Row> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = {table.points[i], ties.next_u64(), table.members[i]};
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.points != b.points) return a.points > b.points;
    return a.key < b.key;
  });
  std::vector<int> standings(n);
  for (int i = 0; i < n; ++i) standings[i] = rows[i].member;
  return standings;
}

TournamentResult play_tournament(const FormatSpec& spec, const GroupAssignment& assignment,
                                 const OutcomeTables& outcomes, RandomStream& ties) {
  validate(assignment, spec);
  MatchCursor cursor(outcomes);

  std::vector<std::vector<int>> prelim(spec.prelim.groups);
  for (int g = 0; g < spec.prelim.groups; ++g)
    prelim[g] = order_standings(compute_group_table(assignment.groups[g], {}, cursor), ties);

  std::vector<std::vector<int>> main_standings;
  if (spec.main.has_value()) {
    main_standings.reserve(spec.main_groups.size());
    for (const auto& refs : spec.main_groups) {
      std::vector<int> members;
      members.reserve(refs.size());
      for (const auto& ref : refs) members.push_back(prelim[ref.group][ref.pos - 1]);
      // Co-qualified teams already met in their prelim group; that result
      // carries over instead of being replayed.
      std::vector<CarriedResult> carried;
      for (std::size_t x = 0; x < refs.size(); ++x) {
        for (std::size_t y = x + 1; y < refs.size(); ++y) {
          if (refs[x].group != refs[y].group) continue;
          const int a = members[x];
          const int b = members[y];
          if (cursor.meetings(a, b) != 1)
            throw StructuralError("carried pair did not meet exactly once in the prelim round");
          const bool a_won = outcomes.first[a - 1][b - 1];
          carried.push_back(a_won ? CarriedResult{a, b} : CarriedResult{b, a});
        }
      }
      main_standings.push_back(order_standings(compute_group_table(members, carried, cursor), ties));
    }
  }
  const auto& last = spec.main.has_value() ? main_standings : prelim;

  TournamentResult result;
  if (spec.bracket.empty()) {
    const auto& standings = last[0];
    result.champion = standings[0];
    result.runner_up = standings[1];
    result.third = standings[2];
    result.fourth = standings[3];
  } else {
    std::vector<int> winners(spec.bracket.size()), losers(spec.bracket.size());
    std::vector<std::array<int, 2>> pairs(spec.bracket.size());
    auto resolve = [&](const Entrant& e) {
      switch (e.kind) {
        case Entrant::Kind::slot: return last[e.slot.group][e.slot.pos - 1];
        case Entrant::Kind::winner: return winners[e.match];
        case Entrant::Kind::loser: return losers[e.match];
      }
      throw StructuralError("unknown entrant kind");
    };
    for (std::size_t m = 0; m < spec.bracket.size(); ++m) {
      const int a = resolve(spec.bracket[m].a);
      const int b = resolve(spec.bracket[m].b);
      const int w = cursor.play(a, b);
      pairs[m] = {a, b};
      winners[m] = w;
      losers[m] = a + b - w;
    }
    result.champion = winners[spec.final_match];
    result.runner_up = losers[spec.final_match];
    result.third = winners[spec.third_place_match];
    result.fourth = losers[spec.third_place_match];
    result.has_final = true;
    result.semifinals[0] = pairs[spec.bracket[spec.final_match].a.match];
    result.semifinals[1] = pairs[spec.bracket[spec.final_match].b.match];
  }
  result.matches_played = cursor.matches_played();
  return result;
}

}  // namespace hbsim
