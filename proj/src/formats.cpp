#include "handballsim/formats.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "handballsim/error.hpp"
#include "handballsim/strength.hpp"
#include "json.hpp"

namespace hbsim {

namespace {

Entrant slot(int group, int pos) { return {Entrant::Kind::slot, {group, pos}, -1}; }
Entrant winner(int match) { return {Entrant::Kind::winner, {0, 0}, match}; }
Entrant loser(int match) { return {Entrant::Kind::loser, {0, 0}, match}; }

// Semifinals, third-place game, final; the two feeder matches are the last
// two already in `spec.bracket` when called, or given explicitly.
void close_bracket(FormatSpec& spec, int sf1, int sf2) {
  spec.bracket.push_back({loser(sf1), loser(sf2)});
  spec.third_place_match = int(spec.bracket.size()) - 1;
  spec.bracket.push_back({winner(sf1), winner(sf2)});
  spec.final_match = int(spec.bracket.size()) - 1;
}

FormatSpec make_rr() {
  FormatSpec s;
  s.id = FormatId::rr;
  s.name = "rr";
  s.prelim = {1, kTeams, 4};
  s.total_matches = kTeams * (kTeams - 1) / 2;
  return s;
}

FormatSpec make_ko() {
  FormatSpec s;
  s.id = FormatId::ko;
  s.name = "ko";
  s.prelim = {4, 6, 4};
  // Round of 16; pairs fixed by the bracket sheet.
  s.bracket = {
      {slot(0, 1), slot(1, 4)}, {slot(2, 3), slot(3, 2)}, {slot(0, 3), slot(1, 2)},
      {slot(2, 1), slot(3, 4)}, {slot(0, 4), slot(1, 1)}, {slot(2, 2), slot(3, 3)},
      {slot(0, 2), slot(1, 3)}, {slot(2, 4), slot(3, 1)},
  };
  for (int q = 0; q < 4; ++q) s.bracket.push_back({winner(2 * q), winner(2 * q + 1)});
  s.bracket.push_back({winner(8), winner(9)});    // semifinal 1
  s.bracket.push_back({winner(10), winner(11)});  // semifinal 2
  close_bracket(s, 12, 13);
  s.total_matches = 4 * 15 + 16;
  return s;
}

FormatSpec make_g64() {
  FormatSpec s;
  s.id = FormatId::g64;
  s.name = "g64";
  s.prelim = {4, 6, 4};
  s.main = GroupStageSpec{4, 4, 1};
  s.main_groups = {
      {{0, 1}, {0, 3}, {1, 2}, {1, 4}},
      {{0, 2}, {0, 4}, {1, 1}, {1, 3}},
      {{2, 1}, {2, 3}, {3, 2}, {3, 4}},
      {{2, 2}, {2, 4}, {3, 1}, {3, 3}},
  };
  s.bracket = {
      {slot(0, 1), slot(2, 1)},  // semifinal 1
      {slot(1, 1), slot(3, 1)},  // semifinal 2
  };
  close_bracket(s, 0, 1);
  s.total_matches = 4 * 15 + 4 * 4 + 4;
  return s;
}

FormatSpec make_g66() {
  FormatSpec s;
  s.id = FormatId::g66;
  s.name = "g66";
  s.prelim = {4, 6, 3};
  s.main = GroupStageSpec{2, 6, 2};
  s.main_groups = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}},
      {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}},
  };
  s.bracket = {
      {slot(0, 1), slot(1, 2)},  // semifinal 1
      {slot(0, 2), slot(1, 1)},  // semifinal 2
  };
  close_bracket(s, 0, 1);
  s.total_matches = 4 * 15 + 2 * 9 + 4;
  return s;
}

FormatSpec make_g46() {
  FormatSpec s;
  s.id = FormatId::g46;
  s.name = "g46";
  s.prelim = {6, 4, 2};
  s.main = GroupStageSpec{2, 6, 4};
  s.main_groups = {
      {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}},
      {{3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}, {5, 2}},
  };
  s.bracket = {
      {slot(0, 1), slot(1, 4)},  // quarterfinals, cross-paired
      {slot(0, 3), slot(1, 2)},
      {slot(0, 2), slot(1, 3)},
      {slot(0, 4), slot(1, 1)},
  };
  s.bracket.push_back({winner(0), winner(1)});  // semifinal 1
  s.bracket.push_back({winner(2), winner(3)});  // semifinal 2
  close_bracket(s, 4, 5);
  s.total_matches = 6 * 6 + 2 * 12 + 8;
  return s;
}

int carried_pairs(const std::vector<SlotRef>& members) {
  int pairs = 0;
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y)
      if (members[x].group == members[y].group) ++pairs;
  return pairs;
}

}  // namespace

const FormatSpec& format_spec(FormatId id) {
  static const FormatSpec rr = make_rr();
  static const FormatSpec ko = make_ko();
  static const FormatSpec g64 = make_g64();
  static const FormatSpec g66 = make_g66();
  static const FormatSpec g46 = make_g46();
  switch (id) {
    case FormatId::rr: return rr;
    case FormatId::ko: return ko;
    case FormatId::g64: return g64;
    case FormatId::g66: return g66;
    case FormatId::g46: return g46;
  }
  throw std::invalid_argument("unknown format id");
}

std::string_view format_name(FormatId id) { return format_spec(id).name; }

FormatId format_from_name(std::string_view name) {
  for (FormatId id : kAllFormats)
    if (name == format_spec(id).name) return id;
  throw std::invalid_argument("unknown format name: " + std::string(name));
}

std::string_view seeding_name(SeedingPolicy policy) {
  return policy == SeedingPolicy::seeded ? "seeded" : "random";
}

SeedingPolicy seeding_from_name(std::string_view name) {
  if (name == "seeded") return SeedingPolicy::seeded;
  if (name == "random") return SeedingPolicy::random;
  throw std::invalid_argument("unknown seeding policy: " + std::string(name));
}

void validate(const FormatSpec& spec) {
  const auto fail = [&](const std::string& what) {
    throw StructuralError(spec.name + ": " + what);
  };

  if (spec.prelim.groups < 1 || spec.prelim.size < 2) fail("degenerate preliminary stage");
  if (spec.prelim.groups * spec.prelim.size != kTeams) fail("preliminary stage must hold all teams");
  if (spec.prelim.qualifiers < 0 || spec.prelim.qualifiers > spec.prelim.size)
    fail("preliminary qualifier count out of range");

  int expected_total = spec.prelim.groups * spec.prelim.size * (spec.prelim.size - 1) / 2;

  if (spec.main.has_value()) {
    const auto& main = *spec.main;
    if (int(spec.main_groups.size()) != main.groups) fail("main group count mismatch");
    if (main.groups * main.size != spec.prelim.groups * spec.prelim.qualifiers)
      fail("main stage must hold exactly the qualifiers");
    if (main.qualifiers < 0 || main.qualifiers > main.size)
      fail("main qualifier count out of range");
    std::set<std::pair<int, int>> seen;
    for (const auto& members : spec.main_groups) {
      if (int(members.size()) != main.size) fail("main group size mismatch");
      for (const auto& ref : members) {
        if (ref.group < 0 || ref.group >= spec.prelim.groups) fail("main slot group out of range");
        if (ref.pos < 1 || ref.pos > spec.prelim.qualifiers) fail("main slot position out of range");
        if (!seen.insert({ref.group, ref.pos}).second) fail("prelim slot feeds two main groups");
      }
      expected_total += main.size * (main.size - 1) / 2 - carried_pairs(members);
    }
  } else if (!spec.main_groups.empty()) {
    fail("main groups listed without a main stage");
  }

  const GroupStageSpec last = spec.main.value_or(spec.prelim);
  const int last_groups = spec.main ? int(spec.main_groups.size()) : spec.prelim.groups;

  if (spec.bracket.empty()) {
    if (spec.final_match != -1 || spec.third_place_match != -1)
      fail("final declared without a bracket");
    if (spec.prelim.groups != 1 || spec.prelim.qualifiers < 4)
      fail("standings placement needs one group with four counted positions");
  } else {
    if (spec.final_match < 0 || spec.final_match >= int(spec.bracket.size()))
      fail("final match index out of range");
    if (spec.third_place_match < 0 || spec.third_place_match >= int(spec.bracket.size()))
      fail("third place match index out of range");

    std::set<std::pair<int, int>> slots_used;
    std::set<std::pair<int, Entrant::Kind>> refs_used;
    for (std::size_t m = 0; m < spec.bracket.size(); ++m) {
      for (const Entrant* e : {&spec.bracket[m].a, &spec.bracket[m].b}) {
        if (e->kind == Entrant::Kind::slot) {
          if (e->slot.group < 0 || e->slot.group >= last_groups) fail("bracket slot group out of range");
          if (e->slot.pos < 1 || e->slot.pos > last.qualifiers) fail("bracket slot position out of range");
          if (!slots_used.insert({e->slot.group, e->slot.pos}).second)
            fail("standing slot enters the bracket twice");
        } else {
          if (e->match < 0 || e->match >= int(m)) fail("bracket reference must point backward");
          if (!refs_used.insert({e->match, e->kind}).second)
            fail("bracket result consumed twice");
        }
      }
    }
    // Every qualifying slot of the last stage enters the bracket.
    if (int(slots_used.size()) != last_groups * last.qualifiers)
      fail("bracket does not consume every qualifying slot");

    const BracketMatch& last_match = spec.bracket[spec.final_match];
    const BracketMatch& bronze = spec.bracket[spec.third_place_match];
    if (last_match.a.kind != Entrant::Kind::winner || last_match.b.kind != Entrant::Kind::winner)
      fail("final must pair two winners");
    if (bronze.a.kind != Entrant::Kind::loser || bronze.b.kind != Entrant::Kind::loser)
      fail("third place must pair two losers");
    if (std::set<int>{last_match.a.match, last_match.b.match} !=
        std::set<int>{bronze.a.match, bronze.b.match})
      fail("third place must pair the semifinal losers");
    expected_total += int(spec.bracket.size());
  }

  if (spec.total_matches != expected_total) fail("total match count mismatch");
}

std::map<int, int> match_count_distribution(FormatId id) {
  const FormatSpec& spec = format_spec(id);
  validate(spec);

  // Matches per standing slot of the last group stage, before the bracket.
  // Members of a main group may carry different numbers of results in
  // principle; all designs here are uniform, which validate() cannot know,
  // so recheck before attributing per-group counts to standing positions.
  const int prelim_each = spec.prelim.size - 1;
  std::vector<int> group_stage_matches;  // by last-stage group
  if (spec.main.has_value()) {
    for (const auto& members : spec.main_groups) {
      int first_carried = -1;
      for (const auto& ref : members) {
        int carried = 0;
        for (const auto& other : members)
          if (&other != &ref && other.group == ref.group) ++carried;
        if (first_carried == -1) first_carried = carried;
        if (carried != first_carried)
          throw StructuralError(spec.name + ": uneven carry-over inside a main group");
      }
      group_stage_matches.push_back(prelim_each + spec.main->size - 1 - first_carried);
    }
  } else {
    group_stage_matches.assign(spec.prelim.groups, prelim_each);
  }

  const GroupStageSpec last = spec.main.value_or(spec.prelim);
  std::map<int, int> dist;
  const int eliminated_prelim = spec.prelim.groups * (spec.prelim.size - spec.prelim.qualifiers);
  if (eliminated_prelim > 0) dist[prelim_each] += eliminated_prelim;
  if (spec.main.has_value())
    for (int played : group_stage_matches) dist[played] += last.size - last.qualifiers;

  if (spec.bracket.empty()) {
    // No bracket: the last stage's qualifiers end their tournament there too.
    if (spec.main.has_value())
      for (int played : group_stage_matches) dist[played] += last.qualifiers;
    else
      dist[prelim_each] += spec.prelim.groups * spec.prelim.qualifiers;
    return dist;
  }

  // Bracket depth per participant is outcome-free: each match adds one game to
  // both entrants, and a participant's run ends exactly where no later match
  // consumes the corresponding winner/loser reference.
  std::vector<int> depth(spec.bracket.size());
  std::vector<bool> win_used(spec.bracket.size()), lose_used(spec.bracket.size());
  auto entrant_matches = [&](const Entrant& e) {
    if (e.kind == Entrant::Kind::slot) return group_stage_matches[e.slot.group];
    (e.kind == Entrant::Kind::winner ? win_used : lose_used)[e.match] = true;
    return depth[e.match];
  };
  for (std::size_t m = 0; m < spec.bracket.size(); ++m) {
    const int a = entrant_matches(spec.bracket[m].a) + 1;
    const int b = entrant_matches(spec.bracket[m].b) + 1;
    if (a != b) throw StructuralError(spec.name + ": bracket entrants at unequal depth");
    depth[m] = a;
  }
  for (std::size_t m = 0; m < spec.bracket.size(); ++m) {
    if (!win_used[m]) dist[depth[m]] += 1;
    if (!lose_used[m]) dist[depth[m]] += 1;
  }
  return dist;
}

namespace {

using nlohmann::json;

json entrant_to_json(const Entrant& e) {
  switch (e.kind) {
    case Entrant::Kind::slot:
      return json{{"from", "slot"}, {"group", e.slot.group}, {"pos", e.slot.pos}};
    case Entrant::Kind::winner: return json{{"from", "winner"}, {"match", e.match}};
    case Entrant::Kind::loser: return json{{"from", "loser"}, {"match", e.match}};
  }
  throw std::invalid_argument("unknown entrant kind");
}

Entrant entrant_from_json(const json& j) {
  const std::string from = j.at("from");
  if (from == "slot") return {Entrant::Kind::slot, {j.at("group"), j.at("pos")}, -1};
  if (from == "winner") return {Entrant::Kind::winner, {0, 0}, j.at("match")};
  if (from == "loser") return {Entrant::Kind::loser, {0, 0}, j.at("match")};
  throw std::invalid_argument("unknown entrant kind: " + from);
}

json stage_to_json(const GroupStageSpec& s) {
  return json{{"groups", s.groups}, {"size", s.size}, {"qualifiers", s.qualifiers}};
}

GroupStageSpec stage_from_json(const json& j) {
  return {j.at("groups"), j.at("size"), j.at("qualifiers")};
}

}  // namespace

std::string format_to_json(const FormatSpec& spec) {
  json j{{"name", spec.name},
         {"prelim", stage_to_json(spec.prelim)},
         {"total_matches", spec.total_matches}};
  if (spec.main.has_value()) {
    j["main"] = stage_to_json(*spec.main);
    json groups = json::array();
    for (const auto& members : spec.main_groups) {
      json g = json::array();
      for (const auto& ref : members) g.push_back(json{{"group", ref.group}, {"pos", ref.pos}});
      groups.push_back(std::move(g));
    }
    j["main_groups"] = std::move(groups);
  }
  if (!spec.bracket.empty()) {
    json bracket = json::array();
    for (const auto& m : spec.bracket)
      bracket.push_back(json{{"a", entrant_to_json(m.a)}, {"b", entrant_to_json(m.b)}});
    j["bracket"] = std::move(bracket);
    j["final"] = spec.final_match;
    j["third_place"] = spec.third_place_match;
  }
  return j.dump(2);
}

FormatSpec format_from_json(std::string_view text) {
  FormatSpec spec;
  try {
    const json j = json::parse(text);
    spec.name = j.at("name");
    spec.id = format_from_name(spec.name);
    spec.prelim = stage_from_json(j.at("prelim"));
    spec.total_matches = j.at("total_matches");
    if (j.contains("main")) {
      spec.main = stage_from_json(j.at("main"));
      for (const auto& g : j.at("main_groups")) {
        std::vector<SlotRef> members;
        for (const auto& ref : g) members.push_back({ref.at("group"), ref.at("pos")});
        spec.main_groups.push_back(std::move(members));
      }
    }
    if (j.contains("bracket")) {
      for (const auto& m : j.at("bracket"))
        spec.bracket.push_back({entrant_from_json(m.at("a")), entrant_from_json(m.at("b"))});
      spec.final_match = j.at("final");
      spec.third_place_match = j.at("third_place");
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed format description: ") + e.what());
  }
  validate(spec);
  return spec;
}

}  // namespace hbsim
