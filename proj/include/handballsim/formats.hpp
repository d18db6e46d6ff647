#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hbsim {

enum class FormatId { rr, ko, g64, g66, g46 };
enum class SeedingPolicy { seeded, random };

inline constexpr FormatId kAllFormats[] = {FormatId::rr, FormatId::ko, FormatId::g64,
                                           FormatId::g66, FormatId::g46};

struct GroupStageSpec {
  int groups;
  int size;
  int qualifiers;  // per group, by standing position
  bool operator==(const GroupStageSpec&) const = default;
};

// A standing position in a group stage: 0-based group, 1-based place.
struct SlotRef {
  int group;
  int pos;
  bool operator==(const SlotRef&) const = default;
};

// Where a bracket match takes a participant from: a standing slot of the last
// group stage, or the winner/loser of an earlier bracket match.
struct Entrant {
  enum class Kind { slot, winner, loser };
  Kind kind;
  SlotRef slot{0, 0};  // kind == slot
  int match = -1;      // kind == winner/loser: index into bracket
  bool operator==(const Entrant&) const = default;
};

struct BracketMatch {
  Entrant a, b;
  bool operator==(const BracketMatch&) const = default;
};

// A complete tournament design as data: group stages, main-group composition,
// and bracket wiring. The engine interprets this; it has no per-format code.
struct FormatSpec {
  FormatId id;
  std::string name;
  GroupStageSpec prelim;
  std::optional<GroupStageSpec> main;
  // Per main group, the prelim slots that feed it. Results between members
  // coming from the same prelim group carry over and are not replayed.
  std::vector<std::vector<SlotRef>> main_groups;
  std::vector<BracketMatch> bracket;
  int final_match = -1;        // -1: placement comes from group standings
  int third_place_match = -1;  // plays the two semifinal losers
  int total_matches = 0;

  bool operator==(const FormatSpec&) const = default;
};

const FormatSpec& format_spec(FormatId id);
std::string_view format_name(FormatId id);
FormatId format_from_name(std::string_view name);  // throws std::invalid_argument
std::string_view seeding_name(SeedingPolicy policy);
SeedingPolicy seeding_from_name(std::string_view name);

// Structural soundness: stage arithmetic, slot ranges, acyclic bracket wiring,
// a final fed by exactly two matches whose losers meet for third place.
void validate(const FormatSpec& spec);

// Histogram of matches played per team (match count -> number of teams).
// Fixed by the structure; independent of draws and results.
std::map<int, int> match_count_distribution(FormatId id);

// Human-readable serialization (JSON). Round-trips exactly.
std::string format_to_json(const FormatSpec& spec);
FormatSpec format_from_json(std::string_view text);

}  // namespace hbsim
