#pragma once

#include <vector>

#include "handballsim/formats.hpp"
#include "handballsim/rng.hpp"

namespace hbsim {

// A partition of the 24 ranks into the preliminary groups of a format.
struct GroupAssignment {
  std::vector<std::vector<int>> groups;
};

// Seeded: pot m holds the ranks (m-1)*k+1 .. m*k for k groups; each group
// receives one team per pot, uniformly over all pot-respecting assignments.
// Random: uniform over all partitions into k labeled groups of equal size.
GroupAssignment draw_groups(const FormatSpec& spec, SeedingPolicy policy, RandomStream& rng);

// Rank order dealt round-robin across groups; group g gets pot team g+1.
// Deterministic; pot-compatible with the seeded draw.
GroupAssignment identity_assignment(const FormatSpec& spec);

// Partition soundness against the format's preliminary stage.
void validate(const GroupAssignment& assignment, const FormatSpec& spec);

}  // namespace hbsim
