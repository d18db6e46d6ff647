#include "handballsim/draw.hpp"

#include <numeric>

#include "handballsim/error.hpp"
#include "handballsim/strength.hpp"

namespace hbsim {

GroupAssignment draw_groups(const FormatSpec& spec, SeedingPolicy policy, RandomStream& rng) {
  const int k = spec.prelim.groups;
  const int size = spec.prelim.size;
  GroupAssignment out;
  out.groups.assign(k, {});
  if (k == 1) {
    out.groups[0].resize(kTeams);
    std::iota(out.groups[0].begin(), out.groups[0].end(), 1);
    return out;
  }
  if (policy == SeedingPolicy::seeded) {
    std::vector<int> dest(k);
    for (int pot = 0; pot < size; ++pot) {
      std::iota(dest.begin(), dest.end(), 0);
      shuffle(dest, rng);
      for (int m = 0; m < k; ++m) out.groups[dest[m]].push_back(pot * k + m + 1);
    }
  } else {
    std::vector<int> ranks(kTeams);
    std::iota(ranks.begin(), ranks.end(), 1);
    shuffle(ranks, rng);
    for (int g = 0; g < k; ++g)
      out.groups[g].assign(ranks.begin() + g * size, ranks.begin() + (g + 1) * size);
  }
  return out;
}

GroupAssignment identity_assignment(const FormatSpec& spec) {
  const int k = spec.prelim.groups;
  GroupAssignment out;
  out.groups.assign(k, {});
  for (int pot = 0; pot < spec.prelim.size; ++pot)
    for (int g = 0; g < k; ++g) out.groups[g].push_back(pot * k + g + 1);
  return out;
}

void validate(const GroupAssignment& assignment, const FormatSpec& spec) {
  if (int(assignment.groups.size()) != spec.prelim.groups)
    throw StructuralError("assignment group count does not match the format");
  std::array<bool, kTeams> seen{};
  for (const auto& group : assignment.groups) {
    if (int(group.size()) != spec.prelim.size)
      throw StructuralError("assignment group size does not match the format");
    for (int rank : group) {
      if (rank < 1 || rank > kTeams) throw StructuralError("rank outside the field");
      if (seen[rank - 1]) throw StructuralError("rank assigned twice");
      seen[rank - 1] = true;
    }
  }
}

}  // namespace hbsim
