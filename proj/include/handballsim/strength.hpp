#pragma once

#include <array>

namespace hbsim {

// Teams are identified by their pre-tournament rank, 1 (strongest) to 24.
inline constexpr int kTeams = 24;

struct StrengthParams {
  double alpha = 4.0;  // discrimination: 0 means every match is a coin flip
  double beta = 24.0;  // compression: large values flatten rank differences
};

// Probability that rank i beats rank j in a single match.
double win_probability(int rank_i, int rank_j, const StrengthParams& params);

// Full pairwise matrix; at(i, j) + at(j, i) == 1 for i != j.
struct ProbMatrix {
  std::array<std::array<double, kTeams>, kTeams> p{};
  double at(int rank_i, int rank_j) const { return p[rank_i - 1][rank_j - 1]; }
};

ProbMatrix probability_matrix(const StrengthParams& params);

// Degenerate matrix where the better rank always wins. Used by validation runs;
// fed through the same sampling path as the parametric matrix.
ProbMatrix deterministic_matrix();

}  // namespace hbsim
