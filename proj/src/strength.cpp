#include "handballsim/strength.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hbsim {

namespace {

void check_rank(int rank, const char* which) {
  if (rank < 1 || rank > kTeams)
    throw std::invalid_argument(std::string(which) + " rank " + std::to_string(rank) +
                                " outside [1, " + std::to_string(kTeams) + "]");
}

void check_params(const StrengthParams& params) {
  if (!(params.alpha >= 0.0) || !std::isfinite(params.alpha))
    throw std::invalid_argument("alpha must be finite and non-negative");
  if (!(params.beta >= 0.0) || !std::isfinite(params.beta))
    throw std::invalid_argument("beta must be finite and non-negative");
}

}  // namespace

double win_probability(int rank_i, int rank_j, const StrengthParams& params) {
  check_rank(rank_i, "first");
  check_rank(rank_j, "second");
  check_params(params);
  if (rank_i == rank_j) return 0.5;
  const double ratio = (rank_i + params.beta) / (rank_j + params.beta);
  return 1.0 / (1.0 + std::pow(ratio, params.alpha));
}

ProbMatrix probability_matrix(const StrengthParams& params) {
  check_params(params);
  ProbMatrix m;
  for (int i = 1; i <= kTeams; ++i)
    for (int j = 1; j <= kTeams; ++j) m.p[i - 1][j - 1] = win_probability(i, j, params);
  return m;
}

ProbMatrix deterministic_matrix() {
  ProbMatrix m;
  for (int i = 1; i <= kTeams; ++i)
    for (int j = 1; j <= kTeams; ++j) m.p[i - 1][j - 1] = i == j ? 0.5 : (i < j ? 1.0 : 0.0);
  return m;
}

}  // namespace hbsim
