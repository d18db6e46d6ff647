#include "handballsim/outcomes.hpp"

#include <string>

#include "handballsim/error.hpp"

namespace hbsim {

OutcomeTables generate_outcomes(const ProbMatrix& probs, RandomStream& rng) {
  OutcomeTables t;
  for (auto* table : {&t.first, &t.second}) {
    for (int i = 0; i < kTeams; ++i) {
      for (int j = i + 1; j < kTeams; ++j) {
        const bool i_wins = rng.bernoulli(probs.p[i][j]);
        (*table)[i][j] = i_wins;
        (*table)[j][i] = !i_wins;
      }
    }
  }
  return t;
}

int MatchCursor::play(int rank_a, int rank_b) {
  const int i = rank_a - 1;
  const int j = rank_b - 1;
  if (i == j) throw StructuralError("team paired against itself: rank " + std::to_string(rank_a));
  const int met = met_[i][j];
  if (met >= 2)
    throw StructuralError("ranks " + std::to_string(rank_a) + " and " + std::to_string(rank_b) +
                          " paired a third time");
  met_[i][j] = met_[j][i] = std::uint8_t(met + 1);
  played_[i] += 1;
  played_[j] += 1;
  const auto& table = met == 0 ? tables_->first : tables_->second;
  return table[i][j] ? rank_a : rank_b;
}

}  // namespace hbsim
