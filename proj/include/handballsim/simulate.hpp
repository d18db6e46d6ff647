#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "handballsim/metrics.hpp"
#include "handballsim/strength.hpp"

namespace hbsim {

struct DesignCell {
  FormatId format;
  SeedingPolicy policy;
  bool operator==(const DesignCell&) const = default;
};

// Every design/policy cell in canonical column order. Round robin appears
// once; its draw is meaningless.
std::vector<DesignCell> all_design_cells();

struct SimulationConfig {
  std::vector<DesignCell> designs;
  StrengthParams params;
  bool deterministic = false;  // better rank always wins; params ignored
  std::uint64_t runs = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Monte Carlo over `runs` tournaments per design. All designs in one config
// share match outcomes run by run (common random numbers); draws and
// tie-breaks use per-design substreams, so adding or removing designs never
// changes another design's results. Deterministic for fixed (config, seed)
// regardless of thread count.
std::vector<MetricsReport> run_experiment(const SimulationConfig& config);

struct ConvergencePoint {
  std::uint64_t runs;
  double win_top1;         // champion is rank 1
  double both_top_two;     // final pairs ranks 1 and 2
};

// Snapshots of one growing sample at the given ascending run counts.
// The config must hold exactly one design.
std::vector<ConvergencePoint> convergence_trace(const SimulationConfig& config,
                                                const std::vector<std::uint64_t>& checkpoints);

struct ValidationCheck {
  std::string name;
  bool pass;
  double observed;
  double expected;
  double tolerance;
};

// Structural sanity battery on degenerate win models: equal teams place
// uniformly; a strict strength order forces the expected podium, semifinal
// pairings, and reachable ranks.
std::vector<ValidationCheck> run_validation(std::uint64_t runs, std::uint64_t seed,
                                            unsigned threads);

}  // namespace hbsim
