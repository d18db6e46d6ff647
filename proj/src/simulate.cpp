#include "handballsim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "handballsim/draw.hpp"
#include "handballsim/engine.hpp"
#include "handballsim/error.hpp"
#include "handballsim/outcomes.hpp"

namespace hbsim {

namespace {

// Stream addressing. Outcome draws share one tag so every design sees the
// same match results; draw and tie-break tags are keyed by the design
// identity, never by its position in the config.
constexpr std::uint32_t kOutcomeTag = 1;
std::uint32_t draw_tag(DesignCell d) {
  return 0x10u + 2u * std::uint32_t(d.format) + std::uint32_t(d.policy);
}
std::uint32_t tie_tag(DesignCell d) {
  return 0x30u + 2u * std::uint32_t(d.format) + std::uint32_t(d.policy);
}

DesignCell normalize(DesignCell cell) {
  // A single-group format has no draw, so both policies are the same design.
  if (format_spec(cell.format).prelim.groups == 1) cell.policy = SeedingPolicy::seeded;
  return cell;
}

std::vector<DesignCell> checked_designs(const SimulationConfig& config) {
  if (config.designs.empty()) throw std::invalid_argument("no designs configured");
  if (config.runs == 0) throw std::invalid_argument("run count must be positive");
  std::vector<DesignCell> designs;
  for (DesignCell cell : config.designs) {
    cell = normalize(cell);
    validate(format_spec(cell.format));
    if (std::find(designs.begin(), designs.end(), cell) != designs.end())
      throw std::invalid_argument("duplicate design cell in config");
    designs.push_back(cell);
  }
  return designs;
}

ProbMatrix model_matrix(const SimulationConfig& config) {
  return config.deterministic ? deterministic_matrix() : probability_matrix(config.params);
}

unsigned effective_threads(const SimulationConfig& config, std::uint64_t span) {
  unsigned t = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  if (t == 0) t = 1;
  return unsigned(std::min<std::uint64_t>(t, std::max<std::uint64_t>(span, 1)));
}

void accumulate_runs(const SimulationConfig& config, const std::vector<DesignCell>& designs,
                     const ProbMatrix& probs, std::uint64_t begin, std::uint64_t end,
                     std::vector<MetricAccumulator>& accs) {
  for (std::uint64_t run = begin; run < end; ++run) {
    try {
      RandomStream outcome_rng(config.seed, run, kOutcomeTag);
      const OutcomeTables tables = generate_outcomes(probs, outcome_rng);
      for (std::size_t d = 0; d < designs.size(); ++d) {
        const FormatSpec& spec = format_spec(designs[d].format);
        RandomStream draw_rng(config.seed, run, draw_tag(designs[d]));
        RandomStream tie_rng(config.seed, run, tie_tag(designs[d]));
        const GroupAssignment assignment = draw_groups(spec, designs[d].policy, draw_rng);
        accs[d].add(play_tournament(spec, assignment, tables, tie_rng));
      }
    } catch (const std::exception& e) {
      throw StructuralError("run " + std::to_string(run) + ": " + e.what());
    }
  }
}

// Workers own private accumulators; merging in worker order keeps the result
// independent of scheduling because every tally is an integer.
std::vector<MetricAccumulator> accumulate_parallel(const SimulationConfig& config,
                                                   const std::vector<DesignCell>& designs,
                                                   const ProbMatrix& probs, std::uint64_t begin,
                                                   std::uint64_t end) {
  const std::uint64_t span = end - begin;
  const unsigned threads = effective_threads(config, span);
  std::vector<MetricAccumulator> merged(designs.size());
  if (threads <= 1) {
    accumulate_runs(config, designs, probs, begin, end, merged);
    return merged;
  }
  std::vector<std::vector<MetricAccumulator>> partial(
      threads, std::vector<MetricAccumulator>(designs.size()));
  std::vector<std::string> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = begin + span * w / threads;
    const std::uint64_t hi = begin + span * (w + 1) / threads;
    pool.emplace_back([&, w, lo, hi] {
      try {
        accumulate_runs(config, designs, probs, lo, hi, partial[w]);
      } catch (const std::exception& e) {
        errors[w] = e.what();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (!err.empty()) throw StructuralError(err);
  for (unsigned w = 0; w < threads; ++w)
    for (std::size_t d = 0; d < designs.size(); ++d) merged[d].merge(partial[w][d]);
  return merged;
}

}  // namespace

std::vector<DesignCell> all_design_cells() {
  std::vector<DesignCell> cells{{FormatId::rr, SeedingPolicy::seeded}};
  for (FormatId f : {FormatId::ko, FormatId::g64, FormatId::g66, FormatId::g46})
    for (SeedingPolicy s : {SeedingPolicy::seeded, SeedingPolicy::random})
      cells.push_back({f, s});
  return cells;
}

std::vector<MetricsReport> run_experiment(const SimulationConfig& config) {
  const std::vector<DesignCell> designs = checked_designs(config);
  const ProbMatrix probs = model_matrix(config);
  auto accs = accumulate_parallel(config, designs, probs, 0, config.runs);
  std::vector<MetricsReport> reports;
  reports.reserve(designs.size());
  for (std::size_t d = 0; d < designs.size(); ++d)
    reports.push_back(finalize(accs[d], designs[d].format, designs[d].policy,
                               config.deterministic ? 0.0 : config.params.alpha,
                               config.deterministic ? 0.0 : config.params.beta));
  return reports;
}

std::vector<ConvergencePoint> convergence_trace(const SimulationConfig& config,
                                                const std::vector<std::uint64_t>& checkpoints) {
  const std::vector<DesignCell> designs = checked_designs(config);
  if (designs.size() != 1)
    throw std::invalid_argument("convergence trace needs exactly one design");
  if (checkpoints.empty()) throw std::invalid_argument("no checkpoints given");
  for (std::size_t i = 0; i < checkpoints.size(); ++i)
    if (checkpoints[i] == 0 || (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
      throw std::invalid_argument("checkpoints must be positive and strictly ascending");

  const ProbMatrix probs = model_matrix(config);
  MetricAccumulator total;
  std::vector<ConvergencePoint> points;
  std::uint64_t done = 0;
  for (std::uint64_t checkpoint : checkpoints) {
    auto segment = accumulate_parallel(config, designs, probs, done, checkpoint);
    total.merge(segment[0]);
    done = checkpoint;
    const double n = double(total.runs);
    points.push_back({checkpoint, double(total.place_count[0][0]) / n,
                      double(total.both_top_two_final) / n});
  }
  return points;
}

std::vector<ValidationCheck> run_validation(std::uint64_t runs, std::uint64_t seed,
                                            unsigned threads) {
  std::vector<ValidationCheck> checks;
  const auto cell_label = [](const MetricsReport& r) {
    return r.seeding.empty() ? r.format : r.format + "/" + r.seeding;
  };

  // Equal teams: every rank takes each podium place equally often.
  SimulationConfig uniform;
  uniform.designs = all_design_cells();
  uniform.params = {0.0, 24.0};
  uniform.runs = runs;
  uniform.seed = seed;
  uniform.threads = threads;
  for (const MetricsReport& r : run_experiment(uniform)) {
    double max_dev = 0;
    for (int t = 0; t < kTeams; ++t)
      for (int p = 0; p < 4; ++p)
        max_dev = std::max(max_dev, std::abs(r.placement[t][p] - 1.0 / kTeams));
    checks.push_back({"uniform placement " + cell_label(r), max_dev <= 0.005, max_dev, 0.0, 0.005});
  }

  // Strict strength order.
  SimulationConfig det;
  det.designs = {{FormatId::g66, SeedingPolicy::seeded}, {FormatId::g46, SeedingPolicy::seeded},
                 {FormatId::ko, SeedingPolicy::seeded},  {FormatId::g64, SeedingPolicy::seeded},
                 {FormatId::ko, SeedingPolicy::random},  {FormatId::g64, SeedingPolicy::random},
                 {FormatId::g66, SeedingPolicy::random}, {FormatId::g46, SeedingPolicy::random}};
  det.deterministic = true;
  det.runs = runs;
  det.seed = seed;
  det.threads = threads;
  const auto reports = run_experiment(det);
  const auto find = [&](FormatId f, SeedingPolicy s) -> const MetricsReport& {
    for (const auto& r : reports)
      if (r.format == format_name(f) && r.seeding == seeding_name(s)) return r;
    throw std::logic_error("validation report missing");
  };

  // Seeded pots plus strict order put ranks 1-4 on the podium in rank order.
  for (FormatId f : {FormatId::g66, FormatId::g46}) {
    const auto& r = find(f, SeedingPolicy::seeded);
    double observed = 1.0;
    for (int p = 0; p < 4; ++p) observed = std::min(observed, r.placement[p][p]);
    checks.push_back(
        {"strict order podium " + cell_label(r), observed == 1.0, observed, 1.0, 0.0});
  }
  // Single-elimination endgames: ranks 1 and 2 land in the same semifinal
  // exactly when their groups feed the same half of the bracket.
  for (FormatId f : {FormatId::ko, FormatId::g64}) {
    const auto& r = find(f, SeedingPolicy::seeded);
    const double observed = r.top_pair_semifinal;
    checks.push_back({"strict order semifinal pairing " + cell_label(r),
                      std::abs(observed - 1.0 / 3.0) <= 0.01, observed, 1.0 / 3.0, 0.01});
  }
  // Worst rank that can still reach a semifinal. The random sweep checks the
  // bound is never exceeded; the extreme assignments occur only with
  // probability ~1e-5 per draw, so tightness is shown on a crafted
  // worst-case draw rather than left to luck.
  const struct {
    FormatId format;
    int bound;
    std::vector<std::vector<int>> worst_draw;
  } reach[] = {
      {FormatId::ko, 7,
       {{8, 9, 10, 11, 12, 13}, {1, 2, 3, 7, 14, 15}, {4, 5, 16, 17, 18, 19},
        {6, 20, 21, 22, 23, 24}}},
      {FormatId::g64, 14,
       {{13, 14, 17, 18, 21, 22}, {15, 16, 19, 20, 23, 24}, {1, 2, 3, 4, 5, 6},
        {7, 8, 9, 10, 11, 12}}},
      {FormatId::g66, 14,
       {{13, 15, 17, 19, 21, 23}, {14, 16, 18, 20, 22, 24}, {1, 2, 3, 4, 5, 6},
        {7, 8, 9, 10, 11, 12}}},
      {FormatId::g46, 6,
       {{1, 2, 3, 4}, {5, 6, 20, 21}, {7, 8, 22, 23}, {9, 10, 11, 12}, {13, 14, 15, 16},
        {17, 18, 19, 24}}},
  };
  const ProbMatrix strict = deterministic_matrix();
  for (const auto& [f, bound, worst_draw] : reach) {
    const auto& r = find(f, SeedingPolicy::random);
    RandomStream outcome_rng(seed, 0, 0xD0u + 2u * std::uint32_t(f));
    const OutcomeTables tables = generate_outcomes(strict, outcome_rng);
    RandomStream tie_rng(seed, 0, 0xD1u + 2u * std::uint32_t(f));
    const TournamentResult demo =
        play_tournament(format_spec(f), GroupAssignment{worst_draw}, tables, tie_rng);
    int observed = r.max_semifinal_rank;
    for (const auto& pair : demo.semifinals) observed = std::max({observed, pair[0], pair[1]});
    checks.push_back({"strict order semifinal reach " + cell_label(r), observed == bound,
                      double(observed), double(bound), 0.0});
  }
  return checks;
}

}  // namespace hbsim
