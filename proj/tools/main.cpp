#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "handballsim/hbsim.h"
#include "render.hpp"

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string preset;
  std::string format = "all";
  std::string seeding = "both";
  double alpha = 4.0;
  double beta = 24.0;
  std::uint64_t runs = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out;
  std::string emit = "table";
};

using ConfigPtr = std::unique_ptr<hbsim_config, decltype(&hbsim_config_free)>;
using ResultsPtr = std::unique_ptr<hbsim_results, decltype(&hbsim_results_free)>;

[[noreturn]] void die(const std::string& message, int code) {
  std::cerr << "hbsim: " << message << "\n";
  std::exit(code);
}

void check(hbsim_status status) {
  if (status != HBSIM_OK) die(hbsim_last_error(), 3);
}

std::vector<std::pair<std::string, std::string>> expand_designs(const Options& opt) {
  const std::vector<std::string> formats =
      opt.format == "all" ? std::vector<std::string>{"rr", "ko", "g64", "g66", "g46"}
                          : std::vector<std::string>{opt.format};
  const std::vector<std::string> seedings =
      opt.seeding == "both" ? std::vector<std::string>{"seeded", "random"}
                            : std::vector<std::string>{opt.seeding};
  std::vector<std::pair<std::string, std::string>> designs;
  for (const auto& format : formats) {
    if (format == "rr")
      designs.emplace_back(format, "seeded");  // policy is irrelevant without a draw
    else
      for (const auto& seeding : seedings) designs.emplace_back(format, seeding);
  }
  return designs;
}

ConfigPtr make_config(const Options& opt, double alpha, double beta,
                      const std::vector<std::pair<std::string, std::string>>& designs) {
  ConfigPtr config(hbsim_config_new(), &hbsim_config_free);
  if (!config) die("out of memory", 3);
  check(hbsim_config_set_strength(config.get(), alpha, beta));
  check(hbsim_config_set_runs(config.get(), opt.runs));
  check(hbsim_config_set_seed(config.get(), opt.seed));
  check(hbsim_config_set_threads(config.get(), opt.threads));
  for (const auto& [format, seeding] : designs)
    check(hbsim_config_add_design(config.get(), format.c_str(), seeding.c_str()));
  return config;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write " + path.string(), 2);
  out << content;
}

fs::path ensure_out_dir(const Options& opt) {
  if (opt.out.empty()) die("--emit " + opt.emit + " needs --out", 2);
  fs::path dir(opt.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) die("cannot create " + dir.string() + ": " + ec.message(), 2);
  return dir;
}

std::string file_stem(const hbsim_report* report) {
  std::string stem = hbsim_report_format(report);
  const std::string seeding = hbsim_report_seeding(report);
  if (!seeding.empty()) stem += "_" + seeding;
  return stem;
}

std::vector<const hbsim_report*> collect(const hbsim_results* results) {
  std::vector<const hbsim_report*> reports;
  for (int i = 0; i < hbsim_results_count(results); ++i)
    reports.push_back(hbsim_results_report(results, i));
  return reports;
}

std::vector<const hbsim_report*> policy_cells(const std::vector<const hbsim_report*>& reports,
                                              const std::string& seeding, bool include_rr) {
  std::vector<const hbsim_report*> out;
  for (const auto* r : reports) {
    const std::string cell_seeding = hbsim_report_seeding(r);
    if (cell_seeding == seeding || (include_rr && cell_seeding.empty())) out.push_back(r);
  }
  return out;
}

void emit_figdata(const Options& opt, const std::vector<const hbsim_report*>& reports,
                  const fs::path& dir, const std::string& suffix) {
  for (const std::string seeding : {"seeded", "random"}) {
    const auto cells = policy_cells(reports, seeding, true);
    if (cells.size() < 2 && policy_cells(reports, seeding, false).empty()) continue;
    const std::string tag = "_" + seeding + suffix + ".csv";
    write_file(dir / ("win_best_p" + tag), render::win_best_p_csv(cells, 24));

    const hbsim_report* rr = nullptr;
    for (const auto* r : cells)
      if (std::string(hbsim_report_format(r)) == "rr") rr = r;
    std::vector<const hbsim_report*> non_rr = policy_cells(reports, seeding, false);
    if (rr != nullptr && !non_rr.empty())
      write_file(dir / ("win_diff_vs_rr" + tag), render::win_diff_vs_rr_csv(non_rr, rr, 12));
    if (!non_rr.empty())
      write_file(dir / ("final_reach" + tag), render::final_reach_csv(non_rr, 8));

    const hbsim_report* ko = nullptr;
    for (const auto* r : non_rr)
      if (std::string(hbsim_report_format(r)) == "ko") ko = r;
    if (ko != nullptr) {
      std::vector<const hbsim_report*> others;
      for (const auto* r : cells)
        if (r != ko) others.push_back(r);
      if (!others.empty())
        write_file(dir / ("placement_diff_vs_ko" + tag),
                   render::placement_diff_csv(others, ko));
    }
  }
  (void)opt;
}

void emit_batch(const Options& opt, const hbsim_results* results, const std::string& heading,
                const std::string& suffix) {
  const auto reports = collect(results);
  if (opt.emit == "table") {
    const std::string table = render::summary_table(reports, heading);
    std::cout << table << "\n";
    if (!opt.out.empty()) {
      const fs::path dir = ensure_out_dir(opt);
      write_file(dir / ("summary" + suffix + ".txt"), table);
    }
    return;
  }
  if (opt.emit == "csv" || opt.emit == "json") {
    if (opt.out.empty()) {
      std::cout << render::summary_csv(reports);
      return;
    }
    const fs::path dir = ensure_out_dir(opt);
    write_file(dir / ("summary" + suffix + ".csv"), render::summary_csv(reports));
    for (const auto* report : reports) {
      const std::string stem = file_stem(report) + suffix;
      if (opt.emit == "csv")
        write_file(dir / ("report_" + stem + ".csv"), render::report_csv(report));
      else
        write_file(dir / ("report_" + stem + ".json"), render::report_json(report));
    }
    return;
  }
  if (opt.emit == "figdata") {
    const fs::path dir = ensure_out_dir(opt);
    write_file(dir / ("summary" + suffix + ".csv"), render::summary_csv(reports));
    emit_figdata(opt, reports, dir, suffix);
    return;
  }
  die("unknown emit mode " + opt.emit, 2);
}

int run_validation_preset(const Options& opt) {
  std::unique_ptr<hbsim_validation, decltype(&hbsim_validation_free)> validation(
      hbsim_validate(opt.runs, opt.seed, opt.threads), &hbsim_validation_free);
  if (!validation) die(hbsim_last_error(), 3);
  std::string text;
  bool all_pass = true;
  for (int i = 0; i < hbsim_validation_count(validation.get()); ++i) {
    double observed = 0, expected = 0, tolerance = 0;
    hbsim_validation_values(validation.get(), i, &observed, &expected, &tolerance);
    const bool pass = hbsim_validation_passed(validation.get(), i) == 1;
    all_pass = all_pass && pass;
    char line[256];
    std::snprintf(line, sizeof line, "%s %s observed=%.6f expected=%.6f tolerance=%.6f\n",
                  pass ? "PASS" : "FAIL", hbsim_validation_name(validation.get(), i), observed,
                  expected, tolerance);
    text += line;
  }
  std::cout << text;
  if (!opt.out.empty()) write_file(ensure_out_dir(opt) / "validation.txt", text);
  return all_pass ? 0 : 1;
}

int run_convergence_preset(Options opt) {
  // The studied case is the knockout format with an unseeded draw; explicit
  // single-design flags override it.
  if (opt.format == "all") opt.format = "ko";
  if (opt.seeding == "both") opt.seeding = "random";
  const auto designs = expand_designs(opt);
  if (designs.size() != 1) die("convergence needs a single design", 2);
  ConfigPtr config = make_config(opt, opt.alpha, opt.beta, designs);

  std::vector<std::uint64_t> checkpoints;  // 1000, 2500, 5000, 10000, 25000, ...
  for (std::uint64_t base = 1000; base <= 10000000ull; base *= 10)
    for (std::uint64_t c : {base, base * 5 / 2, base * 5})
      if (c <= opt.runs && (checkpoints.empty() || c > checkpoints.back()))
        checkpoints.push_back(c);
  if (checkpoints.empty() || checkpoints.back() != opt.runs) checkpoints.push_back(opt.runs);

  std::vector<double> win_top1(checkpoints.size()), both_top_two(checkpoints.size());
  check(hbsim_convergence(config.get(), checkpoints.data(), int(checkpoints.size()),
                          win_top1.data(), both_top_two.data()));
  const std::string csv = render::convergence_csv(checkpoints, win_top1, both_top_two);
  std::cout << csv;
  if (!opt.out.empty()) write_file(ensure_out_dir(opt) / "convergence.csv", csv);
  return 0;
}

std::string batch_heading(const Options& opt, double alpha, double beta) {
  char line[128];
  std::snprintf(line, sizeof line, "alpha=%g beta=%g runs=%llu seed=%llu", alpha, beta,
                (unsigned long long)opt.runs, (unsigned long long)opt.seed);
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Monte Carlo comparison of 24-team tournament designs"};
  app.add_option("--preset", opt.preset, "baseline, sensitivity_alpha, sensitivity_beta, convergence, validation")
      ->check(CLI::IsMember({"baseline", "sensitivity_alpha", "sensitivity_beta", "convergence",
                             "validation"}));
  app.add_option("--format", opt.format, "rr, ko, g64, g66, g46, all")
      ->check(CLI::IsMember({"rr", "ko", "g64", "g66", "g46", "all"}));
  app.add_option("--seeding", opt.seeding, "seeded, random, both")
      ->check(CLI::IsMember({"seeded", "random", "both"}));
  app.add_option("--alpha", opt.alpha, "strength discrimination, >= 0");
  app.add_option("--beta", opt.beta, "strength compression, >= 0");
  app.add_option("--runs", opt.runs, "tournaments per design")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "master seed");
  app.add_option("--threads", opt.threads, "worker threads, 0 = hardware");
  app.add_option("--out", opt.out, "output directory");
  app.add_option("--emit", opt.emit, "table, csv, json, figdata")
      ->check(CLI::IsMember({"table", "csv", "json", "figdata"}));
  CLI11_PARSE(app, argc, argv);

  if (opt.preset == "validation") return run_validation_preset(opt);
  if (opt.preset == "convergence") return run_convergence_preset(opt);

  if (opt.preset == "baseline") {
    opt.format = "all";
    opt.seeding = "both";
  }
  std::vector<std::pair<double, double>> settings;
  std::vector<std::string> suffixes;
  if (opt.preset == "sensitivity_alpha") {
    opt.format = "all";
    opt.seeding = "both";
    settings = {{3.0, opt.beta}, {5.0, opt.beta}};
    suffixes = {"_alpha3", "_alpha5"};
  } else if (opt.preset == "sensitivity_beta") {
    opt.format = "all";
    opt.seeding = "both";
    settings = {{opt.alpha, 18.0}, {opt.alpha, 36.0}};
    suffixes = {"_beta18", "_beta36"};
  } else {
    settings = {{opt.alpha, opt.beta}};
    suffixes = {""};
  }

  const auto designs = expand_designs(opt);
  for (std::size_t i = 0; i < settings.size(); ++i) {
    const auto [alpha, beta] = settings[i];
    ConfigPtr config = make_config(opt, alpha, beta, designs);
    ResultsPtr results(hbsim_run(config.get()), &hbsim_results_free);
    if (!results) die(hbsim_last_error(), 3);
    emit_batch(opt, results.get(), batch_heading(opt, alpha, beta), suffixes[i]);
  }
  return 0;
}
