#pragma once

#include <string>
#include <vector>

#include "handballsim/hbsim.h"

// Text renderings of simulation reports, built purely on the C API. All
// output is locale-free and fixed-precision so identical inputs produce
// byte-identical files.
namespace render {

// "RR", "KO/S", "G64/R", ...
std::string cell_label(const hbsim_report* report);

// Comparison grid in the canonical metric row order: game counts, average
// podium ranks, top-seed win share, final quality, final balance.
// Aligned text at 2 decimals; CSV at 6.
std::string summary_table(const std::vector<const hbsim_report*>& reports,
                          const std::string& heading);
std::string summary_csv(const std::vector<const hbsim_report*>& reports);

// Full per-design report: scalars, cumulative series, placement table.
std::string report_csv(const hbsim_report* report);
std::string report_json(const hbsim_report* report);

// Figure-style series. Policy filtering is the caller's job.
std::string win_best_p_csv(const std::vector<const hbsim_report*>& reports, int max_p);
std::string win_diff_vs_rr_csv(const std::vector<const hbsim_report*>& reports,
                               const hbsim_report* rr, int max_p);
std::string final_reach_csv(const std::vector<const hbsim_report*>& reports, int max_p);
// Placement differences against a reference design, in percentage points.
std::string placement_diff_csv(const std::vector<const hbsim_report*>& reports,
                               const hbsim_report* reference);

std::string convergence_csv(const std::vector<uint64_t>& checkpoints,
                            const std::vector<double>& win_top1,
                            const std::vector<double>& both_top_two);

}  // namespace render
