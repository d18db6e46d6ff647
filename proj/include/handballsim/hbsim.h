/* C interface to the handball tournament simulator.
 *
 * All functions returning hbsim_status report failures through the code and
 * leave outputs untouched; hbsim_last_error() describes the most recent
 * failure on the calling thread. Handles are opaque; every *_new has a
 * matching *_free, and reports are borrowed from their result set.
 */
#ifndef HANDBALLSIM_HBSIM_H
#define HANDBALLSIM_HBSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hbsim_status {
  HBSIM_OK = 0,
  HBSIM_ERR_ARGUMENT = 1,  /* invalid value, name, or handle state */
  HBSIM_ERR_STRUCTURE = 2, /* tournament structure violated during a run */
  HBSIM_ERR_INTERNAL = 3
} hbsim_status;

typedef struct hbsim_config hbsim_config;
typedef struct hbsim_results hbsim_results;
typedef struct hbsim_report hbsim_report;
typedef struct hbsim_validation hbsim_validation;

/* Thread-local message for the last failed call; never NULL. */
const char* hbsim_last_error(void);

/* ---- configuration ----------------------------------------------------- */

hbsim_config* hbsim_config_new(void);
void hbsim_config_free(hbsim_config* config);

/* alpha, beta >= 0; defaults 4 and 24. */
hbsim_status hbsim_config_set_strength(hbsim_config* config, double alpha, double beta);
/* Nonzero: the better rank always wins and strength parameters are ignored. */
hbsim_status hbsim_config_set_deterministic(hbsim_config* config, int enabled);
hbsim_status hbsim_config_set_runs(hbsim_config* config, uint64_t runs);
hbsim_status hbsim_config_set_seed(hbsim_config* config, uint64_t seed);
/* 0 picks the hardware thread count. Thread count never changes results. */
hbsim_status hbsim_config_set_threads(hbsim_config* config, unsigned threads);
/* format: "rr", "ko", "g64", "g66", "g46"; seeding: "seeded" or "random". */
hbsim_status hbsim_config_add_design(hbsim_config* config, const char* format,
                                     const char* seeding);

/* ---- simulation -------------------------------------------------------- */

/* NULL on failure. One report per configured design, in insertion order. */
hbsim_results* hbsim_run(const hbsim_config* config);
void hbsim_results_free(hbsim_results* results);
int hbsim_results_count(const hbsim_results* results);
/* Borrowed; valid until the result set is freed. NULL if out of range. */
const hbsim_report* hbsim_results_report(const hbsim_results* results, int index);
const hbsim_report* hbsim_results_find(const hbsim_results* results, const char* format,
                                       const char* seeding);

/* ---- report queries ---------------------------------------------------- */

typedef enum hbsim_metric {
  HBSIM_METRIC_AVG_RANK_1 = 0, /* average pre-tournament rank of the champion */
  HBSIM_METRIC_AVG_RANK_2,
  HBSIM_METRIC_AVG_RANK_3,
  HBSIM_METRIC_AVG_RANK_4,
  HBSIM_METRIC_WIN_TOP1,            /* rank 1 wins the tournament */
  HBSIM_METRIC_FINAL_QUALITY,       /* expected sum of finalist ranks */
  HBSIM_METRIC_FINAL_BALANCE,       /* expected absolute finalist rank gap */
  HBSIM_METRIC_BOTH_TOP_TWO_FINAL,  /* final pairs ranks 1 and 2 */
  HBSIM_METRIC_TOP_PAIR_SEMIFINAL,  /* ranks 1 and 2 meet in a semifinal */
  HBSIM_METRIC_MAX_SEMIFINAL_RANK,  /* worst rank seen in any semifinal */
  HBSIM_METRIC_MIN_GAMES,           /* fewest matches any team plays */
  HBSIM_METRIC_MAX_GAMES,
  HBSIM_METRIC_TOTAL_GAMES
} hbsim_metric;

typedef enum hbsim_series {
  HBSIM_SERIES_WIN_BEST_P = 0,   /* champion among the best p, cumulative */
  HBSIM_SERIES_FINAL_REACH_BEST_P, /* one of the best p reaches the final */
  HBSIM_SERIES_PLACEMENT_1,      /* per rank: probability of finishing first */
  HBSIM_SERIES_PLACEMENT_2,
  HBSIM_SERIES_PLACEMENT_3,
  HBSIM_SERIES_PLACEMENT_4
} hbsim_series;

const char* hbsim_report_format(const hbsim_report* report);
/* Empty string for designs without a draw (single round robin). */
const char* hbsim_report_seeding(const hbsim_report* report);
uint64_t hbsim_report_runs(const hbsim_report* report);
/* Nonzero when the design ends in a final (every design except "rr"). */
int hbsim_report_has_final(const hbsim_report* report);

/* Either output may be NULL. Final metrics fail for designs without one. */
hbsim_status hbsim_report_metric(const hbsim_report* report, hbsim_metric metric,
                                 double* value, double* std_error);
/* values/std_errors hold 24 doubles indexed by p-1 or rank-1; either may be
 * NULL. Final-reach series fails for designs without a final. */
hbsim_status hbsim_report_series(const hbsim_report* report, hbsim_series series,
                                 double* values, double* std_errors);

/* Differences between two reports of the same experiment (equal parameters
 * and run count). out holds 24 doubles. */
hbsim_status hbsim_diff_win_best_p(const hbsim_report* report, const hbsim_report* reference,
                                   double* out);
/* place in 1..4. */
hbsim_status hbsim_diff_placement(const hbsim_report* report, const hbsim_report* reference,
                                  int place, double* out);

/* ---- format structure -------------------------------------------------- */

/* out[m] = number of teams playing exactly m matches, m in 0..23. */
hbsim_status hbsim_match_counts(const char* format, uint32_t out[24]);
/* JSON description of a format's stages and bracket wiring. Returns the
 * length written (excluding the terminator), or -1 on error; with cap 0
 * returns the required length. */
int hbsim_format_describe(const char* format, char* buf, size_t cap);

/* ---- convergence ------------------------------------------------------- */

/* Snapshots of one growing sample; config must hold exactly one design.
 * checkpoints: n strictly ascending positive run counts. Each output array
 * (may be NULL) receives n values. */
hbsim_status hbsim_convergence(const hbsim_config* config, const uint64_t* checkpoints, int n,
                               double* win_top1, double* both_top_two);

/* ---- validation battery ------------------------------------------------ */

hbsim_validation* hbsim_validate(uint64_t runs, uint64_t seed, unsigned threads);
void hbsim_validation_free(hbsim_validation* validation);
int hbsim_validation_count(const hbsim_validation* validation);
/* 1 pass, 0 fail, -1 out of range. */
int hbsim_validation_passed(const hbsim_validation* validation, int index);
const char* hbsim_validation_name(const hbsim_validation* validation, int index);
hbsim_status hbsim_validation_values(const hbsim_validation* validation, int index,
                                     double* observed, double* expected, double* tolerance);

#ifdef __cplusplus
}
#endif

#endif /* HANDBALLSIM_HBSIM_H */
