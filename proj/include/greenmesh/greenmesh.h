/* greenmesh C API: solar-rechargeable mesh router placement planning.
 *
 * All functions return gm_status; on failure gm_last_error() gives a
 * human-readable message for the calling thread. Handles are opaque and
 * freed with their gm_*_free function. The library itself is thread-safe:
 * distinct handles may be used from distinct threads concurrently.
 */
#ifndef GREENMESH_H
#define GREENMESH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    GM_OK = 0,
    GM_ERR_INVALID_ARGUMENT = 1, /* bad configuration or parameter */
    GM_ERR_VALIDATION = 2,       /* type invariant violated */
    GM_ERR_FORMAT = 3,           /* unparseable input file */
    GM_ERR_IO = 4,               /* file system failure */
    GM_ERR_RESOURCE_GUARD = 5,   /* instance too large for exact search */
    GM_ERR_INTERNAL = 6
} gm_status;

typedef enum {
    GM_SOLVER_GREEDY = 0,
    GM_SOLVER_EXHAUSTIVE = 1,
    GM_SOLVER_SA = 2,
    GM_SOLVER_DE = 3
} gm_solver_kind;

typedef enum {
    GM_POLICY_NEAREST = 0,
    GM_POLICY_PF = 1
} gm_assoc_policy;

typedef struct gm_scenario gm_scenario;
typedef struct gm_result gm_result;

typedef struct {
    double field_width;
    double field_height;
    int grid_rows;
    int grid_cols;
    int num_clients;
    int num_slots;
    double demand_high;        /* night demand is 0.2x this */
    double coverage_radius;    /* <= 0: grid cell diagonal */
    double failure_threshold;  /* f_th */
    double gateway_demand_threshold; /* < 0: resolved from a reference run */
} gm_generator_config;

typedef struct {
    double capacity;
    double charge_rate;
    double discharge_rate_base;
    double discharge_per_demand;
} gm_energy_params;

typedef struct {
    int max_iterations;   /* SA steps / DE generations */
    int population_size;  /* NP, >= 4 */
    double crossover_rate;
    double scale_factor;
    double sa_initial_temp;
    double sa_cooling_alpha;
    double penalty_lambda; /* <= 0: default 10 * |S| */
    uint64_t seed;
} gm_solver_config;

/* Fill a struct with the library defaults. */
void gm_generator_config_default(gm_generator_config* out);
void gm_energy_params_default(gm_energy_params* out);
void gm_solver_config_default(gm_solver_config* out);

/* Thread-local message for the most recent failing call. Never NULL. */
const char* gm_last_error(void);

/* ---- Scenarios ---------------------------------------------------------- */

gm_status gm_scenario_generate(const gm_generator_config* config,
                               uint64_t seed, gm_scenario** out);
gm_status gm_scenario_load(const char* path, gm_scenario** out);
gm_status gm_scenario_save(const gm_scenario* scenario, const char* path);
void gm_scenario_free(gm_scenario* scenario);

int gm_scenario_num_candidates(const gm_scenario* scenario);
int gm_scenario_num_clients(const gm_scenario* scenario);
int gm_scenario_num_slots(const gm_scenario* scenario);

/* ---- Solving ------------------------------------------------------------ */

gm_status gm_solve(const gm_scenario* scenario, gm_solver_kind solver,
                   const gm_energy_params* energy,
                   const gm_solver_config* config, gm_assoc_policy policy,
                   gm_result** out);
void gm_result_free(gm_result* result);

int gm_result_node_count(const gm_result* result);
double gm_result_failure_rate(const gm_result* result);
int gm_result_feasible(const gm_result* result);
int gm_result_sustainable(const gm_result* result);
int64_t gm_result_evaluations(const gm_result* result);
/* 1 if candidate j hosts a node / is gateway-flagged, else 0. */
int gm_result_placed(const gm_result* result, int candidate);
int gm_result_gateway(const gm_result* result, int candidate);

gm_status gm_result_write_trace_csv(const gm_result* result, const char* path);
gm_status gm_result_write_energy_csv(const gm_result* result, const char* path);

/* ---- Experiments -------------------------------------------------------- */

/* config_json schema (all sizes/paths UTF-8):
 *   {
 *     "scenario_path": "...",            // or "generate": {...}
 *     "generate": {"grid_rows":6, ..., "seed":42},
 *     "solvers": ["greedy"|"exhaustive"|"sa"|"de", ...],
 *     "seeds": [1,2,3],
 *     "out_dir": "...",
 *     "jobs": 4,
 *     "policy": "nearest"|"pf",
 *     "solver_config": {...}, "energy_params": {...}
 *   }
 * Writes trace/energy CSVs per (solver, seed) plus summary.csv, and when
 * report_out is non-NULL returns the text report (free with gm_string_free).
 */
gm_status gm_experiment_run_json(const char* config_json, char** report_out);

/* Render the text report from a previously written summary.csv. */
gm_status gm_report_from_summary_csv(const char* summary_path, char** report_out);

void gm_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GREENMESH_H */
