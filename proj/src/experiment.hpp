#ifndef GREENMESH_EXPERIMENT_HPP
#define GREENMESH_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvers.hpp"

namespace greenmesh {

struct ExperimentConfig {
    // Either a scenario file or generator settings; the file wins when set.
    std::string scenario_path;
    GeneratorConfig generator;
    std::uint64_t generator_seed = 42;

    std::vector<SolverKind> solvers;
    std::vector<std::uint64_t> seeds;
    std::string out_dir;
    int jobs = 1;
    AssocPolicy policy = AssocPolicy::NearestCell;
    SolverConfig solver_config;
    EnergyParams energy_params;

    void validate() const;
};

struct SolverSummary {
    std::string solver;
    int num_seeds = 0;
    double node_count_median = 0.0;
    int node_count_min = 0;
    int node_count_max = 0;
    double failure_rate_median = 0.0;
    double failure_rate_min = 0.0;
    double failure_rate_max = 0.0;
    double feasible_fraction = 0.0;
    std::int64_t evaluations_median = 0;
};

struct ExperimentSummary {
    std::vector<SolverSummary> rows; // solver name ascending
};

// JSON wire format for the C API / CLI; see README for the schema.
ExperimentConfig experiment_config_from_json(const std::string& text);

// Runs every (solver, seed) job, writes per-job trace_<solver>_<seed>.csv and
// energy_<solver>_<seed>.csv plus summary.csv under cfg.out_dir, and returns
// the aggregate. Jobs run in parallel up to cfg.jobs.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

// Fixed-width text table, one row per solver, name ascending.
std::string emit_report(const ExperimentSummary& summary);

std::string summary_to_csv(const ExperimentSummary& summary);
ExperimentSummary summary_from_csv_file(const std::string& path);

} // namespace greenmesh

#endif
