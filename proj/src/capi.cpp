#include "greenmesh/greenmesh.h"

#include <cstring>
#include <fstream>
#include <string>

#include "errors.hpp"
#include "experiment.hpp"

using namespace greenmesh;

struct gm_scenario {
    Scenario scenario;
};

struct gm_result {
    PlacementResult result;
};

namespace {

thread_local std::string g_last_error = "";

gm_status fail(gm_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Maps the C++ error hierarchy onto C status codes.
template <typename Fn>
gm_status guarded(Fn&& fn) {
    try {
        fn();
        return GM_OK;
    } catch (const ConfigError& e) {
        return fail(GM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const DimensionError& e) {
        return fail(GM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const ValidationError& e) {
        return fail(GM_ERR_VALIDATION, e.what());
    } catch (const FormatError& e) {
        return fail(GM_ERR_FORMAT, e.what());
    } catch (const IoError& e) {
        return fail(GM_ERR_IO, e.what());
    } catch (const ResourceGuardError& e) {
        return fail(GM_ERR_RESOURCE_GUARD, e.what());
    } catch (const std::exception& e) {
        return fail(GM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(GM_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gm_status write_text_file(const std::string& path, const std::string& text) {
    return guarded([&] {
        std::ofstream out(path);
        if (!out) throw IoError("cannot write file: " + path);
        out << text;
        if (!out) throw IoError("write failed: " + path);
    });
}

} // namespace

extern "C" {

void gm_generator_config_default(gm_generator_config* out) {
    if (!out) return;
    GeneratorConfig d;
    *out = {d.field_width, d.field_height, d.grid_rows,
            d.grid_cols,   d.num_clients,  d.num_slots,
            d.demand_high, d.coverage_radius, d.failure_threshold,
            d.gateway_demand_threshold};
}

void gm_energy_params_default(gm_energy_params* out) {
    if (!out) return;
    EnergyParams d;
    *out = {d.capacity, d.charge_rate, d.discharge_rate_base,
            d.discharge_per_demand};
}

void gm_solver_config_default(gm_solver_config* out) {
    if (!out) return;
    SolverConfig d;
    *out = {d.max_iterations, d.population_size, d.crossover_rate,
            d.scale_factor,   d.sa_initial_temp, d.sa_cooling_alpha,
            d.penalty_lambda, d.seed};
}

const char* gm_last_error(void) { return g_last_error.c_str(); }

gm_status gm_scenario_generate(const gm_generator_config* config,
                               uint64_t seed, gm_scenario** out) {
    if (!config || !out)
        return fail(GM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        GeneratorConfig g;
        g.field_width = config->field_width;
        g.field_height = config->field_height;
        g.grid_rows = config->grid_rows;
        g.grid_cols = config->grid_cols;
        g.num_clients = config->num_clients;
        g.num_slots = config->num_slots;
        g.demand_high = config->demand_high;
        g.coverage_radius = config->coverage_radius;
        g.failure_threshold = config->failure_threshold;
        g.gateway_demand_threshold = config->gateway_demand_threshold;
        *out = new gm_scenario{generate_scenario(g, seed)};
    });
}

gm_status gm_scenario_load(const char* path, gm_scenario** out) {
    if (!path || !out)
        return fail(GM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new gm_scenario{load_scenario(path)}; });
}

gm_status gm_scenario_save(const gm_scenario* scenario, const char* path) {
    if (!scenario || !path)
        return fail(GM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { save_scenario(scenario->scenario, path); });
}

void gm_scenario_free(gm_scenario* scenario) { delete scenario; }

int gm_scenario_num_candidates(const gm_scenario* s) {
    return s ? s->scenario.num_candidates() : 0;
}
int gm_scenario_num_clients(const gm_scenario* s) {
    return s ? s->scenario.num_clients() : 0;
}
int gm_scenario_num_slots(const gm_scenario* s) {
    return s ? s->scenario.num_slots : 0;
}

gm_status gm_solve(const gm_scenario* scenario, gm_solver_kind solver,
                   const gm_energy_params* energy,
                   const gm_solver_config* config, gm_assoc_policy policy,
                   gm_result** out) {
    if (!scenario || !out)
        return fail(GM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        EnergyParams ep;
        if (energy)
            ep = {energy->capacity, energy->charge_rate,
                  energy->discharge_rate_base, energy->discharge_per_demand};
        SolverConfig sc;
        if (config) {
            sc.max_iterations = config->max_iterations;
            sc.population_size = config->population_size;
            sc.crossover_rate = config->crossover_rate;
            sc.scale_factor = config->scale_factor;
            sc.sa_initial_temp = config->sa_initial_temp;
            sc.sa_cooling_alpha = config->sa_cooling_alpha;
            sc.penalty_lambda = config->penalty_lambda;
            sc.seed = config->seed;
        }
        SolverKind kind;
        switch (solver) {
            case GM_SOLVER_GREEDY: kind = SolverKind::Greedy; break;
            case GM_SOLVER_EXHAUSTIVE: kind = SolverKind::Exhaustive; break;
            case GM_SOLVER_SA: kind = SolverKind::SimulatedAnnealing; break;
            case GM_SOLVER_DE: kind = SolverKind::DifferentialEvolution; break;
            default: throw ConfigError("unknown solver kind");
        }
        AssocPolicy pol = policy == GM_POLICY_PF
                              ? AssocPolicy::ProportionalFairness
                              : AssocPolicy::NearestCell;
        *out = new gm_result{
            solve(kind, scenario->scenario, ep, pol, sc)};
    });
}

void gm_result_free(gm_result* result) { delete result; }

int gm_result_node_count(const gm_result* r) {
    return r ? r->result.best_report.node_count : 0;
}
double gm_result_failure_rate(const gm_result* r) {
    return r ? r->result.best_report.failure_rate() : 1.0;
}
int gm_result_feasible(const gm_result* r) {
    return r && r->result.best_report.feasible ? 1 : 0;
}
int gm_result_sustainable(const gm_result* r) {
    return r && r->result.best_report.sustainable ? 1 : 0;
}
int64_t gm_result_evaluations(const gm_result* r) {
    return r ? r->result.evaluations_used : 0;
}
int gm_result_placed(const gm_result* r, int candidate) {
    if (!r) return 0;
    const auto& p = r->result.best_placement.placed;
    if (candidate < 0 || candidate >= static_cast<int>(p.size())) return 0;
    return p[candidate];
}
int gm_result_gateway(const gm_result* r, int candidate) {
    if (!r) return 0;
    const auto& g = r->result.best_placement.gateway_flags;
    if (candidate < 0 || candidate >= static_cast<int>(g.size())) return 0;
    return g[candidate];
}

gm_status gm_result_write_trace_csv(const gm_result* r, const char* path) {
    if (!r || !path)
        return fail(GM_ERR_INVALID_ARGUMENT, "null argument");
    return write_text_file(path, trace_to_csv(r->result));
}

gm_status gm_result_write_energy_csv(const gm_result* r, const char* path) {
    if (!r || !path)
        return fail(GM_ERR_INVALID_ARGUMENT, "null argument");
    return write_text_file(path, energy_trace_to_csv(r->result.best_report));
}

gm_status gm_experiment_run_json(const char* config_json, char** report_out) {
    if (!config_json)
        return fail(GM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ExperimentConfig cfg = experiment_config_from_json(config_json);
        ExperimentSummary summary = run_experiment(cfg);
        if (report_out) *report_out = dup_string(emit_report(summary));
    });
}

gm_status gm_report_from_summary_csv(const char* summary_path,
                                     char** report_out) {
    if (!summary_path || !report_out)
        return fail(GM_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *report_out = dup_string(emit_report(summary_from_csv_file(summary_path)));
    });
}

void gm_string_free(char* s) { delete[] s; }

} // extern "C"
