// Command-line front end for the greenmesh planner. Talks to the core
// library exclusively through its C API.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "greenmesh/greenmesh.h"

namespace {

int die(gm_status status, const char* what) {
    std::fprintf(stderr, "greenmesh: %s: %s\n", what, gm_last_error());
    return status == GM_ERR_INVALID_ARGUMENT || status == GM_ERR_VALIDATION
               ? 2
               : 1;
}

std::string default_out() {
    const char* env = std::getenv("GREENMESH_OUT");
    return env ? env : "";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-count placement of solar-rechargeable mesh routers"};
    app.require_subcommand(1);

    // ---- generate ----------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "Generate a scenario file");
    gm_generator_config gcfg;
    gm_generator_config_default(&gcfg);
    std::uint64_t gen_seed = 42;
    std::string gen_out = "scenario.json";
    gen->add_option("--width", gcfg.field_width, "Field width in meters");
    gen->add_option("--height", gcfg.field_height, "Field height in meters");
    gen->add_option("--rows", gcfg.grid_rows, "Candidate grid rows");
    gen->add_option("--cols", gcfg.grid_cols, "Candidate grid columns");
    gen->add_option("--clients", gcfg.num_clients, "Number of mesh clients");
    gen->add_option("--slots", gcfg.num_slots, "Time slots per horizon");
    gen->add_option("--demand", gcfg.demand_high, "Daylight demand per client");
    gen->add_option("--radius", gcfg.coverage_radius,
                    "Coverage radius (<=0: cell diagonal)");
    gen->add_option("--fth", gcfg.failure_threshold, "Failure-rate threshold");
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("-o,--out", gen_out, "Output scenario path");

    // ---- run ---------------------------------------------------------------
    auto* run = app.add_subcommand("run", "Run a solver comparison experiment");
    std::string scenario_path;
    std::vector<std::string> solvers{"sa", "de"};
    std::vector<std::uint64_t> seeds{1};
    std::string out_dir = default_out();
    int jobs = 1;
    std::string policy = "nearest";
    gm_solver_config scfg;
    gm_solver_config_default(&scfg);
    gm_energy_params ecfg;
    gm_energy_params_default(&ecfg);
    std::uint64_t run_gen_seed = 42;
    double fth_override = -1.0;
    run->add_option("--scenario", scenario_path,
                    "Scenario file (omit to generate the default scenario)");
    run->add_option("--gen-seed", run_gen_seed,
                    "Seed for the generated scenario when no file is given");
    run->add_option("--solvers", solvers,
                    "Solvers to run: greedy exhaustive sa de");
    run->add_option("--seeds", seeds, "Solver seeds (one run per seed)");
    run->add_option("--out", out_dir, "Output directory (or $GREENMESH_OUT)");
    run->add_option("--jobs", jobs, "Parallel (solver, seed) jobs");
    run->add_option("--policy", policy, "Association policy: nearest | pf")
        ->check(CLI::IsMember({"nearest", "pf"}));
    run->add_option("--iterations", scfg.max_iterations,
                    "SA steps / DE generations");
    run->add_option("--np", scfg.population_size, "DE population size");
    run->add_option("--cr", scfg.crossover_rate, "DE crossover rate");
    run->add_option("--scale", scfg.scale_factor, "DE scale factor");
    run->add_option("--sa-t0", scfg.sa_initial_temp, "SA initial temperature");
    run->add_option("--sa-alpha", scfg.sa_cooling_alpha, "SA cooling factor");
    run->add_option("--lambda", scfg.penalty_lambda,
                    "Constraint penalty weight (<=0: 10 * |S|)");
    run->add_option("--fth", fth_override,
                    "Failure-rate threshold override for generated scenarios");
    run->add_option("--capacity", ecfg.capacity, "Battery capacity");
    run->add_option("--charge-rate", ecfg.charge_rate,
                    "Energy harvested per daylight slot");
    run->add_option("--discharge-rate", ecfg.discharge_rate_base,
                    "Energy consumed per active slot");
    run->add_option("--discharge-per-demand", ecfg.discharge_per_demand,
                    "Extra energy per served demand unit");

    // ---- report ------------------------------------------------------------
    auto* rep = app.add_subcommand("report", "Render a summary.csv as text");
    std::string summary_path = "summary.csv";
    rep->add_option("summary", summary_path, "Path to summary.csv");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        gm_scenario* sc = nullptr;
        gm_status st = gm_scenario_generate(&gcfg, gen_seed, &sc);
        if (st != GM_OK) return die(st, "generate");
        st = gm_scenario_save(sc, gen_out.c_str());
        gm_scenario_free(sc);
        if (st != GM_OK) return die(st, "save");
        std::printf("wrote %s\n", gen_out.c_str());
        return 0;
    }

    if (run->parsed()) {
        if (out_dir.empty()) {
            std::fprintf(stderr,
                         "greenmesh: run: no output directory (--out or "
                         "$GREENMESH_OUT)\n");
            return 2;
        }
        nlohmann::json cfg;
        if (!scenario_path.empty()) {
            cfg["scenario_path"] = scenario_path;
        } else {
            nlohmann::json g;
            g["seed"] = run_gen_seed;
            if (fth_override >= 0.0) g["failure_threshold"] = fth_override;
            cfg["generate"] = g;
        }
        cfg["solvers"] = solvers;
        cfg["seeds"] = seeds;
        cfg["out_dir"] = out_dir;
        cfg["jobs"] = jobs;
        cfg["policy"] = policy;
        cfg["solver_config"] = {
            {"max_iterations", scfg.max_iterations},
            {"population_size", scfg.population_size},
            {"crossover_rate", scfg.crossover_rate},
            {"scale_factor", scfg.scale_factor},
            {"sa_initial_temp", scfg.sa_initial_temp},
            {"sa_cooling_alpha", scfg.sa_cooling_alpha},
            {"penalty_lambda", scfg.penalty_lambda},
        };
        cfg["energy_params"] = {
            {"capacity", ecfg.capacity},
            {"charge_rate", ecfg.charge_rate},
            {"discharge_rate_base", ecfg.discharge_rate_base},
            {"discharge_per_demand", ecfg.discharge_per_demand},
        };
        char* report_text = nullptr;
        const std::string cfg_text = cfg.dump();
        gm_status st = gm_experiment_run_json(cfg_text.c_str(), &report_text);
        if (st != GM_OK) return die(st, "run");
        std::fputs(report_text, stdout);
        gm_string_free(report_text);
        return 0;
    }

    if (rep->parsed()) {
        char* report_text = nullptr;
        gm_status st =
            gm_report_from_summary_csv(summary_path.c_str(), &report_text);
        if (st != GM_OK) return die(st, "report");
        std::fputs(report_text, stdout);
        gm_string_free(report_text);
        return 0;
    }

    return 0;
}
