#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "csv.hpp"
#include "errors.hpp"

namespace greenmesh {

namespace fs = std::filesystem;
using nlohmann::json;

void ExperimentConfig::validate() const {
    if (solvers.empty())
        throw ConfigError("experiment: at least one solver required");
    if (seeds.empty())
        throw ConfigError("experiment: at least one seed required");
    if (out_dir.empty())
        throw ConfigError("experiment: output directory required");
    if (jobs < 1) throw ConfigError("experiment: jobs must be >= 1");
}

static SolverKind solver_from_name(const std::string& name) {
    if (name == "greedy") return SolverKind::Greedy;
    if (name == "exhaustive") return SolverKind::Exhaustive;
    if (name == "sa") return SolverKind::SimulatedAnnealing;
    if (name == "de") return SolverKind::DifferentialEvolution;
    throw ConfigError("unknown solver: " + name);
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("experiment config parse error: ") + e.what());
    }
    ExperimentConfig cfg;
    try {
        if (doc.contains("scenario_path"))
            doc.at("scenario_path").get_to(cfg.scenario_path);
        if (doc.contains("generate")) {
            const auto& g = doc.at("generate");
            auto opt = [&](const char* key, auto& field) {
                if (g.contains(key)) g.at(key).get_to(field);
            };
            opt("field_width", cfg.generator.field_width);
            opt("field_height", cfg.generator.field_height);
            opt("grid_rows", cfg.generator.grid_rows);
            opt("grid_cols", cfg.generator.grid_cols);
            opt("num_clients", cfg.generator.num_clients);
            opt("num_slots", cfg.generator.num_slots);
            opt("demand_high", cfg.generator.demand_high);
            opt("coverage_radius", cfg.generator.coverage_radius);
            opt("failure_threshold", cfg.generator.failure_threshold);
            opt("gateway_demand_threshold", cfg.generator.gateway_demand_threshold);
            opt("daylight_slots", cfg.generator.daylight_slots);
            if (g.contains("seed")) g.at("seed").get_to(cfg.generator_seed);
        }
        for (const auto& s : doc.at("solvers"))
            cfg.solvers.push_back(solver_from_name(s.get<std::string>()));
        doc.at("seeds").get_to(cfg.seeds);
        doc.at("out_dir").get_to(cfg.out_dir);
        if (doc.contains("jobs")) doc.at("jobs").get_to(cfg.jobs);
        if (doc.contains("policy")) {
            const std::string p = doc.at("policy").get<std::string>();
            if (p == "nearest") cfg.policy = AssocPolicy::NearestCell;
            else if (p == "pf") cfg.policy = AssocPolicy::ProportionalFairness;
            else throw ConfigError("unknown policy: " + p);
        }
        if (doc.contains("solver_config")) {
            const auto& s = doc.at("solver_config");
            auto opt = [&](const char* key, auto& field) {
                if (s.contains(key)) s.at(key).get_to(field);
            };
            opt("max_iterations", cfg.solver_config.max_iterations);
            opt("population_size", cfg.solver_config.population_size);
            opt("crossover_rate", cfg.solver_config.crossover_rate);
            opt("scale_factor", cfg.solver_config.scale_factor);
            opt("sa_initial_temp", cfg.solver_config.sa_initial_temp);
            opt("sa_cooling_alpha", cfg.solver_config.sa_cooling_alpha);
            opt("penalty_lambda", cfg.solver_config.penalty_lambda);
            opt("exhaustive_guard", cfg.solver_config.exhaustive_guard);
        }
        if (doc.contains("energy_params")) {
            const auto& e = doc.at("energy_params");
            auto opt = [&](const char* key, auto& field) {
                if (e.contains(key)) e.at(key).get_to(field);
            };
            opt("capacity", cfg.energy_params.capacity);
            opt("charge_rate", cfg.energy_params.charge_rate);
            opt("discharge_rate_base", cfg.energy_params.discharge_rate_base);
            opt("discharge_per_demand", cfg.energy_params.discharge_per_demand);
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("experiment config field error: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

namespace {

struct Job {
    SolverKind solver;
    std::uint64_t seed;
};

struct JobResult {
    int node_count = 0;
    double failure_rate = 0.0;
    bool feasible = false;
    std::int64_t evaluations = 0;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write file: " + path.string());
    out << content;
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    Scenario scenario = cfg.scenario_path.empty()
                            ? generate_scenario(cfg.generator, cfg.generator_seed)
                            : load_scenario(cfg.scenario_path);
    if (scenario.gateway_demand_threshold < 0.0)
        scenario.gateway_demand_threshold =
            resolve_gateway_threshold(scenario, cfg.energy_params, cfg.policy);

    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (!fs::is_directory(cfg.out_dir))
        throw IoError("cannot create output directory: " + cfg.out_dir);

    std::vector<Job> jobs;
    for (SolverKind s : cfg.solvers)
        for (std::uint64_t seed : cfg.seeds) jobs.push_back({s, seed});

    std::vector<JobResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;

    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= jobs.size()) return;
            try {
                SolverConfig sc = cfg.solver_config;
                sc.seed = jobs[k].seed;
                PlacementResult r =
                    solve(jobs[k].solver, scenario, cfg.energy_params,
                          cfg.policy, sc);
                const std::string tag = solver_name(jobs[k].solver) + "_" +
                                        std::to_string(jobs[k].seed);
                write_file(fs::path(cfg.out_dir) / ("trace_" + tag + ".csv"),
                           trace_to_csv(r));
                write_file(fs::path(cfg.out_dir) / ("energy_" + tag + ".csv"),
                           energy_trace_to_csv(r.best_report));
                results[k] = {r.best_report.node_count,
                              r.best_report.failure_rate(),
                              r.best_report.feasible, r.evaluations_used};
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    const int n_threads =
        std::min<std::size_t>(cfg.jobs, jobs.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    // Aggregate per solver, name ascending.
    std::vector<std::pair<std::string, SolverKind>> order;
    for (SolverKind s : cfg.solvers) order.emplace_back(solver_name(s), s);
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    ExperimentSummary summary;
    for (const auto& [name, kind] : order) {
        std::vector<double> counts, frs, evals;
        int feasible = 0, total = 0;
        for (std::size_t k = 0; k < jobs.size(); ++k) {
            if (jobs[k].solver != kind) continue;
            counts.push_back(results[k].node_count);
            frs.push_back(results[k].failure_rate);
            evals.push_back(static_cast<double>(results[k].evaluations));
            feasible += results[k].feasible;
            ++total;
        }
        SolverSummary row;
        row.solver = name;
        row.num_seeds = total;
        row.node_count_median = median(counts);
        row.node_count_min = static_cast<int>(*std::min_element(counts.begin(), counts.end()));
        row.node_count_max = static_cast<int>(*std::max_element(counts.begin(), counts.end()));
        row.failure_rate_median = median(frs);
        row.failure_rate_min = *std::min_element(frs.begin(), frs.end());
        row.failure_rate_max = *std::max_element(frs.begin(), frs.end());
        row.feasible_fraction = static_cast<double>(feasible) / total;
        row.evaluations_median = static_cast<std::int64_t>(median(evals));
        summary.rows.push_back(row);
    }

    write_file(fs::path(cfg.out_dir) / "summary.csv", summary_to_csv(summary));
    return summary;
}

std::string summary_to_csv(const ExperimentSummary& summary) {
    std::ostringstream out;
    out << "solver,num_seeds,node_count_median,node_count_min,node_count_max,"
           "failure_rate_median,failure_rate_min,failure_rate_max,"
           "feasible_fraction,evaluations_median\n";
    for (const auto& r : summary.rows) {
        out << r.solver << ',' << r.num_seeds << ','
            << format_double(r.node_count_median) << ',' << r.node_count_min
            << ',' << r.node_count_max << ','
            << format_double(r.failure_rate_median) << ','
            << format_double(r.failure_rate_min) << ','
            << format_double(r.failure_rate_max) << ','
            << format_double(r.feasible_fraction) << ','
            << r.evaluations_median << '\n';
    }
    return out.str();
}

ExperimentSummary summary_from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open summary file: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw FormatError("summary file is empty: " + path);
    ExperimentSummary summary;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 10)
            throw FormatError("summary row must have 10 fields: " + line);
        SolverSummary r;
        r.solver = fields[0];
        r.num_seeds = std::stoi(fields[1]);
        r.node_count_median = std::stod(fields[2]);
        r.node_count_min = std::stoi(fields[3]);
        r.node_count_max = std::stoi(fields[4]);
        r.failure_rate_median = std::stod(fields[5]);
        r.failure_rate_min = std::stod(fields[6]);
        r.failure_rate_max = std::stod(fields[7]);
        r.feasible_fraction = std::stod(fields[8]);
        r.evaluations_median = std::stoll(fields[9]);
        summary.rows.push_back(r);
    }
    std::sort(summary.rows.begin(), summary.rows.end(),
              [](const auto& a, const auto& b) { return a.solver < b.solver; });
    return summary;
}

std::string emit_report(const ExperimentSummary& summary) {
    if (summary.rows.empty())
        throw ConfigError("emit_report: summary is empty");
    std::ostringstream out;
    out << std::left << std::setw(12) << "solver" << std::right
        << std::setw(22) << "node_count" << std::setw(12) << "final_fr"
        << std::setw(12) << "feasible" << std::setw(14) << "evaluations"
        << '\n';
    for (const auto& r : summary.rows) {
        std::ostringstream nodes;
        nodes << format_double(r.node_count_median) << " [" << r.node_count_min
              << '-' << r.node_count_max << ']';
        std::ostringstream fr;
        fr << std::fixed << std::setprecision(4) << r.failure_rate_median;
        std::ostringstream feas;
        feas << std::fixed << std::setprecision(2) << r.feasible_fraction;
        out << std::left << std::setw(12) << r.solver << std::right
            << std::setw(22) << nodes.str() << std::setw(12) << fr.str()
            << std::setw(12) << feas.str() << std::setw(14)
            << r.evaluations_median << '\n';
    }
    return out.str();
}

} // namespace greenmesh
