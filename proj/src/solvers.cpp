#include "solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "csv.hpp"
#include "errors.hpp"

namespace greenmesh {

void SolverConfig::validate() const {
    if (max_iterations < 0)
        throw ConfigError("SolverConfig: max_iterations must be >= 0");
    if (population_size < 4)
        throw ConfigError("SolverConfig: population_size must be >= 4");
    if (crossover_rate < 0.0 || crossover_rate > 1.0)
        throw ConfigError("SolverConfig: crossover_rate must be in [0, 1]");
    if (scale_factor < 0.0 || scale_factor > 2.0)
        throw ConfigError("SolverConfig: scale_factor must be in [0, 2]");
    if (sa_initial_temp <= 0.0)
        throw ConfigError("SolverConfig: sa_initial_temp must be positive");
    if (sa_cooling_alpha <= 0.0 || sa_cooling_alpha >= 1.0)
        throw ConfigError("SolverConfig: sa_cooling_alpha must be in (0, 1)");
}

namespace {

double effective_lambda(const SolverConfig& cfg, const Scenario& sc) {
    return cfg.penalty_lambda > 0.0 ? cfg.penalty_lambda
                                    : 10.0 * sc.num_candidates();
}

// Copies the per-placed-node gateway flags of a report back onto the full
// candidate-indexed flag vector of its placement.
void apply_gateway_flags(Placement& p, const FeasibilityReport& rep) {
    p.gateway_flags.assign(p.placed.size(), 0);
    for (std::size_t n = 0; n < rep.placed_candidates.size(); ++n)
        if (rep.gateway_flags[n]) p.gateway_flags[rep.placed_candidates[n]] = 1;
}

// Shared elitist bookkeeping: keeps the best-ever report and appends
// non-increasing best-fitness trace entries.
struct BestTracker {
    double lambda;
    bool has_best = false;
    double best_fitness = 0.0;
    Placement best_placement;
    FeasibilityReport best_report;

    explicit BestTracker(double lambda_) : lambda(lambda_) {}

    // Returns true if this report became the new best (strict improvement).
    bool offer(const Placement& p, const FeasibilityReport& rep) {
        const double f = fitness(rep, lambda).value;
        if (!has_best || f < best_fitness) {
            has_best = true;
            best_fitness = f;
            best_placement = p;
            apply_gateway_flags(best_placement, rep);
            best_report = rep;
            return true;
        }
        return false;
    }

    TraceEntry entry(int iteration) const {
        return {iteration,
                best_fitness,
                best_report.failure_rate(),
                best_report.fr_num,
                best_report.fr_den,
                best_report.node_count,
                best_report.sustained_energy()};
    }
};

} // namespace

Placement decode(const RealVector& v) {
    Placement p(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        p.placed[j] = v[j] >= 0.5 ? 1 : 0;
    return p;
}

RealVector de_mutate(const std::vector<RealVector>& population, int target_index,
                     double scale_factor, Rng& rng) {
    const int np = static_cast<int>(population.size());
    if (np < 4)
        throw ConfigError("de_mutate: population size must be >= 4");
    int r1, r2, r3;
    do r1 = static_cast<int>(rng.index(np)); while (r1 == target_index);
    do r2 = static_cast<int>(rng.index(np)); while (r2 == target_index || r2 == r1);
    do r3 = static_cast<int>(rng.index(np));
    while (r3 == target_index || r3 == r1 || r3 == r2);

    const RealVector& a = population[r1];
    const RealVector& b = population[r2];
    const RealVector& c = population[r3];
    RealVector donor(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        donor[j] = std::clamp(a[j] + scale_factor * (b[j] - c[j]), 0.0, 1.0);
    return donor;
}

RealVector de_crossover(const RealVector& target, const RealVector& donor,
                        double crossover_rate, Rng& rng) {
    if (target.size() != donor.size())
        throw DimensionError("de_crossover: vector length mismatch");
    const std::size_t dim = target.size();
    std::vector<bool> from_donor(dim);
    for (std::size_t j = 0; j < dim; ++j)
        from_donor[j] = rng.uniform() <= crossover_rate;
    const std::size_t i_rand = rng.index(dim);
    from_donor[i_rand] = true;

    RealVector trial(dim);
    for (std::size_t j = 0; j < dim; ++j)
        trial[j] = from_donor[j] ? donor[j] : target[j];
    return trial;
}

const RealVector& de_select(const Fitness& target_fit, const Fitness& trial_fit,
                            const RealVector& target, const RealVector& trial) {
    return trial_fit.value <= target_fit.value ? trial : target;
}

Placement sa_neighbor(const Placement& p, Rng& rng) {
    Placement next = p;
    next.gateway_flags.assign(p.placed.size(), 0);
    const bool remove = rng.uniform() < 0.5;
    auto placed = p.placed_indices();
    if (remove && !placed.empty()) {
        next.placed[placed[rng.index(placed.size())]] = 0;
    } else {
        const std::size_t j = rng.index(p.placed.size());
        next.placed[j] ^= 1;
    }
    return next;
}

bool sa_accept(const Fitness& current_fit, const Fitness& new_fit,
               double temperature, Rng& rng) {
    if (temperature <= 0.0)
        throw ConfigError("sa_accept: temperature must be positive");
    if (new_fit.value <= current_fit.value) return true;
    const double p = std::exp(-(new_fit.value - current_fit.value) / temperature);
    return rng.uniform() < p;
}

PlacementResult greedy_place(const Scenario& sc, const EnergyParams& params,
                             AssocPolicy policy, const SolverConfig& cfg) {
    const double lambda = effective_lambda(cfg, sc);
    const int ns = sc.num_candidates();
    PlacementResult result;
    BestTracker best(lambda);

    Placement current(ns);
    FeasibilityReport rep = evaluate(sc, current, params, policy);
    ++result.evaluations_used;
    best.offer(current, rep);
    result.trace.push_back(best.entry(0));

    int iteration = 0;
    while (!rep.feasible && current.node_count() < ns) {
        int best_j = -1;
        double best_fr = 2.0;
        FeasibilityReport best_rep;
        for (int j = 0; j < ns; ++j) {
            if (current.placed[j]) continue;
            Placement trial = current;
            trial.placed[j] = 1;
            FeasibilityReport r = evaluate(sc, trial, params, policy);
            ++result.evaluations_used;
            if (r.failure_rate() < best_fr) {
                best_fr = r.failure_rate();
                best_j = j;
                best_rep = r;
            }
        }
        current.placed[best_j] = 1;
        rep = best_rep;
        best.offer(current, rep);
        result.trace.push_back(best.entry(++iteration));
    }

    // Greedy returns the first feasible placement it reaches (or the full,
    // infeasible one), not the fitness-best intermediate.
    apply_gateway_flags(current, rep);
    result.best_placement = current;
    result.best_report = rep;
    return result;
}

PlacementResult exhaustive_place(const Scenario& sc, const EnergyParams& params,
                                 AssocPolicy policy, const SolverConfig& cfg) {
    const int ns = sc.num_candidates();
    if (ns > cfg.exhaustive_guard)
        throw ResourceGuardError(
            "exhaustive_place: 2^" + std::to_string(ns) +
            " subsets exceed the guard limit (" +
            std::to_string(cfg.exhaustive_guard) +
            "); use a heuristic solver (greedy, sa, de)");
    const double lambda = effective_lambda(cfg, sc);
    PlacementResult result;
    BestTracker best(lambda);
    int iteration = 0;

    // Subsets in order of increasing cardinality, lexicographic within one
    // cardinality (lower candidate indices placed first); the first feasible
    // subset is minimum-count optimal.
    for (int k = 0; k <= ns; ++k) {
        std::vector<int> combo(k);
        std::iota(combo.begin(), combo.end(), 0);
        bool more = true;
        while (more) {
            Placement p(ns);
            for (int j : combo) p.placed[j] = 1;
            FeasibilityReport rep = evaluate(sc, p, params, policy);
            ++result.evaluations_used;
            if (best.offer(p, rep))
                result.trace.push_back(best.entry(iteration));
            ++iteration;
            if (rep.feasible) {
                // First feasible subset in cardinality order is optimal.
                apply_gateway_flags(p, rep);
                result.best_placement = p;
                result.best_report = rep;
                return result;
            }
            // Next k-combination.
            more = false;
            for (int i = k - 1; i >= 0; --i) {
                if (combo[i] < ns - (k - i)) {
                    ++combo[i];
                    for (int t = i + 1; t < k; ++t) combo[t] = combo[t - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }

    // No feasible subset: report the full placement as the infeasible best.
    Placement full(ns);
    std::fill(full.placed.begin(), full.placed.end(), 1);
    FeasibilityReport full_rep = evaluate(sc, full, params, policy);
    apply_gateway_flags(full, full_rep);
    result.best_placement = full;
    result.best_report = full_rep;
    return result;
}

PlacementResult sa_place(const Scenario& sc, const EnergyParams& params,
                         AssocPolicy policy, const SolverConfig& cfg) {
    cfg.validate();
    const double lambda = effective_lambda(cfg, sc);
    const int ns = sc.num_candidates();
    Rng rng(cfg.seed);
    PlacementResult result;
    BestTracker best(lambda);

    // Full placement start: every candidate hosts a router, then nodes are
    // removed/toggled one at a time.
    Placement current(ns);
    std::fill(current.placed.begin(), current.placed.end(), 1);
    FeasibilityReport rep = evaluate(sc, current, params, policy);
    ++result.evaluations_used;
    double current_fit = fitness(rep, lambda).value;
    best.offer(current, rep);
    result.trace.push_back(best.entry(0));

    double temperature = cfg.sa_initial_temp;
    for (int k = 1; k <= cfg.max_iterations; ++k) {
        temperature *= cfg.sa_cooling_alpha;
        Placement proposal = sa_neighbor(current, rng);
        FeasibilityReport prep = evaluate(sc, proposal, params, policy);
        ++result.evaluations_used;
        const double pfit = fitness(prep, lambda).value;
        if (sa_accept({current_fit}, {pfit}, temperature, rng)) {
            current = std::move(proposal);
            current_fit = pfit;
            best.offer(current, prep);
        }
        result.trace.push_back(best.entry(k));
    }

    result.best_placement = best.best_placement;
    result.best_report = best.best_report;
    return result;
}

PlacementResult de_place(const Scenario& sc, const EnergyParams& params,
                         AssocPolicy policy, const SolverConfig& cfg) {
    cfg.validate();
    const double lambda = effective_lambda(cfg, sc);
    const int ns = sc.num_candidates();
    const int np = cfg.population_size;
    Rng rng(cfg.seed);
    PlacementResult result;
    BestTracker best(lambda);

    std::vector<RealVector> population(np, RealVector(ns));
    std::vector<double> pop_fitness(np);
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < ns; ++j) population[i][j] = rng.uniform();
        Placement p = decode(population[i]);
        FeasibilityReport rep = evaluate(sc, p, params, policy);
        ++result.evaluations_used;
        pop_fitness[i] = fitness(rep, lambda).value;
        best.offer(p, rep);
    }
    result.trace.push_back(best.entry(0));

    for (int g = 1; g <= cfg.max_iterations; ++g) {
        for (int i = 0; i < np; ++i) {
            RealVector donor = de_mutate(population, i, cfg.scale_factor, rng);
            RealVector trial =
                de_crossover(population[i], donor, cfg.crossover_rate, rng);
            Placement p = decode(trial);
            FeasibilityReport rep = evaluate(sc, p, params, policy);
            ++result.evaluations_used;
            const double tfit = fitness(rep, lambda).value;
            if (tfit <= pop_fitness[i]) {
                population[i] = std::move(trial);
                pop_fitness[i] = tfit;
                best.offer(p, rep);
            }
        }
        result.trace.push_back(best.entry(g));
    }

    result.best_placement = best.best_placement;
    result.best_report = best.best_report;
    return result;
}

PlacementResult solve(SolverKind kind, const Scenario& sc,
                      const EnergyParams& params, AssocPolicy policy,
                      const SolverConfig& cfg) {
    switch (kind) {
        case SolverKind::Greedy: return greedy_place(sc, params, policy, cfg);
        case SolverKind::Exhaustive: return exhaustive_place(sc, params, policy, cfg);
        case SolverKind::SimulatedAnnealing: return sa_place(sc, params, policy, cfg);
        case SolverKind::DifferentialEvolution: return de_place(sc, params, policy, cfg);
    }
    throw ConfigError("solve: unknown solver kind");
}

std::string solver_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::Greedy: return "greedy";
        case SolverKind::Exhaustive: return "exhaustive";
        case SolverKind::SimulatedAnnealing: return "sa";
        case SolverKind::DifferentialEvolution: return "de";
    }
    return "unknown";
}

std::string trace_to_csv(const PlacementResult& result) {
    std::ostringstream out;
    out << "iteration,best_fitness,best_failure_rate,best_node_count,"
           "total_sustained_energy,best_failure_rate_frac\n";
    for (const auto& e : result.trace) {
        out << e.iteration << ',' << format_double(e.best_fitness) << ','
            << format_double(e.best_failure_rate) << ',' << e.best_node_count
            << ',' << format_double(e.total_sustained_energy) << ','
            << e.best_fr_num << '/' << e.best_fr_den << '\n';
    }
    return out.str();
}

std::string energy_trace_to_csv(const FeasibilityReport& report) {
    std::ostringstream out;
    out << "slot,node_index,charge,consumed,harvested\n";
    for (std::size_t n = 0; n < report.placed_candidates.size(); ++n) {
        for (std::size_t l = 0; l < report.charge_trace[n].size(); ++l) {
            out << l << ',' << report.placed_candidates[n] << ','
                << format_double(report.charge_trace[n][l]) << ','
                << format_double(report.consumed_trace[n][l]) << ','
                << format_double(report.harvested_trace[n][l]) << '\n';
        }
    }
    return out.str();
}

} // namespace greenmesh
