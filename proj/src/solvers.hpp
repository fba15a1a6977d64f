#ifndef GREENMESH_SOLVERS_HPP
#define GREENMESH_SOLVERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evaluation.hpp"
#include "rng.hpp"

namespace greenmesh {

struct SolverConfig {
    int max_iterations = 100;    // SA steps / DE generations
    int population_size = 100;   // NP, DE only
    double crossover_rate = 0.5; // CR
    double scale_factor = 0.6;   // F
    double sa_initial_temp = 1.0;
    double sa_cooling_alpha = 0.95;
    double penalty_lambda = 0.0; // <= 0: default 10 * |S|
    std::uint64_t seed = 0;
    // Exhaustive search refuses instances with more candidates than this.
    int exhaustive_guard = 20;

    void validate() const;
};

// DE genome: one real per candidate location, kept in [0, 1].
using RealVector = std::vector<double>;

struct TraceEntry {
    int iteration = 0;
    double best_fitness = 0.0;
    double best_failure_rate = 0.0;
    std::int64_t best_fr_num = 0;
    std::int64_t best_fr_den = 1;
    int best_node_count = 0;
    double total_sustained_energy = 0.0;
};

struct PlacementResult {
    Placement best_placement;
    FeasibilityReport best_report;
    std::vector<TraceEntry> trace;
    std::int64_t evaluations_used = 0;
};

enum class SolverKind { Greedy, Exhaustive, SimulatedAnnealing, DifferentialEvolution };

// ---- DE operators --------------------------------------------------------

// placed[j] = 1 iff v[j] >= 0.5.
Placement decode(const RealVector& v);

// rand/1: x_r1 + F * (x_r2 - x_r3) with r1, r2, r3 distinct from each other
// and from the target index; coordinates clipped to [0, 1].
// Draw order per call: r1, r2, r3 (rejection sampling on index(NP)).
RealVector de_mutate(const std::vector<RealVector>& population, int target_index,
                     double scale_factor, Rng& rng);

// Binomial crossover: donor coordinate where eta_j <= CR or j == i_rand.
// Draw order per call: eta_1..eta_D, then i_rand = index(D).
RealVector de_crossover(const RealVector& target, const RealVector& donor,
                        double crossover_rate, Rng& rng);

// Trial survives on ties.
const RealVector& de_select(const Fitness& target_fit, const Fitness& trial_fit,
                            const RealVector& target, const RealVector& trial);

// ---- SA moves ------------------------------------------------------------

// One-location move: with probability 0.5 remove a random placed node, else
// toggle a random candidate. Empty placements always toggle.
Placement sa_neighbor(const Placement& p, Rng& rng);

// Metropolis: always accept improvements, otherwise accept with probability
// exp(-(new - current) / temperature).
bool sa_accept(const Fitness& current_fit, const Fitness& new_fit,
               double temperature, Rng& rng);

// ---- Solvers -------------------------------------------------------------

PlacementResult greedy_place(const Scenario& scenario, const EnergyParams& params,
                             AssocPolicy policy, const SolverConfig& cfg);
PlacementResult exhaustive_place(const Scenario& scenario, const EnergyParams& params,
                                 AssocPolicy policy, const SolverConfig& cfg);
PlacementResult sa_place(const Scenario& scenario, const EnergyParams& params,
                         AssocPolicy policy, const SolverConfig& cfg);
PlacementResult de_place(const Scenario& scenario, const EnergyParams& params,
                         AssocPolicy policy, const SolverConfig& cfg);

PlacementResult solve(SolverKind kind, const Scenario& scenario,
                      const EnergyParams& params, AssocPolicy policy,
                      const SolverConfig& cfg);

std::string solver_name(SolverKind kind);

// Convergence trace CSV: iteration, best_fitness, best_failure_rate,
// best_node_count, total_sustained_energy, best_failure_rate_frac.
std::string trace_to_csv(const PlacementResult& result);
// Energy trace CSV for the best placement: slot, node_index, charge,
// consumed, harvested.
std::string energy_trace_to_csv(const FeasibilityReport& report);

} // namespace greenmesh

#endif
