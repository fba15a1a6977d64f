#ifndef GREENMESH_EVALUATION_HPP
#define GREENMESH_EVALUATION_HPP

#include <cstdint>
#include <vector>

#include "association.hpp"
#include "energy.hpp"
#include "placement.hpp"
#include "scenario.hpp"

namespace greenmesh {

struct FeasibilityReport {
    int node_count = 0;
    // Failure rate as an exact fraction: unserved (client, slot) pairs over
    // |V| * |T_s|.
    std::int64_t fr_num = 0;
    std::int64_t fr_den = 1;
    bool sustainable = true;
    bool feasible = false;
    double failure_threshold = 0.0; // threshold the verdict was taken against
    double sustainability_deficit = 0.0;
    std::vector<double> per_slot_fr;
    std::vector<int> placed_candidates; // candidate index per placed node
    std::vector<std::uint8_t> gateway_flags; // per placed node
    // Per placed node, per slot (num_slots entries each).
    std::vector<std::vector<double>> charge_trace;
    std::vector<std::vector<double>> consumed_trace;
    std::vector<std::vector<double>> harvested_trace;
    std::vector<std::vector<double>> served_trace;

    double failure_rate() const {
        return static_cast<double>(fr_num) / static_cast<double>(fr_den);
    }
    // Sum of final-slot charges across placed nodes.
    double sustained_energy() const;
};

struct Fitness {
    double value = 0.0;
    auto operator<=>(const Fitness&) const = default;
};

// Exact Eq.-of-counts failure rate for a full association matrix.
// fr = unserved pairs / (num_clients * num_slots), kept as integers.
struct ExactFraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
};
ExactFraction failure_rate(const AssociationMatrix& m, int num_clients,
                           int num_slots);

// Number of placed nodes; a gateway-flagged node counts once.
int objective(const Placement& p);

// Full time-slot simulation: energy-gated activity, per-slot association,
// gateway flagging, failure-rate and sustainability accounting.
FeasibilityReport evaluate(const Scenario& scenario, const Placement& p,
                           const EnergyParams& params, AssocPolicy policy,
                           NodeCapacity cap = NodeCapacity::unbounded());

// node_count + lambda * FR excess + lambda * sustainability deficit.
// Equals node_count exactly for feasible placements. Default lambda is
// 10 * |S|, picked by the solvers when lambda <= 0.
Fitness fitness(const FeasibilityReport& report, double lambda);

// 80th percentile of per-node per-slot served demand in a full-placement
// reference run; used to resolve an unset gateway_demand_threshold.
double resolve_gateway_threshold(const Scenario& scenario,
                                 const EnergyParams& params, AssocPolicy policy);

} // namespace greenmesh

#endif
