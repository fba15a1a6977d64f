#include "evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace greenmesh {

double FeasibilityReport::sustained_energy() const {
    double sum = 0.0;
    for (const auto& trace : charge_trace)
        if (!trace.empty()) sum += trace.back();
    return sum;
}

ExactFraction failure_rate(const AssociationMatrix& m, int num_clients,
                           int num_slots) {
    if (num_clients <= 0 || num_slots <= 0)
        throw DimensionError("failure_rate: |V| and |T_s| must be positive");
    if (static_cast<int>(m.size()) != num_slots)
        throw DimensionError("failure_rate: matrix slot count mismatch");
    std::int64_t unserved = 0;
    for (const auto& slice : m) {
        if (static_cast<int>(slice.size()) != num_clients)
            throw DimensionError("failure_rate: matrix client count mismatch");
        for (int a : slice)
            if (a < 0) ++unserved;
    }
    return {unserved, static_cast<std::int64_t>(num_clients) * num_slots};
}

int objective(const Placement& p) { return p.node_count(); }

FeasibilityReport evaluate(const Scenario& sc, const Placement& p,
                           const EnergyParams& params, AssocPolicy policy,
                           NodeCapacity cap) {
    if (p.placed.size() != static_cast<std::size_t>(sc.num_candidates()))
        throw DimensionError("evaluate: placement size mismatch");
    params.validate();

    FeasibilityReport rep;
    rep.failure_threshold = sc.failure_threshold;
    rep.placed_candidates = p.placed_indices();
    const std::size_t n_nodes = rep.placed_candidates.size();
    rep.node_count = static_cast<int>(n_nodes);
    rep.gateway_flags.assign(n_nodes, 0);
    rep.charge_trace.assign(n_nodes, {});
    rep.consumed_trace.assign(n_nodes, {});
    rep.harvested_trace.assign(n_nodes, {});
    rep.served_trace.assign(n_nodes, {});

    const double gw_th = sc.gateway_demand_threshold >= 0.0
                             ? sc.gateway_demand_threshold
                             : std::numeric_limits<double>::infinity();

    EnergyState state = initial_state(n_nodes, params);
    std::vector<SlotEnergy> energy_log;
    std::int64_t unserved_pairs = 0;

    for (int l = 0; l < sc.num_slots; ++l) {
        std::vector<int> active;
        std::vector<int> active_ordinal; // placed-node index per active entry
        for (std::size_t n = 0; n < n_nodes; ++n) {
            if (state.charge[n] > 0.0) {
                active.push_back(rep.placed_candidates[n]);
                active_ordinal.push_back(static_cast<int>(n));
            }
        }

        AssocSlice slice = associate(policy, sc, active, l, cap);

        std::vector<double> served(n_nodes, 0.0);
        int unserved_this_slot = 0;
        for (int i = 0; i < sc.num_clients(); ++i) {
            if (slice[i] < 0) {
                ++unserved_this_slot;
                continue;
            }
            // Map candidate index back to the placed-node ordinal.
            auto it = std::lower_bound(rep.placed_candidates.begin(),
                                       rep.placed_candidates.end(), slice[i]);
            served[it - rep.placed_candidates.begin()] += sc.clients[i].demand[l];
        }
        unserved_pairs += unserved_this_slot;
        rep.per_slot_fr.push_back(static_cast<double>(unserved_this_slot) /
                                  sc.num_clients());

        SlotEnergy se;
        se.consumed.resize(n_nodes);
        se.harvested.resize(n_nodes);
        const bool day = sc.is_daylight(l);
        for (std::size_t n = 0; n < n_nodes; ++n) {
            const bool was_active = state.charge[n] > 0.0;
            se.consumed[n] = was_active
                                 ? params.discharge_rate_base +
                                       params.discharge_per_demand * served[n]
                                 : 0.0;
            se.harvested[n] = day ? params.charge_rate : 0.0;
            if (served[n] > gw_th) rep.gateway_flags[n] = 1;
        }
        energy_log.push_back(se);

        state = step_energy(state, served, day, params);
        for (std::size_t n = 0; n < n_nodes; ++n) {
            rep.charge_trace[n].push_back(state.charge[n]);
            rep.consumed_trace[n].push_back(se.consumed[n]);
            rep.harvested_trace[n].push_back(se.harvested[n]);
            rep.served_trace[n].push_back(served[n]);
        }
    }

    rep.fr_num = unserved_pairs;
    rep.fr_den = static_cast<std::int64_t>(sc.num_clients()) * sc.num_slots;

    const SustainabilityReport sus = check_sustainability(energy_log);
    rep.sustainable = sus.sustainable();
    rep.sustainability_deficit = sus.deficit_fraction;
    rep.feasible =
        rep.sustainable && rep.failure_rate() <= sc.failure_threshold;
    return rep;
}

Fitness fitness(const FeasibilityReport& rep, double lambda) {
    if (lambda <= 0.0) throw ConfigError("fitness: lambda must be positive");
    const double excess =
        std::max(0.0, rep.failure_rate() - rep.failure_threshold);
    double value = rep.node_count;
    if (!rep.feasible)
        value += lambda * excess + lambda * rep.sustainability_deficit;
    return {value};
}

double resolve_gateway_threshold(const Scenario& sc, const EnergyParams& params,
                                 AssocPolicy policy) {
    Placement full(sc.num_candidates());
    std::fill(full.placed.begin(), full.placed.end(), 1);
    Scenario ref = sc;
    ref.gateway_demand_threshold = std::numeric_limits<double>::infinity();
    FeasibilityReport rep = evaluate(ref, full, params, policy);

    std::vector<double> served;
    for (const auto& trace : rep.served_trace)
        served.insert(served.end(), trace.begin(), trace.end());
    std::sort(served.begin(), served.end());
    // Nearest-rank 80th percentile.
    const std::size_t rank = static_cast<std::size_t>(
        std::ceil(0.8 * static_cast<double>(served.size())));
    return served[std::max<std::size_t>(rank, 1) - 1];
}

} // namespace greenmesh
