#include "energy.hpp"

#include <algorithm>

#include "errors.hpp"

namespace greenmesh {

void EnergyParams::validate() const {
    if (capacity <= 0.0)
        throw ValidationError("EnergyParams: capacity must be positive");
    if (charge_rate < 0.0 || discharge_rate_base < 0.0 || discharge_per_demand < 0.0)
        throw ValidationError("EnergyParams: rates must be nonnegative");
}

EnergyState initial_state(std::size_t num_placed_nodes, const EnergyParams& params) {
    params.validate();
    EnergyState st;
    st.charge.assign(num_placed_nodes, params.capacity);
    st.slot = 0;
    return st;
}

EnergyState step_energy(const EnergyState& state,
                        const std::vector<double>& served_demand,
                        bool is_daylight, const EnergyParams& params) {
    if (served_demand.size() != state.charge.size())
        throw DimensionError("step_energy: served_demand length mismatch");
    const double harvested = is_daylight ? params.charge_rate : 0.0;
    EnergyState next;
    next.slot = state.slot + 1;
    next.charge.resize(state.charge.size());
    for (std::size_t n = 0; n < state.charge.size(); ++n) {
        const bool active = state.charge[n] > 0.0;
        const double consumed =
            active ? params.discharge_rate_base +
                         params.discharge_per_demand * served_demand[n]
                   : 0.0;
        next.charge[n] = std::clamp(state.charge[n] - consumed + harvested,
                                    0.0, params.capacity);
    }
    return next;
}

std::vector<std::size_t> active_nodes(const EnergyState& state) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < state.charge.size(); ++n)
        if (state.charge[n] > 0.0) out.push_back(n);
    return out;
}

SustainabilityReport check_sustainability(const std::vector<SlotEnergy>& trace) {
    SustainabilityReport rep;
    if (trace.empty()) return rep;
    const std::size_t n_nodes = trace.front().consumed.size();
    std::vector<double> consumed(n_nodes, 0.0), harvested(n_nodes, 0.0);
    for (const auto& slot : trace) {
        for (std::size_t n = 0; n < n_nodes; ++n) {
            consumed[n] += slot.consumed[n];
            harvested[n] += slot.harvested[n];
        }
    }
    double total_c = 0.0, total_h = 0.0;
    for (std::size_t n = 0; n < n_nodes; ++n) {
        total_c += consumed[n];
        total_h += harvested[n];
        if (consumed[n] > harvested[n]) {
            rep.per_node_ok = false;
            rep.deficit_fraction = std::max(
                rep.deficit_fraction, (consumed[n] - harvested[n]) / consumed[n]);
        }
    }
    if (total_c > total_h) {
        rep.aggregate_ok = false;
        rep.deficit_fraction =
            std::max(rep.deficit_fraction, (total_c - total_h) / total_c);
    }
    return rep;
}

bool is_sustainable(const std::vector<SlotEnergy>& trace) {
    return check_sustainability(trace).sustainable();
}

} // namespace greenmesh
