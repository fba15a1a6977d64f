#ifndef GREENMESH_ENERGY_HPP
#define GREENMESH_ENERGY_HPP

#include <cstddef>
#include <vector>

namespace greenmesh {

struct EnergyParams {
    double capacity = 100.0;
    double charge_rate = 10.0;          // energy gained per daylight slot
    double discharge_rate_base = 5.0;   // energy burned per active slot
    double discharge_per_demand = 0.0;  // extra energy per served demand unit

    // Throws ValidationError on nonpositive capacity or negative rates.
    void validate() const;
};

// Immutable per-slot snapshot; step_energy returns a new state.
struct EnergyState {
    std::vector<double> charge; // one entry per placed node
    int slot = 0;
};

// Per-slot totals feeding the sustainability check.
struct SlotEnergy {
    std::vector<double> consumed;  // per placed node
    std::vector<double> harvested; // per placed node
};

struct SustainabilityReport {
    bool per_node_ok = true;   // consumed <= harvested for every node
    bool aggregate_ok = true;  // total consumed <= total harvested
    // Worst relative shortfall, max over nodes and aggregate of
    // (consumed - harvested) / consumed, clamped at 0. Feeds the fitness
    // penalty.
    double deficit_fraction = 0.0;

    bool sustainable() const { return per_node_ok && aggregate_ok; }
};

EnergyState initial_state(std::size_t num_placed_nodes, const EnergyParams& params);

// One slot: active nodes (charge > 0) burn base + per-demand energy, every
// node harvests charge_rate during daylight; charge clamps to [0, capacity].
EnergyState step_energy(const EnergyState& state,
                        const std::vector<double>& served_demand,
                        bool is_daylight, const EnergyParams& params);

// Nodes with charge > 0. Depleted nodes are off for the slot.
std::vector<std::size_t> active_nodes(const EnergyState& state);

SustainabilityReport check_sustainability(const std::vector<SlotEnergy>& trace);
bool is_sustainable(const std::vector<SlotEnergy>& trace);

} // namespace greenmesh

#endif
