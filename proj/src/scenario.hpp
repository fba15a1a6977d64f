#ifndef GREENMESH_SCENARIO_HPP
#define GREENMESH_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace greenmesh {

struct CandidateLocation {
    int index = 0; // 0-based, contiguous
    double x = 0.0;
    double y = 0.0;
};

struct Client {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    std::vector<double> demand; // one entry per time slot
};

// Immutable problem instance. Solvers never mutate a Scenario; it is safe to
// share across threads.
struct Scenario {
    double field_width = 1000.0;
    double field_height = 1000.0;
    int grid_rows = 6;
    int grid_cols = 6;
    std::vector<CandidateLocation> candidate_locations;
    std::vector<Client> clients;
    int num_slots = 24;
    std::vector<int> daylight_slots; // 0-based slot indices
    double coverage_radius = 0.0;
    double failure_threshold = 0.05;
    // Demand units per slot above which a placed node is flagged gateway.
    // Negative means "unset": no node is flagged until the experiment layer
    // resolves it from a reference run.
    double gateway_demand_threshold = -1.0;

    int num_candidates() const { return static_cast<int>(candidate_locations.size()); }
    int num_clients() const { return static_cast<int>(clients.size()); }
    bool is_daylight(int slot) const;

    // Throws ValidationError naming the offending field.
    void validate() const;
};

struct GeneratorConfig {
    double field_width = 1000.0;
    double field_height = 1000.0;
    int grid_rows = 6;
    int grid_cols = 6;
    int num_clients = 100;
    int num_slots = 24;
    // Day/night step profile: demand_high during daylight slots, 0.2x otherwise.
    double demand_high = 1.0;
    // <= 0 means default to the grid cell diagonal.
    double coverage_radius = 0.0;
    double failure_threshold = 0.05;
    double gateway_demand_threshold = -1.0;
    // Empty means the default window, slots 6..17 of a 24-slot day (scaled
    // proportionally for other slot counts).
    std::vector<int> daylight_slots;
};

// Pure function of (config, seed): grid candidates at cell centers, clients
// sampled uniformly over the field.
Scenario generate_scenario(const GeneratorConfig& config, std::uint64_t seed);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

// Client ids within coverage_radius (inclusive) of candidate j.
std::vector<int> clients_in_range(const Scenario& scenario, int j);

} // namespace greenmesh

#endif
