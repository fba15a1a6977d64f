#ifndef GREENMESH_TEST_HELPERS_HPP
#define GREENMESH_TEST_HELPERS_HPP

#include <vector>

#include "../src/evaluation.hpp"
#include "../src/scenario.hpp"

namespace gmtest {

// Energy setup where batteries never deplete and every run is sustainable:
// coverage alone decides feasibility.
inline greenmesh::EnergyParams easy_energy() {
    greenmesh::EnergyParams p;
    p.capacity = 100.0;
    p.charge_rate = 10.0;
    p.discharge_rate_base = 5.0;
    p.discharge_per_demand = 0.0;
    return p;
}

// 2x2 grid over 400x400 m with two client clusters; with failure_threshold 0
// the minimum feasible placement is exactly the two cluster-corner cells.
inline greenmesh::Scenario toy_scenario() {
    greenmesh::GeneratorConfig cfg;
    cfg.field_width = 400.0;
    cfg.field_height = 400.0;
    cfg.grid_rows = 2;
    cfg.grid_cols = 2;
    cfg.num_clients = 8;
    cfg.num_slots = 4;
    cfg.daylight_slots = {1, 2};
    cfg.coverage_radius = 80.0;
    cfg.failure_threshold = 0.0;
    greenmesh::Scenario sc = greenmesh::generate_scenario(cfg, 1);
    // Clusters near candidates 0 (100,100) and 3 (300,300).
    for (int i = 0; i < 8; ++i) {
        const double base = i < 4 ? 100.0 : 300.0;
        sc.clients[i].x = base + 10.0 * (i % 4);
        sc.clients[i].y = base - 10.0 * (i % 2);
    }
    return sc;
}

inline greenmesh::Scenario random_scenario(int rows, int cols, int clients,
                                           std::uint64_t seed,
                                           double fth = 0.05) {
    greenmesh::GeneratorConfig cfg;
    cfg.grid_rows = rows;
    cfg.grid_cols = cols;
    cfg.num_clients = clients;
    cfg.failure_threshold = fth;
    return greenmesh::generate_scenario(cfg, seed);
}

inline greenmesh::Placement placement_from_mask(std::uint32_t mask, int ns) {
    greenmesh::Placement p(ns);
    for (int j = 0; j < ns; ++j)
        if (mask & (1u << j)) p.placed[j] = 1;
    return p;
}

} // namespace gmtest

#endif
