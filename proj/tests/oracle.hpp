// Independent brute-force oracles. These deliberately avoid the solver
// implementations: plain mask enumeration, plain distance scans.
#ifndef GREENMESH_TEST_ORACLE_HPP
#define GREENMESH_TEST_ORACLE_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "../src/evaluation.hpp"
#include "../src/scenario.hpp"
#include "helpers.hpp"

namespace gmtest {

// All-pairs distance scan: client ids within radius of candidate j.
inline std::vector<int> brute_clients_in_range(const greenmesh::Scenario& sc,
                                               int j) {
    std::vector<int> out;
    const auto& c = sc.candidate_locations[j];
    for (const auto& cl : sc.clients) {
        if (std::hypot(cl.x - c.x, cl.y - c.y) <= sc.coverage_radius)
            out.push_back(cl.id);
    }
    return out;
}

// Per-client nearest active in-range candidate, unbounded capacity.
inline std::vector<int> brute_nearest(const greenmesh::Scenario& sc,
                                      const std::vector<int>& active) {
    std::vector<int> out(sc.num_clients(), -1);
    for (const auto& cl : sc.clients) {
        double best = sc.coverage_radius;
        for (int j : active) {
            const auto& c = sc.candidate_locations[j];
            const double d = std::hypot(cl.x - c.x, cl.y - c.y);
            if (d < best || (d <= best && out[cl.id] < 0)) {
                best = d;
                out[cl.id] = j;
            }
        }
    }
    return out;
}

struct BruteOptimum {
    bool any_feasible = false;
    int min_nodes = 0;
    std::uint32_t best_mask = 0; // lowest feasible mask of minimum cardinality
};

// Enumerates every subset in plain mask order and keeps the minimum feasible
// cardinality (among ties, the mask whose lowest-index composition comes
// first in cardinality-lexicographic order).
inline BruteOptimum brute_force_optimum(const greenmesh::Scenario& sc,
                                        const greenmesh::EnergyParams& params,
                                        greenmesh::AssocPolicy policy) {
    const int ns = sc.num_candidates();
    BruteOptimum best;
    for (std::uint32_t mask = 0; mask < (1u << ns); ++mask) {
        greenmesh::Placement p = placement_from_mask(mask, ns);
        greenmesh::FeasibilityReport rep =
            greenmesh::evaluate(sc, p, params, policy);
        if (!rep.feasible) continue;
        const int count = p.node_count();
        if (!best.any_feasible || count < best.min_nodes) {
            best.any_feasible = true;
            best.min_nodes = count;
            best.best_mask = mask;
        }
    }
    return best;
}

// Best achievable sum of log(1 + served_j) over all per-client assignment
// choices (including "unassigned"); exponential, only for tiny instances.
inline double brute_best_log_utility(const greenmesh::Scenario& sc,
                                     const std::vector<int>& active, int slot) {
    const int nc = sc.num_clients();
    const int options = static_cast<int>(active.size()) + 1;
    std::vector<int> choice(nc, 0);
    double best = 0.0;
    for (;;) {
        std::vector<double> served(active.size(), 0.0);
        bool valid = true;
        for (int i = 0; i < nc && valid; ++i) {
            if (choice[i] == 0) continue;
            const int j = active[choice[i] - 1];
            const auto& c = sc.candidate_locations[j];
            const auto& cl = sc.clients[i];
            if (std::hypot(cl.x - c.x, cl.y - c.y) > sc.coverage_radius)
                valid = false;
            else
                served[choice[i] - 1] += cl.demand[slot];
        }
        if (valid) {
            double u = 0.0;
            for (double s : served) u += std::log1p(s);
            if (u > best) best = u;
        }
        int i = 0;
        while (i < nc && ++choice[i] == options) choice[i++] = 0;
        if (i == nc) break;
    }
    return best;
}

} // namespace gmtest

#endif
