#include "association.hpp"

#include <cmath>

#include "errors.hpp"

namespace greenmesh {

NodeCapacity NodeCapacity::bounded(double cap) {
    if (cap <= 0.0) throw ValidationError("NodeCapacity: must be positive");
    return {cap};
}

namespace {

struct ActiveNode {
    int candidate;
    double x, y;
    double served = 0.0;
};

std::vector<ActiveNode> collect_active(const Scenario& sc,
                                       const std::vector<int>& active) {
    std::vector<ActiveNode> nodes;
    nodes.reserve(active.size());
    for (int j : active) {
        if (j < 0 || j >= sc.num_candidates())
            throw DimensionError("associate: active candidate index out of range");
        const auto& c = sc.candidate_locations[j];
        nodes.push_back({j, c.x, c.y, 0.0});
    }
    return nodes;
}

} // namespace

AssocSlice nearest_cell_associate(const Scenario& sc,
                                  const std::vector<int>& active, int slot,
                                  NodeCapacity cap) {
    auto nodes = collect_active(sc, active);
    const double r2 = sc.coverage_radius * sc.coverage_radius;
    AssocSlice slice(sc.num_clients(), -1);
    for (const auto& cl : sc.clients) {
        const double d = cl.demand[slot];
        int best = -1;
        double best_d2 = 0.0;
        int best_cand = 0;
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            const double dx = cl.x - nodes[n].x, dy = cl.y - nodes[n].y;
            const double d2 = dx * dx + dy * dy;
            if (d2 > r2) continue;
            if (nodes[n].served + d > cap.max_demand_per_slot) continue;
            if (best < 0 || d2 < best_d2 ||
                (d2 == best_d2 && nodes[n].candidate < best_cand)) {
                best = static_cast<int>(n);
                best_d2 = d2;
                best_cand = nodes[n].candidate;
            }
        }
        if (best >= 0) {
            nodes[best].served += d;
            slice[cl.id] = nodes[best].candidate;
        }
    }
    return slice;
}

AssocSlice proportional_fairness_associate(const Scenario& sc,
                                           const std::vector<int>& active,
                                           int slot, NodeCapacity cap) {
    auto nodes = collect_active(sc, active);
    const double r2 = sc.coverage_radius * sc.coverage_radius;
    AssocSlice slice(sc.num_clients(), -1);
    for (const auto& cl : sc.clients) {
        const double d = cl.demand[slot];
        int best = -1;
        double best_gain = 0.0;
        int best_cand = 0;
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            const double dx = cl.x - nodes[n].x, dy = cl.y - nodes[n].y;
            if (dx * dx + dy * dy > r2) continue;
            if (nodes[n].served + d > cap.max_demand_per_slot) continue;
            const double gain = std::log1p(nodes[n].served + d) -
                                std::log1p(nodes[n].served);
            if (best < 0 || gain > best_gain ||
                (gain == best_gain && nodes[n].candidate < best_cand)) {
                best = static_cast<int>(n);
                best_gain = gain;
                best_cand = nodes[n].candidate;
            }
        }
        if (best >= 0) {
            nodes[best].served += d;
            slice[cl.id] = nodes[best].candidate;
        }
    }
    return slice;
}

AssocSlice associate(AssocPolicy policy, const Scenario& sc,
                     const std::vector<int>& active, int slot,
                     NodeCapacity cap) {
    return policy == AssocPolicy::NearestCell
               ? nearest_cell_associate(sc, active, slot, cap)
               : proportional_fairness_associate(sc, active, slot, cap);
}

BinaryAssociation to_binary(const AssociationMatrix& m, int num_candidates) {
    BinaryAssociation out;
    out.reserve(m.size());
    for (const auto& slice : m) {
        BinarySlice bs(slice.size(),
                       std::vector<std::uint8_t>(num_candidates, 0));
        for (std::size_t i = 0; i < slice.size(); ++i)
            if (slice[i] >= 0) bs[i][slice[i]] = 1;
        out.push_back(std::move(bs));
    }
    return out;
}

bool association_valid(const BinaryAssociation& m, const Scenario& sc,
                       const std::vector<std::vector<int>>& active_trace) {
    const double r2 = sc.coverage_radius * sc.coverage_radius;
    for (std::size_t l = 0; l < m.size(); ++l) {
        std::vector<bool> active(sc.num_candidates(), false);
        if (l < active_trace.size())
            for (int j : active_trace[l]) active[j] = true;
        for (std::size_t i = 0; i < m[l].size(); ++i) {
            int assigned = 0;
            for (std::size_t j = 0; j < m[l][i].size(); ++j) {
                if (!m[l][i][j]) continue;
                ++assigned;
                if (!active[j]) return false;
                const auto& c = sc.candidate_locations[j];
                const auto& cl = sc.clients[i];
                const double dx = cl.x - c.x, dy = cl.y - c.y;
                if (dx * dx + dy * dy > r2) return false;
            }
            if (assigned > 1) return false;
        }
    }
    return true;
}

} // namespace greenmesh
