#ifndef GREENMESH_ASSOCIATION_HPP
#define GREENMESH_ASSOCIATION_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "scenario.hpp"

namespace greenmesh {

struct NodeCapacity {
    double max_demand_per_slot = std::numeric_limits<double>::infinity();

    static NodeCapacity unbounded() { return {}; }
    static NodeCapacity bounded(double cap);
};

// One slot of the a_ij(l) matrix: assigned candidate index per client, -1 if
// unassigned. At most one node per client by construction.
using AssocSlice = std::vector<int>;
using AssociationMatrix = std::vector<AssocSlice>; // one slice per slot

enum class AssocPolicy { NearestCell, ProportionalFairness };

// Each client (ascending id) takes the nearest active in-range node with
// remaining capacity. Ties break to the lowest candidate index.
AssocSlice nearest_cell_associate(const Scenario& scenario,
                                  const std::vector<int>& active_candidates,
                                  int slot, NodeCapacity cap);

// Greedy log-utility: each client (ascending id) takes the in-range active
// node with remaining capacity that maximizes the marginal gain of
// sum_j log(1 + served_j). Ties break to the lowest candidate index.
AssocSlice proportional_fairness_associate(const Scenario& scenario,
                                           const std::vector<int>& active_candidates,
                                           int slot, NodeCapacity cap);

AssocSlice associate(AssocPolicy policy, const Scenario& scenario,
                     const std::vector<int>& active_candidates, int slot,
                     NodeCapacity cap);

// Explicit binary form, for invariant checking on hand-built matrices.
using BinarySlice = std::vector<std::vector<std::uint8_t>>; // [client][candidate]
using BinaryAssociation = std::vector<BinarySlice>;         // per slot

BinaryAssociation to_binary(const AssociationMatrix& m, int num_candidates);

// True iff every client is served by at most one node per slot and every
// assignment targets an active in-range node.
bool association_valid(const BinaryAssociation& m, const Scenario& scenario,
                       const std::vector<std::vector<int>>& active_trace);

} // namespace greenmesh

#endif
