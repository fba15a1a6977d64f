#ifndef GREENMESH_PLACEMENT_HPP
#define GREENMESH_PLACEMENT_HPP

#include <cstdint>
#include <vector>

namespace greenmesh {

// Binary decision vector over candidate locations. Gateway flags are role
// metadata derived during evaluation; a gateway is always a placed node.
struct Placement {
    std::vector<std::uint8_t> placed;
    std::vector<std::uint8_t> gateway_flags;

    Placement() = default;
    explicit Placement(std::size_t num_candidates)
        : placed(num_candidates, 0), gateway_flags(num_candidates, 0) {}

    int node_count() const {
        int n = 0;
        for (auto p : placed) n += p;
        return n;
    }

    std::vector<int> placed_indices() const {
        std::vector<int> out;
        for (std::size_t j = 0; j < placed.size(); ++j)
            if (placed[j]) out.push_back(static_cast<int>(j));
        return out;
    }
};

} // namespace greenmesh

#endif
