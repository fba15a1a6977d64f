#ifndef GREENMESH_RNG_HPP
#define GREENMESH_RNG_HPP

#include <cstdint>
#include <random>

namespace greenmesh {

// Seeded generator with a fixed draw protocol. Solvers draw in a documented
// order so that traces are reproducible for a given seed; distribution
// helpers are hand-rolled because std:: distributions are
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t index(std::uint64_t n) { return gen_() % n; }

private:
    std::mt19937_64 gen_;
};

} // namespace greenmesh

#endif
