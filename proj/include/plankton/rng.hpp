// Deterministic splitmix64 generator. Hand-rolled so sampled values are
// identical across platforms and across serial/parallel sweep paths.
#ifndef PLANKTON_RNG_HPP
#define PLANKTON_RNG_HPP

#include <cstdint>

namespace plankton {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Stateless mix for per-index substreams of a base seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return r.next();
}

}  // namespace plankton

#endif
