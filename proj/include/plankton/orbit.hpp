// Orbit iteration and the maximum Lyapunov exponent estimator.
#ifndef PLANKTON_ORBIT_HPP
#define PLANKTON_ORBIT_HPP

#include <cstdint>
#include <vector>

#include "plankton/model.hpp"

namespace plankton {

// Iterates whose magnitude exceeds this (or go non-finite) count as
// divergent; the map blows up outside its invariant sets.
inline constexpr double kDivergenceThreshold = 1e6;

bool is_divergent(const State& s);

struct OrbitRecord {
    ModelParams params;
    State initial;
    std::vector<State> states;  // states[0] == initial
    bool diverged = false;      // orbit truncated at the first bad iterate
};

// n map steps from s0 (n+1 states recorded when no divergence occurs).
OrbitRecord simulate(const ModelParams& p, const State& s0, long n);

struct MleResult {
    double value = 0.0;   // (1/steps) sum log ||J(x_k) w_k||
    bool diverged = false;
    long steps = 0;       // accumulation steps actually performed
};

// Tangent-vector estimate of the maximum Lyapunov exponent: w is
// renormalized every renorm_stride steps and the log norms accumulate after
// the transient is discarded. The initial unit tangent is (1,0) rotated by
// a seed-derived angle. On divergence the value computed so far is
// reported with the flag set.
MleResult max_lyapunov(const ModelParams& p, const State& s0, long n,
                       long transient, std::uint64_t seed = 0,
                       long renorm_stride = 1);

}  // namespace plankton

#endif
