#include "plankton/orbit.hpp"

#include <cmath>

#include "plankton/rng.hpp"

namespace plankton {

bool is_divergent(const State& s) {
    return !std::isfinite(s.u) || !std::isfinite(s.v) ||
           std::fabs(s.u) > kDivergenceThreshold || std::fabs(s.v) > kDivergenceThreshold;
}

OrbitRecord simulate(const ModelParams& p, const State& s0, long n) {
    p.validate();
    if (n < 0) throw std::invalid_argument("simulate: n must be >= 0");
    OrbitRecord orbit;
    orbit.params = p;
    orbit.initial = s0;
    orbit.states.reserve(static_cast<std::size_t>(n) + 1);
    State s = s0;
    orbit.states.push_back(s);
    for (long k = 0; k < n; ++k) {
        s = step(p, s);
        if (is_divergent(s)) {
            orbit.diverged = true;
            break;
        }
        orbit.states.push_back(s);
    }
    return orbit;
}

MleResult max_lyapunov(const ModelParams& p, const State& s0, long n,
                       long transient, std::uint64_t seed, long renorm_stride) {
    p.validate();
    if (n < 1) throw std::invalid_argument("max_lyapunov: n must be >= 1");
    if (transient < 0) throw std::invalid_argument("max_lyapunov: transient must be >= 0");
    if (renorm_stride < 1) renorm_stride = 1;

    MleResult res;
    State s = s0;
    for (long k = 0; k < transient; ++k) {
        s = step(p, s);
        if (is_divergent(s)) {
            // nothing accumulated yet
            res.diverged = true;
            res.value = std::nan("");
            return res;
        }
    }

    Rng rng(seed);
    const double theta = 2.0 * M_PI * rng.uniform();
    double w1 = std::cos(theta), w2 = std::sin(theta);
    double acc = 0.0;
    long k = 0;
    for (; k < n; ++k) {
        const Jacobian j = jacobian(p, s);
        const double y1 = j.j11 * w1 + j.j12 * w2;
        const double y2 = j.j21 * w1 + j.j22 * w2;
        w1 = y1;
        w2 = y2;
        if ((k + 1) % renorm_stride == 0 || k + 1 == n) {
            const double nm = std::hypot(w1, w2);
            if (nm == 0.0 || !std::isfinite(nm)) {
                res.diverged = true;
                break;
            }
            acc += std::log(nm);
            w1 /= nm;
            w2 /= nm;
        }
        s = step(p, s);
        if (is_divergent(s)) {
            res.diverged = true;
            ++k;
            break;
        }
    }
    res.steps = k;
    res.value = k > 0 ? acc / static_cast<double>(k) : std::nan("");
    return res;
}

}  // namespace plankton
