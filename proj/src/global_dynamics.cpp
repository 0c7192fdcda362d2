#include "plankton/global_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace plankton {

const char* to_string(InvariantSetKind k) {
    switch (k) {
        case InvariantSetKind::M1: return "M1";
        case InvariantSetKind::M2: return "M2";
        case InvariantSetKind::M3: return "M3";
        case InvariantSetKind::N1: return "N1";
        case InvariantSetKind::N2: return "N2";
        case InvariantSetKind::AxisU: return "AxisU";
        case InvariantSetKind::AxisV: return "AxisV";
    }
    return "?";
}

std::optional<InvariantSetKind> invariant_set_kind_from_string(const char* name) {
    for (auto k : {InvariantSetKind::M1, InvariantSetKind::M2, InvariantSetKind::M3,
                   InvariantSetKind::N1, InvariantSetKind::N2, InvariantSetKind::AxisU,
                   InvariantSetKind::AxisV})
        if (std::strcmp(name, to_string(k)) == 0) return k;
    return std::nullopt;
}

double psi(double c, double x) {
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    return (2.0 - x) * (1.0 + c * x * x) / x;
}

PsiMin psi_min(double c) {
    if (!(c > 27.0 / 4.0))
        throw std::domain_error("psi_min: requires c > 27/4 (nu has no root in (0, 2/3))");
    // nu(0) = 1 > 0 and nu(2/3) = (27-4c)/27 < 0 bracket the root
    auto nu = [c](double x) { return c * x * x * x - c * x * x + 1.0; };
    double lo = 0.0, hi = 2.0 / 3.0;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (nu(mid) > 0.0) lo = mid; else hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    return {x, psi(c, x)};
}

InvariantSetSpec make_invariant_set(InvariantSetKind kind, const ModelParams& params) {
    params.validate();
    InvariantSetSpec spec{kind, params, std::nullopt};
    if (kind == InvariantSetKind::N2) spec.psi_min_value = psi_min(params.c).value;
    return spec;
}

bool admissible(const InvariantSetSpec& spec) {
    const double c = spec.params.c;
    const int h = spec.params.h;
    switch (spec.kind) {
        case InvariantSetKind::M1: return h == 1 && c <= 0.5;
        case InvariantSetKind::M2: return h == 1 && c >= 1.0;
        case InvariantSetKind::M3: return h == 1 && c > 0.5 && c < 1.0;
        case InvariantSetKind::N1: return h == 2 && c <= 27.0 / 4.0;
        case InvariantSetKind::N2: return h == 2 && c > 27.0 / 4.0;
        case InvariantSetKind::AxisU: return true;
        case InvariantSetKind::AxisV: return spec.params.r <= 1.0;
    }
    return false;
}

bool invariance_hypothesis(const ModelParams& p) {
    return nonnegativity_condition(p) && p.gamma <= p.r * (1.0 + p.c);
}

bool contains(const InvariantSetSpec& spec, const State& s) {
    const double c = spec.params.c;
    switch (spec.kind) {
        case InvariantSetKind::M1:
            return s.u >= 0.0 && s.u <= 1.0 && s.v >= 0.0 &&
                   s.v <= (2.0 - s.u) * (1.0 + c * s.u);
        case InvariantSetKind::M2:
            return s.u >= 0.0 && s.u <= 1.0 && s.v >= 0.0 && s.v <= 2.0;
        case InvariantSetKind::M3:
            return s.u >= 0.0 && s.u <= 1.0 && s.v >= 0.0 &&
                   s.v <= std::min(2.0, (2.0 - s.u) * (1.0 + c * s.u));
        case InvariantSetKind::N1:
            return s.u >= 0.0 && s.u <= 1.0 && s.v >= 0.0 && s.v <= psi(c, s.u);
        case InvariantSetKind::N2:
            return s.u >= 0.0 && s.u <= 1.0 && s.v >= 0.0 && s.v <= *spec.psi_min_value;
        case InvariantSetKind::AxisU:
            return s.v == 0.0 && s.u >= 0.0 && s.u <= 2.0;
        case InvariantSetKind::AxisV:
            return s.u == 0.0 && s.v >= 0.0;
    }
    return false;
}

bool verify_step_stays(const InvariantSetSpec& spec, const State& s) {
    return contains(spec, step(spec.params, s));
}

Convergence converges_to_E1(const ModelParams& params, const State& s0,
                            long max_iter, double tol) {
    params.validate();
    State s = s0;
    for (long n = 0; n <= max_iter; ++n) {
        if (std::fabs(s.u - 1.0) < tol && std::fabs(s.v) < tol) return {true, n};
        s = step(params, s);
        if (!std::isfinite(s.u) || !std::isfinite(s.v)) return {false, n};
    }
    return {false, max_iter};
}

}  // namespace plankton
