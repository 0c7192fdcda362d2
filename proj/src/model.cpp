#include "plankton/model.hpp"

#include <cmath>

namespace plankton {

State step(const ModelParams& p, const State& s) {
    const double uh = response_pow(s.u, p.h);
    const double w = 1.0 + p.c * uh;
    return {s.u * (2.0 - s.u) - uh * s.v / w,
            p.gamma * uh * s.v / w + (1.0 - p.r) * s.v};
}

Jacobian jacobian(const ModelParams& p, const State& s) {
    const double uh = response_pow(s.u, p.h);
    const double uhm1 = p.h == 1 ? 1.0 : s.u;  // u^{h-1}, u^0 := 1
    const double w = 1.0 + p.c * uh;
    return {2.0 - 2.0 * s.u - p.h * s.v * uhm1 / (w * w),
            -uh / w,
            p.gamma * p.h * s.v * uhm1 / (w * w),
            p.gamma * uh / w + 1.0 - p.r};
}

std::pair<State, State> boundary_fixed_points() {
    return {State{0.0, 0.0}, State{1.0, 0.0}};
}

std::optional<State> positive_fixed_point(const ModelParams& p) {
    p.validate();
    if (!(p.gamma > p.r * (1.0 + p.c))) return std::nullopt;
    const double uh = p.r / (p.gamma - p.r * p.c);
    const double u = p.h == 1 ? uh : std::sqrt(uh);
    const double v = (1.0 - u) * (1.0 + p.c * uh) / (p.h == 1 ? 1.0 : u);
    return State{u, v};
}

bool nonnegativity_condition(const ModelParams& p) {
    p.validate();
    const double r_cap = (p.c + 1.0 + p.gamma) / (p.c + 1.0);
    if (p.gamma <= -1.0) return p.c >= -1.0 - p.gamma && p.r <= r_cap;
    if (p.gamma <= 0.0) return p.r <= r_cap;
    return p.r <= 1.0;
}

}  // namespace plankton
