#include "plankton/chaos_control.hpp"

#include <cmath>
#include <stdexcept>

#include "plankton/stability.hpp"

namespace plankton {

ControlGains ControlTriangle::centroid() const {
    return {(vertices[0].s1 + vertices[1].s1 + vertices[2].s1) / 3.0,
            (vertices[0].s2 + vertices[1].s2 + vertices[2].s2) / 3.0};
}

State controlled_step(const ModelParams& p, const ControlGains& g,
                      const State& fp, const State& s) {
    State next = step(p, s);
    next.u += -g.s1 * (s.u - fp.u) - g.s2 * (s.v - fp.v);
    return next;
}

namespace {

ControlGains intersect(const GainLine& a, const GainLine& b) {
    const double det = a.a * b.b - a.b * b.a;
    if (std::fabs(det) < 1e-12)
        throw std::runtime_error("control_triangle: marginal-stability lines are parallel");
    return {(-a.c * b.b + a.b * b.c) / det, (-a.a * b.c + a.c * b.a) / det};
}

}  // namespace

ControlTriangle control_triangle(const ModelParams& p, const State& fp) {
    p.validate();
    const double u = fp.u;
    const double uh = response_pow(u, p.h);
    const double w = 1.0 + p.c * uh;
    const double gh = p.gamma * p.h * (1.0 - u) / w;  // gamma h (1-u)/(1+cu^h)
    const double qv = q_of_u(p, u);

    ControlTriangle tri;
    tri.l1 = {1.0, -gh, 1.0 - qv};
    tri.l2 = {0.0, p.gamma, p.r};
    tri.l3 = {2.0, -gh,
              -2.0 - (1.0 - u) * (4.0 - 2.0 * p.h + p.r * p.h + 4.0 * p.c * uh) / w};
    tri.vertices = {intersect(tri.l1, tri.l2), intersect(tri.l2, tri.l3),
                    intersect(tri.l3, tri.l1)};
    return tri;
}

GainStability is_stable(const ModelParams& p, const State& fp, const ControlGains& g) {
    const double u = fp.u;
    const double uh = response_pow(u, p.h);
    const double w = 1.0 + p.c * uh;
    const double a10 = (1.0 - u) * (2.0 - p.h + 2.0 * p.c * uh) / w;
    const double trace = 1.0 - g.s1 + a10;
    const double det = a10 - g.s1 + p.r * p.h * (1.0 - u) / w +
                       p.gamma * p.h * (1.0 - u) / w * g.s2;

    GainStability out;
    const double disc = trace * trace - 4.0 * det;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        out.lambda1 = (trace - sq) / 2.0;
        out.lambda2 = (trace + sq) / 2.0;
    } else {
        const double im = std::sqrt(-disc) / 2.0;
        out.lambda1 = {trace / 2.0, -im};
        out.lambda2 = {trace / 2.0, im};
    }
    // marginal roots count as unstable; the band absorbs rounding when the
    // gains sit exactly on a stability-boundary line
    out.stable = std::abs(out.lambda1) < 1.0 - 1e-12 && std::abs(out.lambda2) < 1.0 - 1e-12;
    return out;
}

}  // namespace plankton
