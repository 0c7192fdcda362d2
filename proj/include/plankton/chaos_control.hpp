// Linear state-feedback control of the interior fixed point: the controlled
// map, the characteristic polynomial of its Jacobian, and the triangle of
// stabilizing gains bounded by the three marginal-stability lines.
#ifndef PLANKTON_CHAOS_CONTROL_HPP
#define PLANKTON_CHAOS_CONTROL_HPP

#include <array>
#include <complex>

#include "plankton/model.hpp"

namespace plankton {

struct ControlGains {
    double s1 = 0.0;
    double s2 = 0.0;
};

// a*s1 + b*s2 + c = 0
struct GainLine {
    double a, b, c;

    double eval(const ControlGains& g) const { return a * g.s1 + b * g.s2 + c; }
};

// The stable-gain region in the (s1, s2) plane. Vertices are ordered
// l1^l2, l2^l3, l3^l1.
struct ControlTriangle {
    GainLine l1;  // lambda1*lambda2 = 1
    GainLine l2;  // lambda = 1
    GainLine l3;  // lambda = -1
    std::array<ControlGains, 3> vertices;

    ControlGains centroid() const;
};

// One iterate of the controlled system: the u-equation gains
// delta = -s1 (u - u_bar) - s2 (v - v_bar), the v-equation is unchanged.
State controlled_step(const ModelParams& p, const ControlGains& g,
                      const State& fixed_point, const State& s);

// Marginal-stability lines and their pairwise intersections. Throws
// std::runtime_error on a (theoretically impossible) parallel pair.
ControlTriangle control_triangle(const ModelParams& p, const State& fixed_point);

struct GainStability {
    bool stable;  // both roots strictly inside the unit circle
    std::complex<double> lambda1, lambda2;
};

// Roots of the controlled Jacobian's characteristic polynomial at the fixed
// point. Marginal roots classify as not stable: the strict comparison uses
// a 1e-12 band so gains sitting exactly on a boundary line never pass.
GainStability is_stable(const ModelParams& p, const State& fixed_point,
                        const ControlGains& g);

}  // namespace plankton

#endif
