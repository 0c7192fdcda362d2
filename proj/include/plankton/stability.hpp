// Fixed-point classification via the quadratic Jury conditions, and the
// critical parameter gamma0 where the interior fixed point loses stability.
#ifndef PLANKTON_STABILITY_HPP
#define PLANKTON_STABILITY_HPP

#include <complex>
#include <optional>
#include <vector>

#include "plankton/model.hpp"

namespace plankton {

enum class StabilityClass { Attracting, Repelling, Saddle, NonHyperbolic };

const char* to_string(StabilityClass cls);

struct FixedPointReport {
    State point;
    StabilityClass classification;
    std::complex<double> lambda1, lambda2;
    // Characteristic-polynomial values at the interior fixed point; absent
    // for the boundary points where the classification is direct.
    std::optional<double> p_value;
    std::optional<double> q_value;
};

// Tolerance band around unit-modulus eigenvalues: any of |F(-1)|, |C-1| or
// an eigenvalue modulus within tol of the marginal value classifies as
// NonHyperbolic.
inline constexpr double kDefaultStabilityTol = 1e-9;

// Root placement of F(lambda) = lambda^2 + B lambda + C relative to the unit
// circle. Uses the Jury cases when F(1) > 0 and falls back to direct root
// moduli otherwise, so it is total in (B, C).
StabilityClass jury_classify(double B, double C, double tol = kDefaultStabilityTol);

// trace/det convenience wrapper: classifies lambda^2 - T lambda + D.
StabilityClass classify_trace_det(double T, double D, double tol = kDefaultStabilityTol);

// E0 = (0,0): eigenvalues 2 and 1-r.
FixedPointReport classify_E0(const ModelParams& p, double tol = kDefaultStabilityTol);

// E1 = (1,0): eigenvalues 0 and gamma/(1+c) + 1 - r.
FixedPointReport classify_E1(const ModelParams& p, double tol = kDefaultStabilityTol);

// Interior fixed point; absent when gamma <= r(1+c). Classification is
// decided by q(u): <1 attracting, >1 repelling, =1 non-hyperbolic.
std::optional<FixedPointReport> classify_positive(const ModelParams& p,
                                                  double tol = kDefaultStabilityTol);

// p(u) = 1 + (1-u)(2-h+2cu^h)/(1+cu^h), the Jacobian trace at the interior
// fixed point, and q(u) = (1-u)(2-h+rh+2cu^h)/(1+cu^h), its determinant.
double p_of_u(const ModelParams& p, double u);
double q_of_u(const ModelParams& p, double u);

struct CriticalGammaResult {
    // Smallest admissible solution of q(u(gamma)) = 1, when one exists.
    std::optional<double> gamma0;
    // All real roots of the defining equation (h=2: the cubic in gamma,
    // possibly degenerated to a quadratic at r=1/2; h=1: the closed form).
    std::vector<double> real_roots;
    // Roots passing the admissibility filter gamma > r(1+c), |q(u)-1| small.
    std::vector<double> admissible;
};

// Critical bifurcation parameter for (r, c, h).
//  h=1: closed form gamma0 = (1-c+r+2rc + sqrt((1-c)^2+2r+6rc+r^2))/2.
//  h=2: real roots of the cubic
//       (2r-1)^2 g^3 - (rc(2r-1)(6r-5)+4r^3) g^2
//       + 4r^2 c (r-1)(3rc-2c+2r) g - 4r^3 c^2 (r-1)^2 (c+1) = 0,
//       filtered by back-substitution q(u(g)) = 1 and Newton-polished on
//       q(u(g)) - 1 so the invariant holds to machine precision.
CriticalGammaResult find_critical_gamma(double r, double c, int h);

// Shorthand that throws std::domain_error when no admissible root exists.
double critical_gamma(double r, double c, int h);

}  // namespace plankton

#endif
