// Neimark-Sacker analysis at the interior fixed point: third-order Taylor
// coefficients of the shifted map at criticality, the transversality value,
// the plane change to normal-form coordinates, and the discriminating
// quantity L that decides the stability of the bifurcating invariant curve.
#ifndef PLANKTON_NS_BIFURCATION_HPP
#define PLANKTON_NS_BIFURCATION_HPP

#include <complex>

#include "plankton/model.hpp"

namespace plankton {

// Coefficients of the shifted map (x,y) -> (x',y') around the fixed point
// at gamma = gamma0, up to third order. a02, a03, a12, b02, b03, b12 vanish
// identically for this map and are not stored.
struct TaylorCoeffs {
    double a10, a01, a20, a11, a30, a21;
    double b10, b01, b20, b11, b30, b21;
};

TaylorCoeffs taylor_coeffs(const ModelParams& at_gamma0, const State& fixed_point);

// d|lambda|/dgamma* at the critical parameter (fixed point frozen at its
// gamma0 position), i.e. the derivative of sqrt(det J(gamma*)) at 0:
//   (1-u)/(2(1+cu^h)) * [ u^h (2-h+2cu^h)/(1+cu^h) + r h / gamma0 ].
// Strictly positive for admissible parameters.
double transversality(const ModelParams& at_gamma0, const State& fixed_point);

// Quadratic/cubic coefficients of the map in normal-form coordinates
// (X,Y) = T^{-1} (x,y) with T = [[mn, -n],[0, 1]].
struct NormalFormCoeffs {
    double c20, c11, c02, c30, c21, c12, c03;
    double d20, d11, d02, d30, d21, d12, d03;

    // Partial derivatives of (F, G) at the origin.
    double FXX() const { return 2 * c20; }
    double FXY() const { return c11; }
    double FYY() const { return 2 * c02; }
    double FXXX() const { return 6 * c30; }
    double FXXY() const { return 2 * c21; }
    double FXYY() const { return 2 * c12; }
    double FYYY() const { return 6 * c03; }
    double GXX() const { return 2 * d20; }
    double GXY() const { return d11; }
    double GYY() const { return 2 * d02; }
    double GXXX() const { return 6 * d30; }
    double GXXY() const { return 2 * d21; }
    double GXYY() const { return 2 * d12; }
    double GYYY() const { return 6 * d03; }
};

NormalFormCoeffs normal_form(const TaylorCoeffs& t, double m, double n);

enum class CurveDirection {
    AttractingCurveForGammaAbove,  // L < 0
    RepellingCurveForGammaBelow,   // L > 0
};

const char* to_string(CurveDirection d);

struct NSReport {
    double gamma0;
    State fixed_point;
    std::complex<double> lambda1;  // negative imaginary part
    std::complex<double> lambda2;  // conjugate
    double alpha;                  // sqrt(3 - a10^2 - 2 a10)
    double m, n;                   // transform entries m = alpha/(1-a10), n = r/(2 gamma0)
    TaylorCoeffs taylor;
    NormalFormCoeffs nf;
    std::complex<double> L20, L11, L02, L21;
    double L;
    CurveDirection direction;
    double transversality;
};

// Assembles the full report from given Taylor coefficients. Exposed so an
// independent (finite-difference) coefficient source can be pushed through
// the identical downstream algebra.
NSReport ns_report_from_taylor(double gamma0, const State& fixed_point,
                               const TaylorCoeffs& t, double r);

// Full pipeline for (r, c, h): computes gamma0, the fixed point there, the
// analytic Taylor coefficients and the report. params.gamma is ignored; the
// analysis always sits at the computed critical parameter. Throws
// std::domain_error when no critical parameter exists or the eigenvalue
// pair degenerates (alpha^2 <= 0).
NSReport lyapunov_quantity(const ModelParams& params);

}  // namespace plankton

#endif
