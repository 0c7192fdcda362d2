#include "plankton/ns_bifurcation.hpp"

#include <cmath>
#include <stdexcept>

#include "plankton/stability.hpp"

namespace plankton {

const char* to_string(CurveDirection d) {
    switch (d) {
        case CurveDirection::AttractingCurveForGammaAbove: return "AttractingCurveForGammaAbove";
        case CurveDirection::RepellingCurveForGammaBelow: return "RepellingCurveForGammaBelow";
    }
    return "?";
}

TaylorCoeffs taylor_coeffs(const ModelParams& p, const State& fp) {
    p.validate();
    const double u = fp.u, c = p.c, g = p.gamma;
    const int h = p.h;
    const double uh = response_pow(u, h);
    const double w = 1.0 + c * uh;
    // shared factors of the second/third order terms
    const double K = 1.0 - h + c * uh + h * c * uh;
    const double Q = 2.0 * w * w + 3.0 * h * (c * c * uh * uh - 1.0) +
                     h * h * (1.0 - 4.0 * c * uh + c * c * uh * uh);
    const double uhm1 = h == 1 ? 1.0 : u;   // u^{h-1}
    const double uhm2 = h == 1 ? 1.0 / u : 1.0;  // u^{h-2}

    TaylorCoeffs t;
    t.a10 = (1.0 - u) * (2.0 - h + 2.0 * c * uh) / w;
    t.a01 = -p.r / g;
    t.a20 = -1.0 + h * (1.0 - u) * K / (2.0 * u * w * w);
    t.a11 = -h * uhm1 / (w * w);
    t.a30 = -h * (1.0 - u) * Q / (6.0 * u * u * w * w * w);
    t.a21 = h * uhm2 * K / (2.0 * w * w * w);
    t.b10 = g * h * (1.0 - u) / w;
    t.b01 = 1.0;
    t.b20 = -g * h * (1.0 - u) * K / (2.0 * u * w * w);
    t.b11 = g * h * uhm1 / (w * w);
    t.b30 = g * h * (1.0 - u) * Q / (6.0 * u * u * w * w * w);
    t.b21 = -g * h * uhm2 * K / (2.0 * w * w * w);
    return t;
}

double transversality(const ModelParams& p, const State& fp) {
    const double u = fp.u;
    const double uh = response_pow(u, p.h);
    const double w = 1.0 + p.c * uh;
    const double bracket = uh * (2.0 - p.h + 2.0 * p.c * uh) / w + p.r * p.h / p.gamma;
    return (1.0 - u) / (2.0 * w) * bracket;
}

NormalFormCoeffs normal_form(const TaylorCoeffs& t, double m, double n) {
    NormalFormCoeffs f;
    f.c20 = t.a20 * m * n + t.b20 * m * n * n;
    f.c11 = t.a11 - t.a20 * n + t.b11 * n - t.b20 * n * n;
    f.c02 = (t.a20 * n - t.a11 + t.b20 * n * n - t.b11 * n) / m;
    f.c30 = t.a30 * m * m * n * n + t.b30 * m * m * n * n * n;
    f.c21 = t.a21 * m * n - 3.0 * t.a30 * m * n * n + t.b21 * m * n * n - 3.0 * t.b30 * m * n * n * n;
    f.c12 = 3.0 * t.a30 * n * n - 2.0 * t.a21 * n + 3.0 * t.b30 * n * n * n - 2.0 * t.b21 * n * n;
    f.c03 = (t.a21 * n - t.a30 * n * n + t.b21 * n * n - t.b30 * n * n * n) / m;
    f.d20 = t.b20 * m * m * n * n;
    f.d11 = t.b11 * m * n - t.b20 * m * n * n;
    f.d02 = t.b20 * n * n - t.b11 * n;
    f.d30 = t.b30 * m * m * m * n * n * n;
    f.d21 = t.b21 * m * m * n * n - 3.0 * t.b30 * m * m * n * n * n;
    f.d12 = 3.0 * t.b30 * m * n * n * n - 2.0 * t.b21 * m * n * n;
    f.d03 = t.b21 * n * n - t.b30 * n * n * n;
    return f;
}

NSReport ns_report_from_taylor(double gamma0, const State& fp, const TaylorCoeffs& t,
                               double r) {
    NSReport rep;
    rep.gamma0 = gamma0;
    rep.fixed_point = fp;
    rep.taylor = t;

    const double a10 = t.a10;
    const double alpha_sq = 3.0 - a10 * a10 - 2.0 * a10;
    if (!(alpha_sq > 0.0))
        throw std::domain_error("ns_report: eigenvalue pair degenerates (alpha^2 <= 0)");
    rep.alpha = std::sqrt(alpha_sq);
    // lambda1 carries the negative imaginary part; the L formula below is
    // sensitive to this ordering
    rep.lambda1 = std::complex<double>(0.5 * (1.0 + a10), -0.5 * rep.alpha);
    rep.lambda2 = std::conj(rep.lambda1);
    rep.m = rep.alpha / (1.0 - a10);
    rep.n = r / (2.0 * gamma0);
    rep.nf = normal_form(t, rep.m, rep.n);

    const NormalFormCoeffs& f = rep.nf;
    rep.L20 = std::complex<double>(f.FXX() - f.FYY() + 2.0 * f.GXY(),
                                   f.GXX() - f.GYY() - 2.0 * f.FXY()) / 8.0;
    rep.L11 = std::complex<double>(f.FXX() + f.FYY(), f.GXX() + f.GYY()) / 4.0;
    rep.L02 = std::complex<double>(f.FXX() - f.FYY() - 2.0 * f.GXY(),
                                   f.GXX() - f.GYY() + 2.0 * f.FXY()) / 8.0;
    rep.L21 = std::complex<double>(f.FXXX() + f.FXYY() + f.GXXY() + f.GYYY(),
                                   f.GXXX() + f.GXYY() - f.FXXY() - f.FYYY()) / 16.0;

    const std::complex<double>& l1 = rep.lambda1;
    const std::complex<double>& l2 = rep.lambda2;
    rep.L = -std::real((1.0 - 2.0 * l1) * l2 * l2 / (1.0 - l1) * rep.L11 * rep.L20) -
            0.5 * std::norm(rep.L11) - std::norm(rep.L02) + std::real(l2 * rep.L21);
    rep.direction = rep.L < 0.0 ? CurveDirection::AttractingCurveForGammaAbove
                                : CurveDirection::RepellingCurveForGammaBelow;
    return rep;
}

NSReport lyapunov_quantity(const ModelParams& params) {
    params.validate();
    const double gamma0 = critical_gamma(params.r, params.c, params.h);
    const ModelParams at{params.r, params.c, gamma0, params.h};
    const auto fp = positive_fixed_point(at);
    if (!fp) throw std::domain_error("lyapunov_quantity: no interior fixed point at gamma0");
    NSReport rep = ns_report_from_taylor(gamma0, *fp, taylor_coeffs(at, *fp), params.r);
    rep.transversality = transversality(at, *fp);
    return rep;
}

}  // namespace plankton
