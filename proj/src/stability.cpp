#include "plankton/stability.hpp"

#include <algorithm>
#include <cmath>

#include "plankton/roots.hpp"

namespace plankton {

const char* to_string(StabilityClass cls) {
    switch (cls) {
        case StabilityClass::Attracting: return "attracting";
        case StabilityClass::Repelling: return "repelling";
        case StabilityClass::Saddle: return "saddle";
        case StabilityClass::NonHyperbolic: return "non_hyperbolic";
    }
    return "?";
}

namespace {

std::pair<std::complex<double>, std::complex<double>> quadratic_eigenvalues(double B, double C) {
    const double disc = B * B - 4.0 * C;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (B + (B >= 0.0 ? sq : -sq));
        double r1 = q;
        double r2 = q != 0.0 ? C / q : -B - q;
        if (r1 > r2) std::swap(r1, r2);
        return {std::complex<double>(r1, 0.0), std::complex<double>(r2, 0.0)};
    }
    const double re = -B / 2.0, im = std::sqrt(-disc) / 2.0;
    return {std::complex<double>(re, -im), std::complex<double>(re, im)};
}

StabilityClass classify_from_moduli(double m1, double m2, double tol) {
    if (std::fabs(m1 - 1.0) <= tol || std::fabs(m2 - 1.0) <= tol)
        return StabilityClass::NonHyperbolic;
    if (m1 < 1.0 && m2 < 1.0) return StabilityClass::Attracting;
    if (m1 > 1.0 && m2 > 1.0) return StabilityClass::Repelling;
    return StabilityClass::Saddle;
}

}  // namespace

StabilityClass jury_classify(double B, double C, double tol) {
    const double F1 = 1.0 + B + C;
    if (F1 > tol) {
        const double Fm1 = 1.0 - B + C;
        if (std::fabs(Fm1) <= tol) return StabilityClass::NonHyperbolic;  // root at -1
        if (Fm1 < 0.0) return StabilityClass::Saddle;
        if (std::fabs(C - 1.0) <= tol) {
            // conjugate pair on the unit circle needs -2 < B < 2; otherwise
            // the product-one real pair straddles the circle
            if (B > -2.0 + tol && B < 2.0 - tol) return StabilityClass::NonHyperbolic;
            return StabilityClass::Saddle;
        }
        return C < 1.0 ? StabilityClass::Attracting : StabilityClass::Repelling;
    }
    // F(1) <= 0: the sign tests above no longer apply, classify from the roots
    auto [l1, l2] = quadratic_eigenvalues(B, C);
    return classify_from_moduli(std::abs(l1), std::abs(l2), tol);
}

StabilityClass classify_trace_det(double T, double D, double tol) {
    return jury_classify(-T, D, tol);
}

FixedPointReport classify_E0(const ModelParams& p, double tol) {
    p.validate();
    FixedPointReport rep;
    rep.point = {0.0, 0.0};
    rep.lambda1 = 2.0;
    rep.lambda2 = 1.0 - p.r;
    const double m2 = std::fabs(1.0 - p.r);
    if (std::fabs(m2 - 1.0) <= tol)
        rep.classification = StabilityClass::NonHyperbolic;  // r = 2 (r > 0)
    else if (m2 < 1.0)
        rep.classification = StabilityClass::Saddle;  // 0 < r < 2
    else
        rep.classification = StabilityClass::Repelling;  // r > 2
    return rep;
}

FixedPointReport classify_E1(const ModelParams& p, double tol) {
    p.validate();
    FixedPointReport rep;
    rep.point = {1.0, 0.0};
    rep.lambda1 = 0.0;
    rep.lambda2 = p.gamma / (1.0 + p.c) + 1.0 - p.r;
    const double m2 = std::fabs(rep.lambda2.real());
    if (std::fabs(m2 - 1.0) <= tol)
        rep.classification = StabilityClass::NonHyperbolic;
    else if (m2 < 1.0)
        rep.classification = StabilityClass::Attracting;
    else
        rep.classification = StabilityClass::Saddle;
    return rep;
}

double p_of_u(const ModelParams& p, double u) {
    const double uh = response_pow(u, p.h);
    return 1.0 + (1.0 - u) * (2.0 - p.h + 2.0 * p.c * uh) / (1.0 + p.c * uh);
}

double q_of_u(const ModelParams& p, double u) {
    const double uh = response_pow(u, p.h);
    return (1.0 - u) * (2.0 - p.h + p.r * p.h + 2.0 * p.c * uh) / (1.0 + p.c * uh);
}

std::optional<FixedPointReport> classify_positive(const ModelParams& p, double tol) {
    const auto fp = positive_fixed_point(p);
    if (!fp) return std::nullopt;
    FixedPointReport rep;
    rep.point = *fp;
    const double pv = p_of_u(p, fp->u);
    const double qv = q_of_u(p, fp->u);
    rep.p_value = pv;
    rep.q_value = qv;
    auto [l1, l2] = quadratic_eigenvalues(-pv, qv);
    rep.lambda1 = l1;
    rep.lambda2 = l2;
    if (std::fabs(qv - 1.0) <= tol)
        rep.classification = StabilityClass::NonHyperbolic;
    else if (qv < 1.0)
        rep.classification = StabilityClass::Attracting;
    else
        rep.classification = StabilityClass::Repelling;
    return rep;
}

namespace {

// q(u(gamma)) - 1, the defining equation of the critical parameter
double q_residual(double r, double c, int h, double gamma) {
    ModelParams p{r, c, gamma, h};
    const auto fp = positive_fixed_point(p);
    if (!fp) return std::nan("");
    return q_of_u(p, fp->u) - 1.0;
}

double newton_polish_gamma(double r, double c, int h, double gamma) {
    for (int i = 0; i < 50; ++i) {
        const double f = q_residual(r, c, h, gamma);
        if (!std::isfinite(f)) break;
        const double e = std::max(1e-7, 1e-9 * std::fabs(gamma));
        const double fp1 = q_residual(r, c, h, gamma + e);
        const double fm1 = q_residual(r, c, h, gamma - e);
        if (!std::isfinite(fp1) || !std::isfinite(fm1)) break;
        const double df = (fp1 - fm1) / (2.0 * e);
        if (df == 0.0) break;
        const double ng = gamma - f / df;
        if (!std::isfinite(ng) || ng == gamma) break;
        gamma = ng;
        if (std::fabs(f) < 1e-14) break;
    }
    return gamma;
}

}  // namespace

CriticalGammaResult find_critical_gamma(double r, double c, int h) {
    ModelParams{r, c, 0.0, h}.validate();
    CriticalGammaResult res;
    if (h == 1) {
        const double g0 = (1.0 - c + r + 2.0 * r * c +
                           std::sqrt((1.0 - c) * (1.0 - c) + 2.0 * r + 6.0 * r * c + r * r)) /
                          2.0;
        res.real_roots = {g0};
        res.admissible = {g0};
        res.gamma0 = g0;
        return res;
    }
    // h = 2: cubic in gamma; leading coefficient (2r-1)^2 vanishes at r=1/2
    const double A = (2.0 * r - 1.0) * (2.0 * r - 1.0);
    const double B = -(r * c * (2.0 * r - 1.0) * (6.0 * r - 5.0) + 4.0 * r * r * r);
    const double C = 4.0 * r * r * c * (r - 1.0) * (3.0 * r * c - 2.0 * c + 2.0 * r);
    const double D = -4.0 * r * r * r * c * c * (r - 1.0) * (r - 1.0) * (c + 1.0);
    res.real_roots = real_roots_cubic(A, B, C, D);
    for (double g : res.real_roots) {
        if (!(g > r * (1.0 + c))) continue;
        const double resid = q_residual(r, c, h, g);
        if (!std::isfinite(resid) || std::fabs(resid) > 1e-7) continue;
        res.admissible.push_back(newton_polish_gamma(r, c, h, g));
    }
    std::sort(res.admissible.begin(), res.admissible.end());
    if (!res.admissible.empty()) res.gamma0 = res.admissible.front();
    return res;
}

double critical_gamma(double r, double c, int h) {
    const auto res = find_critical_gamma(r, c, h);
    if (!res.gamma0) throw std::domain_error("critical_gamma: no admissible root of q(u(gamma)) = 1");
    return *res.gamma0;
}

}  // namespace plankton
