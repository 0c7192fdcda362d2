#include <cmath>
#include <complex>

#include "doctest.h"
#include "plankton/ns_bifurcation.hpp"
#include "plankton/orbit.hpp"
#include "plankton/stability.hpp"
#include "support/oracles.hpp"

using namespace plankton;
using cplx = std::complex<double>;

namespace {

ModelParams critical_params(int h) {
    const double r = h == 1 ? 0.5 : 0.8, c = h == 1 ? 1.0 : 2.0;
    return {r, c, critical_gamma(r, c, h), h};
}

}  // namespace

TEST_CASE("taylor coefficients: linear block identities") {
    for (int h : {1, 2}) {
        const ModelParams p = critical_params(h);
        const State fp = *positive_fixed_point(p);
        const TaylorCoeffs t = taylor_coeffs(p, fp);
        CHECK(t.a10 == doctest::Approx(p_of_u(p, fp.u) - 1.0).epsilon(1e-13));
        CHECK(t.a01 == doctest::Approx(-p.r / p.gamma).epsilon(1e-13));
        CHECK(t.b01 == 1.0);
        const double uh = response_pow(fp.u, h);
        CHECK(t.b10 == doctest::Approx(p.gamma * h * (1.0 - fp.u) / (1.0 + p.c * uh)).epsilon(1e-13));
        // unperturbed critical Jacobian has unit determinant: b(0) = 1
        CHECK(std::fabs(t.a10 * t.b01 - t.a01 * t.b10 - 1.0) < 1e-12);
    }
}

TEST_CASE("taylor coefficients: reference values at h=1 criticality") {
    const ModelParams p = critical_params(1);
    const State fp = *positive_fixed_point(p);
    const TaylorCoeffs t = taylor_coeffs(p, fp);
    CHECK(t.a10 == doctest::Approx(0.780776).epsilon(1e-5));
    CHECK(t.a01 == doctest::Approx(-0.280776).epsilon(1e-5));
}

TEST_CASE("taylor coefficients agree with finite differences") {
    for (int h : {1, 2}) {
        const ModelParams p = critical_params(h);
        const State fp = *positive_fixed_point(p);
        const TaylorCoeffs a = taylor_coeffs(p, fp);
        const TaylorCoeffs f = oracles::fd_taylor_coeffs(p, fp);
        CHECK(std::fabs(a.a10 - f.a10) < 1e-8);
        CHECK(std::fabs(a.a01 - f.a01) < 1e-8);
        CHECK(std::fabs(a.b10 - f.b10) < 1e-8);
        CHECK(std::fabs(a.b01 - f.b01) < 1e-8);
        CHECK(std::fabs(a.a20 - f.a20) < 1e-5);
        CHECK(std::fabs(a.a11 - f.a11) < 1e-5);
        CHECK(std::fabs(a.b20 - f.b20) < 1e-5);
        CHECK(std::fabs(a.b11 - f.b11) < 1e-5);
        CHECK(std::fabs(a.a30 - f.a30) < 1e-4);
        CHECK(std::fabs(a.a21 - f.a21) < 1e-4);
        CHECK(std::fabs(a.b30 - f.b30) < 1e-4);
        CHECK(std::fabs(a.b21 - f.b21) < 1e-4);
    }
}

TEST_CASE("transversality is positive and matches the eigenvalue derivative") {
    for (int h : {1, 2}) {
        const ModelParams p = critical_params(h);
        const State fp = *positive_fixed_point(p);
        const double t = transversality(p, fp);
        CHECK(t > 0.0);
        const double e = 1e-6;
        const double fd = (oracles::perturbed_eigenvalue_modulus(p, fp, e) -
                           oracles::perturbed_eigenvalue_modulus(p, fp, -e)) /
                          (2.0 * e);
        CHECK(t == doctest::Approx(fd).epsilon(1e-4));
    }
}

TEST_CASE("normal form: structural identities") {
    const ModelParams p = critical_params(1);
    const State fp = *positive_fixed_point(p);
    const TaylorCoeffs t = taylor_coeffs(p, fp);
    const NSReport rep = lyapunov_quantity(p);
    const NormalFormCoeffs f = normal_form(t, rep.m, rep.n);
    CHECK(f.d20 == doctest::Approx(t.b20 * rep.m * rep.m * rep.n * rep.n).epsilon(1e-14));

    SUBCASE("zero nonlinear part maps to zero") {
        TaylorCoeffs lin = t;
        lin.a20 = lin.a11 = lin.a30 = lin.a21 = 0.0;
        lin.b20 = lin.b11 = lin.b30 = lin.b21 = 0.0;
        const NormalFormCoeffs z = normal_form(lin, rep.m, rep.n);
        for (double v : {z.c20, z.c11, z.c02, z.c30, z.c21, z.c12, z.c03,
                         z.d20, z.d11, z.d02, z.d30, z.d21, z.d12, z.d03})
            CHECK(v == 0.0);
    }

    SUBCASE("plane change composes as F = f/(mn) + g/m, G = g") {
        const double m = rep.m, n = rep.n;
        // coefficient arrays of f and g in (X, Y)
        const double f20 = t.a20 * m * m * n * n;
        const double f11 = t.a11 * m * n - t.a20 * m * n * n;
        const double f02 = t.a20 * n * n - t.a11 * n;
        const double f30 = t.a30 * m * m * m * n * n * n;
        const double f21 = t.a21 * m * m * n * n - 3.0 * t.a30 * m * m * n * n * n;
        const double f12 = 3.0 * t.a30 * m * n * n * n - 2.0 * t.a21 * m * n * n;
        const double f03 = t.a21 * n * n - t.a30 * n * n * n;
        const double g20 = t.b20 * m * m * n * n;
        const double g11 = t.b11 * m * n - t.b20 * m * n * n;
        const double g02 = t.b20 * n * n - t.b11 * n;
        const double g30 = t.b30 * m * m * m * n * n * n;
        const double g21 = t.b21 * m * m * n * n - 3.0 * t.b30 * m * m * n * n * n;
        const double g12 = 3.0 * t.b30 * m * n * n * n - 2.0 * t.b21 * m * n * n;
        const double g03 = t.b21 * n * n - t.b30 * n * n * n;
        const double X = 0.1, Y = 0.2;
        auto poly = [&](double p20, double p11, double p02, double p30, double p21,
                        double p12, double p03) {
            return p20 * X * X + p11 * X * Y + p02 * Y * Y + p30 * X * X * X +
                   p21 * X * X * Y + p12 * X * Y * Y + p03 * Y * Y * Y;
        };
        const double fv = poly(f20, f11, f02, f30, f21, f12, f03);
        const double gv = poly(g20, g11, g02, g30, g21, g12, g03);
        const double Fv = poly(f.c20, f.c11, f.c02, f.c30, f.c21, f.c12, f.c03);
        const double Gv = poly(f.d20, f.d11, f.d02, f.d30, f.d21, f.d12, f.d03);
        CHECK(std::fabs(Fv - (fv / (m * n) + gv / m)) < 1e-12);
        CHECK(std::fabs(Gv - gv) < 1e-12);
    }
}

TEST_CASE("ns report at h=1 reference parameters") {
    const NSReport rep = lyapunov_quantity({0.5, 1.0, 0.0, 1});
    CHECK(rep.gamma0 == doctest::Approx((3.0 + std::sqrt(17.0)) / 4.0).epsilon(1e-13));
    CHECK(std::fabs(std::abs(rep.lambda1) - 1.0) < 1e-9);
    CHECK(std::fabs(std::abs(rep.lambda2) - 1.0) < 1e-9);
    CHECK(rep.lambda2.real() == doctest::Approx(0.890388).epsilon(1e-5));
    CHECK(rep.lambda2.imag() == doctest::Approx(0.455202).epsilon(1e-5));
    CHECK(rep.lambda1.imag() < 0.0);

    CHECK(std::abs(rep.L20 - cplx(0.0176, 0.0576)) < 3e-4);
    CHECK(std::abs(rep.L11 - cplx(-0.1888, -0.1656)) < 3e-4);
    CHECK(std::abs(rep.L02 - cplx(-0.2739, -0.0828)) < 3e-4);
    CHECK(std::abs(rep.L21 - cplx(-0.0734, 0.0159)) < 3e-4);
    CHECK(rep.L == doctest::Approx(-0.21455).epsilon(1e-3));
    CHECK(rep.direction == CurveDirection::AttractingCurveForGammaAbove);
    CHECK(rep.transversality == doctest::Approx(0.171165).epsilon(1e-4));

    // 1 < p(u) < 2 guarantees the conjugate pair
    const double pv = 1.0 + rep.taylor.a10;
    CHECK(pv > 1.0);
    CHECK(pv < 2.0);
}

TEST_CASE("ns report at h=2 reference parameters") {
    const NSReport rep = lyapunov_quantity({0.8, 2.0, 0.0, 2});
    CHECK(rep.gamma0 == doctest::Approx(6.3066631544).epsilon(1e-8));
    CHECK(rep.fixed_point.u == doctest::Approx(0.4122764).epsilon(1e-5));
    CHECK(rep.lambda2.real() == doctest::Approx(0.649105).epsilon(1e-5));
    CHECK(rep.lambda2.imag() == doctest::Approx(0.760698).epsilon(1e-5));
    CHECK(std::abs(rep.L20 - cplx(0.0412, 0.0987)) < 3e-4);
    CHECK(std::abs(rep.L11 - cplx(-0.0190, -0.0930)) < 3e-4);
    CHECK(std::abs(rep.L02 - cplx(-0.1584, -0.0076)) < 3e-4);
    CHECK(std::abs(rep.L21 - cplx(0.0108, -0.0066)) < 3e-4);
    CHECK(rep.L == doctest::Approx(-0.014135).epsilon(1e-3));
    CHECK(rep.direction == CurveDirection::AttractingCurveForGammaAbove);
}

TEST_CASE("non-degeneracy: lambda^m != 1 for m = 1..4") {
    for (int h : {1, 2}) {
        const NSReport rep = lyapunov_quantity(critical_params(h));
        cplx pw1 = 1.0, pw2 = 1.0;
        for (int m = 1; m <= 4; ++m) {
            pw1 *= rep.lambda1;
            pw2 *= rep.lambda2;
            CHECK(std::abs(pw1 - 1.0) > 1e-3);
            CHECK(std::abs(pw2 - 1.0) > 1e-3);
        }
    }
}

TEST_CASE("eigenvector of lambda1 from the plane-change columns") {
    for (int h : {1, 2}) {
        const NSReport rep = lyapunov_quantity(critical_params(h));
        const TaylorCoeffs& t = rep.taylor;
        // v1 = (-n - i m n, 1)
        const cplx v1u(-rep.n, -rep.m * rep.n), v1v(1.0, 0.0);
        const cplx r1 = (t.a10 - rep.lambda1) * v1u + t.a01 * v1v;
        const cplx r2 = t.b10 * v1u + (t.b01 - rep.lambda1) * v1v;
        CHECK(std::abs(r1) < 1e-9);
        CHECK(std::abs(r2) < 1e-9);
    }
}

TEST_CASE("finite-difference taylor source reproduces L through the same algebra") {
    for (int h : {1, 2}) {
        const ModelParams p = critical_params(h);
        const State fp = *positive_fixed_point(p);
        const NSReport analytic = ns_report_from_taylor(p.gamma, fp, taylor_coeffs(p, fp), p.r);
        const NSReport fd = ns_report_from_taylor(p.gamma, fp, oracles::fd_taylor_coeffs(p, fp), p.r);
        CHECK(std::fabs(fd.L - analytic.L) < 1e-4 * std::fabs(analytic.L));
    }
}

TEST_CASE("alpha degenerate input is rejected") {
    TaylorCoeffs t{};
    t.a10 = 1.5;  // p(u) = 2.5 leaves no conjugate pair
    t.b01 = 1.0;
    CHECK_THROWS_AS(ns_report_from_taylor(1.0, State{0.5, 0.5}, t, 0.5), std::domain_error);
}

TEST_CASE("no critical parameter is reported as an error") {
    CHECK_THROWS_AS(lyapunov_quantity({0.5, 5.0, 0.0, 2}), std::domain_error);
}

TEST_CASE("curve radius follows the square-root growth law") {
    // mean curve radius ~ sqrt(transversality * dg / |L|); the shape factor
    // from the plane change cancels in the ratio between two offsets
    for (int h : {1, 2}) {
        const double r = h == 1 ? 0.5 : 0.8, c = h == 1 ? 1.0 : 2.0;
        const NSReport rep = lyapunov_quantity({r, c, 0.0, h});
        auto mean_radius = [&](double dg) {
            ModelParams p{r, c, rep.gamma0 + dg, h};
            const State fp = *positive_fixed_point(p);
            State s{fp.u + 1e-4, fp.v};
            double sum = 0.0;
            for (int k = 0; k < 60000; ++k) {
                s = step(p, s);
                if (k >= 30000) sum += std::hypot(s.u - fp.u, s.v - fp.v);
            }
            return sum / 30000.0;
        };
        const double r1 = mean_radius(0.01), r2 = mean_radius(0.02);
        CHECK(r2 / r1 == doctest::Approx(std::sqrt(2.0)).epsilon(0.05));
        // and the absolute size stays commensurate with the prediction
        const double pred = std::sqrt(rep.transversality * 0.01 / std::fabs(rep.L));
        CHECK(r1 / pred > 0.3);
        CHECK(r1 / pred < 1.5);
    }
}

TEST_CASE("past criticality orbits settle on a bounded curve away from the point") {
    for (int h : {1, 2}) {
        ModelParams p = critical_params(h);
        p.gamma += 0.01;
        const State fp = *positive_fixed_point(p);
        State s{fp.u + 1e-3, fp.v};
        double rmin = 1e9, rmax = 0.0;
        for (int k = 0; k < 20000; ++k) {
            s = step(p, s);
            REQUIRE_FALSE(is_divergent(s));
            if (k >= 10000) {
                const double rad = std::hypot(s.u - fp.u, s.v - fp.v);
                rmin = std::min(rmin, rad);
                rmax = std::max(rmax, rad);
            }
        }
        CHECK(rmin > 2e-3);  // escaped the fixed point for good
        CHECK(rmax < 0.5);   // onto a bounded invariant curve
    }
}
