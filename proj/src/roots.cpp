#include "plankton/roots.hpp"

#include <algorithm>
#include <cmath>

namespace plankton {

namespace {

// Newton cleanup against cancellation in the closed forms. Stops at the
// evaluation noise floor; multiple roots converge linearly, hence the
// generous iteration cap.
double polish_cubic(double a, double b, double c, double d, double x) {
    for (int i = 0; i < 30; ++i) {
        const double f = ((a * x + b) * x + c) * x + d;
        const double noise = std::fabs(a * x * x * x) + std::fabs(b * x * x) +
                             std::fabs(c * x) + std::fabs(d);
        if (std::fabs(f) <= 4.0 * 2.22e-16 * noise) break;
        const double df = (3.0 * a * x + 2.0 * b) * x + c;
        if (df == 0.0) break;
        const double nx = x - f / df;
        if (!std::isfinite(nx) || nx == x) break;
        x = nx;
    }
    return x;
}

}  // namespace

std::vector<double> real_roots_quadratic(double a, double b, double c) {
    const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c)});
    if (scale == 0.0) return {};
    if (std::fabs(a) <= 1e-14 * scale) {
        if (std::fabs(b) <= 1e-14 * scale) return {};
        return {-c / b};
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return {};
    if (disc == 0.0) return {-b / (2.0 * a)};
    // stable form: avoid subtracting nearly equal magnitudes
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    std::vector<double> roots{q / a, c != 0.0 ? c / q : 0.0};
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<double> real_roots_cubic(double a, double b, double c, double d) {
    const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
    if (scale == 0.0) return {};
    if (std::fabs(a) <= 1e-14 * scale) return real_roots_quadratic(b, c, d);

    // depressed form t^3 + p t + q with x = t - b/(3a)
    const double shift = b / (3.0 * a);
    const double p = c / a - shift * b / a;  // = c/a - b^2/(3a^2)
    const double q = d / a - shift * (c / a) + 2.0 * shift * shift * shift;

    std::vector<double> roots;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    const double disc_scale = std::max({1.0, std::fabs(p * p * p), q * q});
    if (p == 0.0 && q == 0.0) {
        roots.push_back(-shift);  // triple root
    } else if (p < 0.0 && disc > -1e-12 * disc_scale) {
        // three real roots, possibly coincident near disc = 0; the clamped
        // trigonometric form degrades gracefully to the multiple-root case
        const double rad = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * rad), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.push_back(rad * std::cos(theta - 2.0 * M_PI * k / 3.0) - shift);
    } else {
        // one real root, Cardano; pick the large-magnitude branch first so
        // the subtraction never cancels
        const double s = std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
        const double u1 = -q / 2.0 - (q >= 0.0 ? s : -s);
        const double A = std::cbrt(u1);
        roots.push_back((A == 0.0 ? 0.0 : A - p / (3.0 * A)) - shift);
    }
    for (double& x : roots) x = polish_cubic(a, b, c, d, x);
    std::sort(roots.begin(), roots.end());
    // collapse multiple roots the trig branch resolves only to rounding;
    // sqrt(eps) is the attainable accuracy at a double root
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) {
                                return std::fabs(x - y) <= 2e-7 * std::max(1.0, std::fabs(x));
                            }),
                roots.end());
    return roots;
}

}  // namespace plankton
