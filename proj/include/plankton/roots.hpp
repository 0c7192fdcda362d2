// Real roots of quadratic and cubic polynomials with real coefficients.
#ifndef PLANKTON_ROOTS_HPP
#define PLANKTON_ROOTS_HPP

#include <vector>

namespace plankton {

// Real roots of a x^2 + b x + c = 0, ascending. A (near-)zero leading
// coefficient degrades to the linear case.
std::vector<double> real_roots_quadratic(double a, double b, double c);

// Real roots of a x^3 + b x^2 + c x + d = 0, ascending. Three-real-root
// configurations use the trigonometric form, the one-real-root case uses
// Cardano; every root is Newton-polished on the input polynomial. A
// (near-)zero leading coefficient degrades to the quadratic case.
std::vector<double> real_roots_cubic(double a, double b, double c, double d);

}  // namespace plankton

#endif
