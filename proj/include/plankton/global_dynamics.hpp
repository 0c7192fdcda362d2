// Invariant sets of the map and LaSalle-style convergence verification:
// membership tests for the h=1 sets M1-M3 and the h=2 sets N1-N2, the psi
// minimum for N2, the invariant axis sets and orbit convergence to E1.
#ifndef PLANKTON_GLOBAL_DYNAMICS_HPP
#define PLANKTON_GLOBAL_DYNAMICS_HPP

#include <optional>

#include "plankton/model.hpp"

namespace plankton {

enum class InvariantSetKind { M1, M2, M3, N1, N2, AxisU, AxisV };

const char* to_string(InvariantSetKind k);
std::optional<InvariantSetKind> invariant_set_kind_from_string(const char* name);

struct InvariantSetSpec {
    InvariantSetKind kind;
    ModelParams params;
    // psi(x_min), precomputed for N2 where the upper bound is constant.
    std::optional<double> psi_min_value;
};

// psi(x) = (2-x)(1+c x^2)/x, the N1 membership bound (+infinity at x=0).
double psi(double c, double x);

struct PsiMin {
    double x_min;  // root of nu(x) = c x^3 - c x^2 + 1 in (0, 2/3)
    double value;  // psi(x_min)
};

// Minimum of psi on (0,1); requires c > 27/4 (otherwise nu has no root in
// (0, 2/3) and psi is monotone). Throws std::domain_error for c <= 27/4.
PsiMin psi_min(double c);

// Builds a set descriptor. Membership geometry is well-defined for any
// positive c; whether the invariance guarantee covers the combination is a
// separate query (admissible/invariance_hypothesis below), so inadmissible
// counterexample sets remain expressible. N2 requires c > 27/4 (its bound
// is psi_min) and throws otherwise.
InvariantSetSpec make_invariant_set(InvariantSetKind kind, const ModelParams& params);

// Kind-to-parameter matching of the invariance guarantees: M1 needs c <= 1/2,
// M2 needs c >= 1, M3 needs 1/2 < c < 1 (all h=1); N1 needs c <= 27/4,
// N2 needs c > 27/4 (both h=2). AxisU is unconditional, AxisV needs r <= 1.
bool admissible(const InvariantSetSpec& spec);

// The parameter hypothesis shared by the invariance guarantees: one of the
// nonnegativity conditions (a)-(c) holds and gamma <= r(1+c).
bool invariance_hypothesis(const ModelParams& params);

// Exact inequality test of the set definition.
bool contains(const InvariantSetSpec& spec, const State& s);

// Whether the image of s under one map step is still inside the set.
bool verify_step_stays(const InvariantSetSpec& spec, const State& s);

struct Convergence {
    bool converged;
    long iterations;  // first n with ||orbit(n) - (1,0)||_inf < tol
};

// Iterates from s0 until the orbit is within tol of E1 = (1,0) in the sup
// norm, or the budget is exhausted.
Convergence converges_to_E1(const ModelParams& params, const State& s0,
                            long max_iter = 100000, double tol = 1e-8);

}  // namespace plankton

#endif
