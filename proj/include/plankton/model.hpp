// Discrete-time phytoplankton-zooplankton map with a Holling type II (h=1)
// or type III (h=2) response: the map itself, its Jacobian, and the
// closed-form fixed points.
#ifndef PLANKTON_MODEL_HPP
#define PLANKTON_MODEL_HPP

#include <optional>
#include <stdexcept>
#include <utility>

namespace plankton {

// Parameter tuple of one map instance. gamma is the net zooplankton gain
// (conversion minus toxin loss) and may be any real; r and c must be
// positive and h is restricted to 1 or 2.
struct ModelParams {
    double r = 0.5;    // zooplankton death rate
    double c = 1.0;    // saturation constant
    double gamma = 0;  // net gain
    int h = 1;         // response order, 1 or 2

    void validate() const {
        if (!(r > 0.0)) throw std::invalid_argument("ModelParams: r must be > 0");
        if (!(c > 0.0)) throw std::invalid_argument("ModelParams: c must be > 0");
        if (h != 1 && h != 2) throw std::invalid_argument("ModelParams: h must be 1 or 2");
    }
};

// A point (u, v) of the phase plane. Negative coordinates are representable
// on purpose: iterates may leave the positive quadrant and callers interpret.
struct State {
    double u = 0.0;  // phytoplankton density
    double v = 0.0;  // zooplankton density
};

struct Jacobian {
    double j11, j12, j21, j22;

    double trace() const { return j11 + j22; }
    double det() const { return j11 * j22 - j12 * j21; }
};

inline double response_pow(double u, int h) { return h == 1 ? u : u * u; }

// One application of the map:
//   u' = u(2-u) - u^h v / (1 + c u^h)
//   v' = gamma u^h v / (1 + c u^h) + (1-r) v
State step(const ModelParams& p, const State& s);

// Jacobian of step() at s. The u^{h-1} factor uses the u^0 := 1 convention
// at u = 0 for h = 1, which matches the analytic limit.
Jacobian jacobian(const ModelParams& p, const State& s);

// The two boundary fixed points E0 = (0,0) and E1 = (1,0).
std::pair<State, State> boundary_fixed_points();

// The interior fixed point, present iff gamma > r(1+c):
//   u^h = r/(gamma - rc),  v = (1-u)(1+c u^h)/u^{h-1}
std::optional<State> positive_fixed_point(const ModelParams& p);

// True iff v' >= 0 for every u in [0,1], v >= 0, i.e. one of
//   (a) gamma <= -1, c >= -1-gamma, 0 < r <= (c+1+gamma)/(c+1)
//   (b) -1 < gamma <= 0, c > 0,     0 < r <= (c+1+gamma)/(c+1)
//   (c) gamma > 0, c > 0,           0 < r <= 1
bool nonnegativity_condition(const ModelParams& p);

}  // namespace plankton

#endif
