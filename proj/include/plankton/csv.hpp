// CSV emission for the sweep and analysis results. Floats print with 17
// significant digits so files round-trip doubles exactly.
#ifndef PLANKTON_CSV_HPP
#define PLANKTON_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "plankton/chaos_control.hpp"
#include "plankton/global_dynamics.hpp"
#include "plankton/orbit.hpp"
#include "plankton/sweep.hpp"

namespace plankton {

std::string format_double(double x);  // %.17g

// header: step,u,v
void write_orbit_csv(std::ostream& os, const OrbitRecord& orbit);

// header: gamma,sample_index,u,v
void write_bifurcation_csv(std::ostream& os, const std::vector<BifurcationRow>& rows);

// header: gamma,mle
void write_mle_csv(std::ostream& os, const std::vector<MleRow>& rows);

// header: r,c,gamma_low,gamma_high (gamma_high empty when absent)
void write_region_csv(std::ostream& os, const std::vector<RegionRow>& rows);

// header: record,s1,s2,a,b,c (three vertex rows, then three line rows)
void write_triangle_csv(std::ostream& os, const ControlTriangle& tri);

// header: s1,s2,stable
void write_gain_scan_csv(std::ostream& os, const std::vector<GainScanRow>& rows);

struct MembershipRow {
    double u, v;
    bool inside;
    std::optional<bool> stays;  // evaluated only for inside points
};

// header: u,v,inside,stays (stays empty for outside points)
void write_membership_csv(std::ostream& os, const std::vector<MembershipRow>& rows);

struct ConvergenceRow {
    double u0, v0;
    bool converged;
    long iterations;
};

// header: u0,v0,converged,iterations
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

}  // namespace plankton

#endif
