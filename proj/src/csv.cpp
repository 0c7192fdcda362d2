#include "plankton/csv.hpp"

#include <cstdio>
#include <ostream>

namespace plankton {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_orbit_csv(std::ostream& os, const OrbitRecord& orbit) {
    os << "step,u,v\n";
    for (std::size_t k = 0; k < orbit.states.size(); ++k)
        os << k << ',' << format_double(orbit.states[k].u) << ','
           << format_double(orbit.states[k].v) << '\n';
}

void write_bifurcation_csv(std::ostream& os, const std::vector<BifurcationRow>& rows) {
    os << "gamma,sample_index,u,v\n";
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.samples.size(); ++j)
            os << format_double(row.gamma) << ',' << j << ','
               << format_double(row.samples[j].u) << ','
               << format_double(row.samples[j].v) << '\n';
}

void write_mle_csv(std::ostream& os, const std::vector<MleRow>& rows) {
    os << "gamma,mle\n";
    for (const auto& row : rows)
        os << format_double(row.gamma) << ',' << format_double(row.mle) << '\n';
}

void write_region_csv(std::ostream& os, const std::vector<RegionRow>& rows) {
    os << "r,c,gamma_low,gamma_high\n";
    for (const auto& row : rows) {
        os << format_double(row.r) << ',' << format_double(row.c) << ','
           << format_double(row.gamma_low) << ',';
        if (row.gamma_high) os << format_double(*row.gamma_high);
        os << '\n';
    }
}

void write_triangle_csv(std::ostream& os, const ControlTriangle& tri) {
    os << "record,s1,s2,a,b,c\n";
    const char* names[3] = {"vertex_l1_l2", "vertex_l2_l3", "vertex_l3_l1"};
    for (int i = 0; i < 3; ++i)
        os << names[i] << ',' << format_double(tri.vertices[i].s1) << ','
           << format_double(tri.vertices[i].s2) << ",,,\n";
    const GainLine* lines[3] = {&tri.l1, &tri.l2, &tri.l3};
    const char* lnames[3] = {"line_l1", "line_l2", "line_l3"};
    for (int i = 0; i < 3; ++i)
        os << lnames[i] << ",,," << format_double(lines[i]->a) << ','
           << format_double(lines[i]->b) << ',' << format_double(lines[i]->c) << '\n';
}

void write_gain_scan_csv(std::ostream& os, const std::vector<GainScanRow>& rows) {
    os << "s1,s2,stable\n";
    for (const auto& row : rows)
        os << format_double(row.s1) << ',' << format_double(row.s2) << ','
           << (row.stable ? 1 : 0) << '\n';
}

void write_membership_csv(std::ostream& os, const std::vector<MembershipRow>& rows) {
    os << "u,v,inside,stays\n";
    for (const auto& row : rows) {
        os << format_double(row.u) << ',' << format_double(row.v) << ','
           << (row.inside ? 1 : 0) << ',';
        if (row.stays) os << (*row.stays ? 1 : 0);
        os << '\n';
    }
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    os << "u0,v0,converged,iterations\n";
    for (const auto& row : rows)
        os << format_double(row.u0) << ',' << format_double(row.v0) << ','
           << (row.converged ? 1 : 0) << ',' << row.iterations << '\n';
}

}  // namespace plankton
