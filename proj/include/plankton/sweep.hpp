// Parameter-sweep kernels: bifurcation diagrams, MLE curves, (r,c)
// stability-region scans and gain-stability scans. Grid points are
// independent, so the kernels parallelize over them with OpenMP; results
// are written by grid index, making output identical for any thread count.
// plankton::reference holds plain serial implementations of the same
// kernels, kept as the comparison baseline for tests and benchmarks.
#ifndef PLANKTON_SWEEP_HPP
#define PLANKTON_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "plankton/chaos_control.hpp"
#include "plankton/model.hpp"
#include "plankton/orbit.hpp"

namespace plankton {

struct SweepConfig {
    double gamma_lo = 0.5;
    double gamma_hi = 3.0;
    int steps = 1000;       // gamma grid points, >= 2
    long transient = 2000;  // iterations discarded before recording
    int samples = 200;      // post-transient states recorded per gamma
    State initial{0.35, 0.6};
    std::uint64_t seed = 0;

    void validate() const;
    double gamma_at(int i) const;
};

struct BifurcationRow {
    double gamma;
    std::vector<State> samples;  // NaN entries past the point of divergence
    bool diverged = false;
};

std::vector<BifurcationRow> bifurcation_diagram(const ModelParams& base,
                                                const SweepConfig& cfg,
                                                int threads = 0);

struct MleRow {
    double gamma;
    double mle;
    bool diverged = false;
};

// MLE at every gamma grid point; n accumulation steps after cfg.transient.
std::vector<MleRow> mle_curve(const ModelParams& base, const SweepConfig& cfg,
                              long n, int threads = 0);

struct RegionRow {
    double r, c;
    double gamma_low;                 // r(1+c), existence threshold
    std::optional<double> gamma_high; // gamma0(r,c); empty if the h=2 root
                                      // filter comes back empty
};

struct RegionGrid {
    double r_lo, r_hi;
    int r_steps;
    double c_lo, c_hi;
    int c_steps;

    void validate() const;
};

// Attracting band r(1+c) < gamma < gamma0 per (r,c) grid point, row-major
// over r then c.
std::vector<RegionRow> stability_region(const RegionGrid& grid, int h,
                                        int threads = 0);

struct GainScanRow {
    double s1, s2;
    bool stable;
};

struct GainGrid {
    double s1_lo, s1_hi;
    int s1_steps;
    double s2_lo, s2_hi;
    int s2_steps;

    void validate() const;
};

// is_stable over an (s1, s2) grid, row-major over s1 then s2.
std::vector<GainScanRow> gain_stability_scan(const ModelParams& p,
                                             const State& fixed_point,
                                             const GainGrid& grid,
                                             int threads = 0);

// Serial reference implementations; bit-identical to the parallel kernels.
namespace reference {
std::vector<BifurcationRow> bifurcation_diagram(const ModelParams& base,
                                                const SweepConfig& cfg);
std::vector<MleRow> mle_curve(const ModelParams& base, const SweepConfig& cfg,
                              long n);
std::vector<RegionRow> stability_region(const RegionGrid& grid, int h);
std::vector<GainScanRow> gain_stability_scan(const ModelParams& p,
                                             const State& fixed_point,
                                             const GainGrid& grid);
}  // namespace reference

}  // namespace plankton

#endif
