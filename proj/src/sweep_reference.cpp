// Plain serial loops over the same per-point primitives as the OpenMP
// kernels. Kept as the baseline the parallel paths are tested against.
#include <cmath>
#include <limits>

#include "plankton/stability.hpp"
#include "plankton/sweep.hpp"

namespace plankton::reference {

namespace {
double grid_at(double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
}
}  // namespace

std::vector<BifurcationRow> bifurcation_diagram(const ModelParams& base,
                                                const SweepConfig& cfg) {
    base.validate();
    cfg.validate();
    std::vector<BifurcationRow> rows;
    rows.reserve(cfg.steps);
    for (int i = 0; i < cfg.steps; ++i) {
        BifurcationRow row;
        row.gamma = cfg.gamma_at(i);
        ModelParams p = base;
        p.gamma = row.gamma;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.samples.assign(cfg.samples, State{nan, nan});
        State s = cfg.initial;
        for (long k = 0; k < cfg.transient && !row.diverged; ++k) {
            s = step(p, s);
            if (is_divergent(s)) row.diverged = true;
        }
        for (int j = 0; j < cfg.samples && !row.diverged; ++j) {
            row.samples[j] = s;
            s = step(p, s);
            if (is_divergent(s)) row.diverged = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<MleRow> mle_curve(const ModelParams& base, const SweepConfig& cfg, long n) {
    base.validate();
    cfg.validate();
    std::vector<MleRow> rows;
    rows.reserve(cfg.steps);
    for (int i = 0; i < cfg.steps; ++i) {
        ModelParams p = base;
        p.gamma = cfg.gamma_at(i);
        const MleResult m = max_lyapunov(p, cfg.initial, n, cfg.transient, cfg.seed);
        rows.push_back({p.gamma, m.value, m.diverged});
    }
    return rows;
}

std::vector<RegionRow> stability_region(const RegionGrid& grid, int h) {
    grid.validate();
    std::vector<RegionRow> rows;
    rows.reserve(static_cast<std::size_t>(grid.r_steps) * grid.c_steps);
    for (int i = 0; i < grid.r_steps; ++i)
        for (int j = 0; j < grid.c_steps; ++j) {
            const double r = grid_at(grid.r_lo, grid.r_hi, grid.r_steps, i);
            const double c = grid_at(grid.c_lo, grid.c_hi, grid.c_steps, j);
            RegionRow row;
            row.r = r;
            row.c = c;
            row.gamma_low = r * (1.0 + c);
            row.gamma_high = find_critical_gamma(r, c, h).gamma0;
            rows.push_back(row);
        }
    return rows;
}

std::vector<GainScanRow> gain_stability_scan(const ModelParams& p, const State& fp,
                                             const GainGrid& grid) {
    p.validate();
    grid.validate();
    std::vector<GainScanRow> rows;
    rows.reserve(static_cast<std::size_t>(grid.s1_steps) * grid.s2_steps);
    for (int i = 0; i < grid.s1_steps; ++i)
        for (int j = 0; j < grid.s2_steps; ++j) {
            const ControlGains g{grid_at(grid.s1_lo, grid.s1_hi, grid.s1_steps, i),
                                 grid_at(grid.s2_lo, grid.s2_hi, grid.s2_steps, j)};
            rows.push_back({g.s1, g.s2, is_stable(p, fp, g).stable});
        }
    return rows;
}

}  // namespace plankton::reference
