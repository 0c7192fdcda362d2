#include "plankton/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "plankton/stability.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plankton {

void SweepConfig::validate() const {
    if (!(gamma_lo < gamma_hi)) throw std::invalid_argument("sweep: gamma_lo must be < gamma_hi");
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (transient < 0) throw std::invalid_argument("sweep: transient must be >= 0");
    if (samples < 1) throw std::invalid_argument("sweep: samples must be >= 1");
}

double SweepConfig::gamma_at(int i) const {
    return gamma_lo + (gamma_hi - gamma_lo) * i / (steps - 1);
}

void RegionGrid::validate() const {
    if (!(r_lo > 0.0) || !(c_lo > 0.0))
        throw std::invalid_argument("region: ranges must be positive");
    if (!(r_lo <= r_hi) || !(c_lo <= c_hi))
        throw std::invalid_argument("region: lo must be <= hi");
    if (r_steps < 1 || c_steps < 1)
        throw std::invalid_argument("region: steps must be >= 1");
    if ((r_steps == 1 && r_lo != r_hi) || (c_steps == 1 && c_lo != c_hi))
        throw std::invalid_argument("region: a single-step range needs lo == hi");
}

void GainGrid::validate() const {
    if (!(s1_lo <= s1_hi) || !(s2_lo <= s2_hi))
        throw std::invalid_argument("gain scan: lo must be <= hi");
    if (s1_steps < 1 || s2_steps < 1)
        throw std::invalid_argument("gain scan: steps must be >= 1");
    if ((s1_steps == 1 && s1_lo != s1_hi) || (s2_steps == 1 && s2_lo != s2_hi))
        throw std::invalid_argument("gain scan: a single-step range needs lo == hi");
}

namespace {

double grid_at(double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
}

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

}  // namespace

// Each grid point below is an independent pure computation; rows are stored
// by index so the output is identical for any schedule or thread count.

std::vector<BifurcationRow> bifurcation_diagram(const ModelParams& base,
                                                const SweepConfig& cfg, int threads) {
    base.validate();
    cfg.validate();
    std::vector<BifurcationRow> rows(cfg.steps);
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
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
        rows[i] = std::move(row);
    }
    (void)nt;
    return rows;
}

std::vector<MleRow> mle_curve(const ModelParams& base, const SweepConfig& cfg,
                              long n, int threads) {
    base.validate();
    cfg.validate();
    if (n < 1) throw std::invalid_argument("mle_curve: n must be >= 1");
    std::vector<MleRow> rows(cfg.steps);
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (int i = 0; i < cfg.steps; ++i) {
        ModelParams p = base;
        p.gamma = cfg.gamma_at(i);
        const MleResult m = max_lyapunov(p, cfg.initial, n, cfg.transient, cfg.seed);
        rows[i] = {p.gamma, m.value, m.diverged};
    }
    (void)nt;
    return rows;
}

std::vector<RegionRow> stability_region(const RegionGrid& grid, int h, int threads) {
    grid.validate();
    std::vector<RegionRow> rows(static_cast<std::size_t>(grid.r_steps) * grid.c_steps);
    const int total = grid.r_steps * grid.c_steps;
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (int idx = 0; idx < total; ++idx) {
        const int i = idx / grid.c_steps, j = idx % grid.c_steps;
        const double r = grid_at(grid.r_lo, grid.r_hi, grid.r_steps, i);
        const double c = grid_at(grid.c_lo, grid.c_hi, grid.c_steps, j);
        RegionRow row;
        row.r = r;
        row.c = c;
        row.gamma_low = r * (1.0 + c);
        row.gamma_high = find_critical_gamma(r, c, h).gamma0;
        rows[idx] = row;
    }
    (void)nt;
    return rows;
}

std::vector<GainScanRow> gain_stability_scan(const ModelParams& p, const State& fp,
                                             const GainGrid& grid, int threads) {
    p.validate();
    grid.validate();
    std::vector<GainScanRow> rows(static_cast<std::size_t>(grid.s1_steps) * grid.s2_steps);
    const int total = grid.s1_steps * grid.s2_steps;
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (int idx = 0; idx < total; ++idx) {
        const int i = idx / grid.s2_steps, j = idx % grid.s2_steps;
        const ControlGains g{grid_at(grid.s1_lo, grid.s1_hi, grid.s1_steps, i),
                             grid_at(grid.s2_lo, grid.s2_hi, grid.s2_steps, j)};
        rows[idx] = {g.s1, g.s2, is_stable(p, fp, g).stable};
    }
    (void)nt;
    return rows;
}

}  // namespace plankton
