// Command-line front end: every analysis of the library as a subcommand
// with CSV or JSON output suitable for external plotting.
//
// Exit codes: 0 success, 1 flag/parameter validation, 2 runtime or I/O.
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <algorithm>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "plankton/csv.hpp"
#include "plankton/global_dynamics.hpp"
#include "plankton/ns_bifurcation.hpp"
#include "plankton/orbit.hpp"
#include "plankton/rng.hpp"
#include "plankton/stability.hpp"
#include "plankton/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;
using namespace plankton;

// Writes to --out, or stdout for "-". Stream errors surface as exit code 2.
void emit(const std::string& out, const std::string& payload) {
    if (out == "-") {
        std::cout << payload;
        if (!std::cout.good()) throw std::runtime_error("write to stdout failed");
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << payload;
    f.flush();
    if (!f.good()) throw std::runtime_error("write failed: " + out);
}

json point_report_json(const FixedPointReport& rep) {
    json j{{"u", rep.point.u},
           {"v", rep.point.v},
           {"classification", to_string(rep.classification)},
           {"lambda1_re", rep.lambda1.real()},
           {"lambda1_im", rep.lambda1.imag()},
           {"lambda2_re", rep.lambda2.real()},
           {"lambda2_im", rep.lambda2.imag()}};
    if (rep.p_value) j["p"] = *rep.p_value;
    if (rep.q_value) j["q"] = *rep.q_value;
    return j;
}

struct FixedPointsOpts {
    ModelParams params;
    double tol = kDefaultStabilityTol;
    std::string out = "-";
};

void run_fixed_points(const FixedPointsOpts& o) {
    o.params.validate();
    json j;
    j["params"] = {{"r", o.params.r}, {"c", o.params.c}, {"gamma", o.params.gamma}, {"h", o.params.h}};
    j["E0"] = point_report_json(classify_E0(o.params, o.tol));
    j["E1"] = point_report_json(classify_E1(o.params, o.tol));
    if (const auto pos = classify_positive(o.params, o.tol)) j["positive"] = point_report_json(*pos);
    emit(o.out, j.dump(2) + "\n");
}

struct NsOpts {
    double r = 0.5, c = 1.0;
    int h = 1;
    std::string out = "-";
};

void run_ns(const NsOpts& o) {
    const NSReport rep = lyapunov_quantity({o.r, o.c, 0.0, o.h});
    json j{{"gamma0", rep.gamma0},
           {"u", rep.fixed_point.u},
           {"v", rep.fixed_point.v},
           {"lambda_re", rep.lambda2.real()},
           {"lambda_im", rep.lambda2.imag()},
           {"alpha", rep.alpha},
           {"m", rep.m},
           {"n", rep.n},
           {"L20_re", rep.L20.real()}, {"L20_im", rep.L20.imag()},
           {"L11_re", rep.L11.real()}, {"L11_im", rep.L11.imag()},
           {"L02_re", rep.L02.real()}, {"L02_im", rep.L02.imag()},
           {"L21_re", rep.L21.real()}, {"L21_im", rep.L21.imag()},
           {"L", rep.L},
           {"direction", to_string(rep.direction)},
           {"transversality", rep.transversality}};
    emit(o.out, j.dump(2) + "\n");
}

struct SimulateOpts {
    ModelParams params;
    double u0 = 0.35, v0 = 0.6;
    long n = 10000;
    std::string out = "-";
};

void run_simulate(const SimulateOpts& o) {
    const OrbitRecord orbit = simulate(o.params, {o.u0, o.v0}, o.n);
    std::ostringstream os;
    write_orbit_csv(os, orbit);
    emit(o.out, os.str());
    if (orbit.diverged) std::cerr << "note: orbit diverged after " << orbit.states.size() - 1
                                  << " steps; output truncated\n";
}

struct SweepOpts {
    ModelParams params;
    SweepConfig cfg;
    long n = 20000;  // mle only
    int threads = 0;
    std::string out = "-";
};

void run_bifdiag(const SweepOpts& o) {
    std::ostringstream os;
    write_bifurcation_csv(os, bifurcation_diagram(o.params, o.cfg, o.threads));
    emit(o.out, os.str());
}

void run_mle(const SweepOpts& o) {
    std::ostringstream os;
    write_mle_csv(os, mle_curve(o.params, o.cfg, o.n, o.threads));
    emit(o.out, os.str());
}

struct RegionOpts {
    RegionGrid grid{0.025, 1.0, 40, 0.05, 2.0, 40};
    int h = 1;
    int threads = 0;
    std::string out = "-";
};

void run_region(const RegionOpts& o) {
    std::ostringstream os;
    write_region_csv(os, stability_region(o.grid, o.h, o.threads));
    emit(o.out, os.str());
}

struct ControlOpts {
    ModelParams params{0.5, 1.0, 2.0, 1};
    std::string out = "-";
    std::string scan_out;
    int scan_steps = 200;
    double scan_margin = 0.5;
    int threads = 0;
};

void run_control(const ControlOpts& o) {
    o.params.validate();
    const auto fp = positive_fixed_point(o.params);
    if (!fp) throw std::invalid_argument("control: no interior fixed point (gamma <= r(1+c))");
    const ControlTriangle tri = control_triangle(o.params, *fp);
    std::ostringstream os;
    write_triangle_csv(os, tri);
    emit(o.out, os.str());

    if (!o.scan_out.empty()) {
        double s1_lo = tri.vertices[0].s1, s1_hi = s1_lo;
        double s2_lo = tri.vertices[0].s2, s2_hi = s2_lo;
        for (const auto& v : tri.vertices) {
            s1_lo = std::min(s1_lo, v.s1); s1_hi = std::max(s1_hi, v.s1);
            s2_lo = std::min(s2_lo, v.s2); s2_hi = std::max(s2_hi, v.s2);
        }
        const double m1 = o.scan_margin * (s1_hi - s1_lo), m2 = o.scan_margin * (s2_hi - s2_lo);
        const GainGrid grid{s1_lo - m1, s1_hi + m1, o.scan_steps,
                            s2_lo - m2, s2_hi + m2, o.scan_steps};
        std::ostringstream scan;
        write_gain_scan_csv(scan, gain_stability_scan(o.params, *fp, grid, o.threads));
        emit(o.scan_out, scan.str());
    }
}

struct InvariantOpts {
    ModelParams params{0.5, 0.4, 0.6, 1};
    std::string set_name = "M1";
    std::string mode = "membership";
    int grid_steps = 100;
    double v_max = 0.0;  // 0: pick a default for the set
    long starts = 100;
    long max_iter = 100000;
    double tol = 1e-8;
    double min_u0 = 0.01;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out = "-";
};

double default_v_max(const InvariantSetSpec& spec) {
    switch (spec.kind) {
        case InvariantSetKind::M1:
        case InvariantSetKind::M3:
        case InvariantSetKind::M2: {
            double top = 2.0;
            for (int i = 0; i <= 100; ++i) {
                const double u = i / 100.0;
                top = std::max(top, (2.0 - u) * (1.0 + spec.params.c * u));
            }
            return 1.2 * top;
        }
        case InvariantSetKind::N1: return std::min(20.0, 1.2 * psi(spec.params.c, 0.1));
        case InvariantSetKind::N2: return 1.25 * *spec.psi_min_value;
        case InvariantSetKind::AxisU:
        case InvariantSetKind::AxisV: return 2.0;
    }
    return 2.0;
}

void run_invariant(const InvariantOpts& o) {
    o.params.validate();
    const auto kind = invariant_set_kind_from_string(o.set_name.c_str());
    if (!kind) throw std::invalid_argument("invariant: unknown set name: " + o.set_name);
    const InvariantSetSpec spec = make_invariant_set(*kind, o.params);

    if (o.mode == "membership") {
        const double u_max = spec.kind == InvariantSetKind::AxisU ? 2.0 : 1.0;
        const double v_max = o.v_max > 0.0 ? o.v_max : default_v_max(spec);
        std::vector<MembershipRow> rows;
        rows.reserve(static_cast<std::size_t>(o.grid_steps) * o.grid_steps);
        for (int i = 0; i < o.grid_steps; ++i)
            for (int j = 0; j < o.grid_steps; ++j) {
                const State s{u_max * i / (o.grid_steps - 1), v_max * j / (o.grid_steps - 1)};
                MembershipRow row{s.u, s.v, contains(spec, s), std::nullopt};
                if (row.inside) row.stays = verify_step_stays(spec, s);
                rows.push_back(row);
            }
        std::ostringstream os;
        write_membership_csv(os, rows);
        emit(o.out, os.str());
        return;
    }
    if (o.mode != "converge")
        throw std::invalid_argument("invariant: mode must be membership or converge");

    const double v_cap = o.v_max > 0.0 ? o.v_max : default_v_max(spec);
    std::vector<State> starts(o.starts);
    for (long k = 0; k < o.starts; ++k) {
        Rng rng(mix_seed(o.seed, static_cast<std::uint64_t>(k)));
        State s{0.0, 0.0};
        do {
            s = {rng.uniform(0.0, 1.0), rng.uniform(0.0, v_cap)};
        } while (!(contains(spec, s) && s.u > o.min_u0));
        starts[k] = s;
    }
    std::vector<ConvergenceRow> rows(o.starts);
#ifdef _OPENMP
    const int nt = o.threads > 0 ? o.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (long k = 0; k < o.starts; ++k) {
        const auto conv = converges_to_E1(o.params, starts[k], o.max_iter, o.tol);
        rows[k] = {starts[k].u, starts[k].v, conv.converged, conv.iterations};
    }
    std::ostringstream os;
    write_convergence_csv(os, rows);
    emit(o.out, os.str());
}

void add_model_flags(CLI::App* cmd, ModelParams& p) {
    cmd->add_option("--r", p.r, "death rate r > 0")->capture_default_str();
    cmd->add_option("--c", p.c, "saturation constant c > 0")->capture_default_str();
    cmd->add_option("--gamma", p.gamma, "net gain")->capture_default_str();
    cmd->add_option("--h", p.h, "response order, 1 or 2")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
}

std::string g_config_path;  // informational; consumed before CLI parsing

void add_config(CLI::App* cmd) {
    cmd->add_option("--config", g_config_path, "key = value recipe file (flags override it)");
}

// --h is a model flag here, so the help flag keeps only its long form. Every
// option takes the last occurrence so recipe values yield to explicit flags.
CLI::App* subcommand(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    return cmd;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Rewrites "cmd sub ... --config FILE ..." into "cmd sub <file flags> ...":
// each "key = value" line becomes --key value placed directly after the
// subcommand, so flags given on the command line override the file.
std::vector<std::string> expand_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
        } else {
            ++i;
        }
    }
    if (path.empty()) return args;

    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file: " + path);
    std::vector<std::string> expanded;
    std::string line;
    while (std::getline(f, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not key = value: " + t);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("config line has no key: " + t);
        if (key == "config") throw std::invalid_argument("config files cannot nest");
        expanded.push_back("--" + key);
        expanded.push_back(value);
    }
    // insert after the subcommand token (first non-flag argument)
    auto pos = args.begin();
    while (pos != args.end() && !pos->empty() && (*pos)[0] == '-') ++pos;
    if (pos != args.end()) ++pos;
    args.insert(pos, expanded.begin(), expanded.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis tools for a discrete plankton predator-prey map"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    FixedPointsOpts fx;
    fx.params = {0.5, 1.0, 1.775, 1};
    auto* cmd_fx = subcommand(app, "fixed-points", "classify all fixed points (JSON)");
    add_model_flags(cmd_fx, fx.params);
    cmd_fx->add_option("--tol", fx.tol, "non-hyperbolicity band")->capture_default_str();
    cmd_fx->add_option("--out", fx.out, "output path, - for stdout")->capture_default_str();
    add_config(cmd_fx);
    cmd_fx->callback([&] { run_fixed_points(fx); });

    NsOpts ns;
    auto* cmd_ns = subcommand(app, "ns", "bifurcation analysis at the critical parameter (JSON)");
    cmd_ns->add_option("--r", ns.r, "death rate r > 0")->capture_default_str();
    cmd_ns->add_option("--c", ns.c, "saturation constant c > 0")->capture_default_str();
    cmd_ns->add_option("--h", ns.h, "response order, 1 or 2")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    cmd_ns->add_option("--out", ns.out, "output path, - for stdout")->capture_default_str();
    add_config(cmd_ns);
    cmd_ns->callback([&] { run_ns(ns); });

    SimulateOpts sim;
    sim.params = {0.5, 1.0, 1.775, 1};
    auto* cmd_sim = subcommand(app, "simulate", "iterate one orbit (CSV: step,u,v)");
    add_model_flags(cmd_sim, sim.params);
    cmd_sim->add_option("--u0", sim.u0, "initial u")->capture_default_str();
    cmd_sim->add_option("--v0", sim.v0, "initial v")->capture_default_str();
    cmd_sim->add_option("--n", sim.n, "iterations")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd_sim->add_option("--out", sim.out, "output path, - for stdout")->capture_default_str();
    add_config(cmd_sim);
    cmd_sim->callback([&] { run_simulate(sim); });

    auto add_sweep_flags = [&](CLI::App* cmd, SweepOpts& o, bool with_samples) {
        cmd->add_option("--r", o.params.r, "death rate r > 0")->capture_default_str();
        cmd->add_option("--c", o.params.c, "saturation constant c > 0")->capture_default_str();
        cmd->add_option("--h", o.params.h, "response order, 1 or 2")
            ->check(CLI::IsMember({1, 2}))
            ->capture_default_str();
        cmd->add_option("--gamma-lo", o.cfg.gamma_lo, "sweep start")->capture_default_str();
        cmd->add_option("--gamma-hi", o.cfg.gamma_hi, "sweep end")->capture_default_str();
        cmd->add_option("--gamma-steps", o.cfg.steps, "gamma grid points")->capture_default_str();
        cmd->add_option("--transient", o.cfg.transient, "discarded iterations per point")
            ->capture_default_str();
        if (with_samples)
            cmd->add_option("--samples", o.cfg.samples, "recorded states per point")
                ->capture_default_str();
        cmd->add_option("--u0", o.cfg.initial.u, "initial u")->capture_default_str();
        cmd->add_option("--v0", o.cfg.initial.v, "initial v")->capture_default_str();
        cmd->add_option("--seed", o.cfg.seed, "seed for the tangent direction")->capture_default_str();
        cmd->add_option("--threads", o.threads, "worker threads, 0 = all")->capture_default_str();
        cmd->add_option("--out", o.out, "output path, - for stdout")->capture_default_str();
        add_config(cmd);
    };

    SweepOpts bif;
    bif.params = {0.5, 1.0, 0.0, 1};
    auto* cmd_bif = subcommand(app, "bifdiag", "bifurcation diagram sweep (CSV)");
    add_sweep_flags(cmd_bif, bif, true);
    cmd_bif->callback([&] { run_bifdiag(bif); });

    SweepOpts mle;
    mle.params = {0.5, 1.0, 0.0, 1};
    auto* cmd_mle = subcommand(app, "mle", "maximum Lyapunov exponent sweep (CSV)");
    add_sweep_flags(cmd_mle, mle, false);
    cmd_mle->add_option("--n", mle.n, "accumulation steps per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_mle->callback([&] { run_mle(mle); });

    RegionOpts reg;
    auto* cmd_reg = subcommand(app, "region", "attracting band over an (r,c) grid (CSV)");
    cmd_reg->add_option("--h", reg.h, "response order, 1 or 2")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    cmd_reg->add_option("--r-lo", reg.grid.r_lo)->capture_default_str();
    cmd_reg->add_option("--r-hi", reg.grid.r_hi)->capture_default_str();
    cmd_reg->add_option("--r-steps", reg.grid.r_steps)->capture_default_str();
    cmd_reg->add_option("--c-lo", reg.grid.c_lo)->capture_default_str();
    cmd_reg->add_option("--c-hi", reg.grid.c_hi)->capture_default_str();
    cmd_reg->add_option("--c-steps", reg.grid.c_steps)->capture_default_str();
    cmd_reg->add_option("--threads", reg.threads, "worker threads, 0 = all")->capture_default_str();
    cmd_reg->add_option("--out", reg.out, "output path, - for stdout")->capture_default_str();
    add_config(cmd_reg);
    cmd_reg->callback([&] { run_region(reg); });

    ControlOpts ctl;
    auto* cmd_ctl = subcommand(app, "control", "stable-gain triangle and optional gain scan (CSV)");
    add_model_flags(cmd_ctl, ctl.params);
    cmd_ctl->add_option("--out", ctl.out, "triangle output path, - for stdout")->capture_default_str();
    cmd_ctl->add_option("--scan-out", ctl.scan_out, "gain-scan output path (omit to skip)");
    cmd_ctl->add_option("--scan-steps", ctl.scan_steps, "scan grid points per axis")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_ctl->add_option("--scan-margin", ctl.scan_margin, "bounding-box inflation fraction")
        ->capture_default_str();
    cmd_ctl->add_option("--threads", ctl.threads, "worker threads, 0 = all")->capture_default_str();
    add_config(cmd_ctl);
    cmd_ctl->callback([&] { run_control(ctl); });

    InvariantOpts inv;
    auto* cmd_inv = subcommand(app, "invariant", "invariant-set membership grid or convergence runs (CSV)");
    add_model_flags(cmd_inv, inv.params);
    cmd_inv->add_option("--set", inv.set_name, "M1 M2 M3 N1 N2 AxisU AxisV")->capture_default_str();
    cmd_inv->add_option("--mode", inv.mode, "membership | converge")
        ->check(CLI::IsMember({"membership", "converge"}))
        ->capture_default_str();
    cmd_inv->add_option("--grid-steps", inv.grid_steps, "membership grid points per axis")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_inv->add_option("--v-max", inv.v_max, "v extent of the grid/sampling box (0 = auto)")
        ->capture_default_str();
    cmd_inv->add_option("--starts", inv.starts, "converge-mode sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_inv->add_option("--max-iter", inv.max_iter, "converge-mode iteration budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_inv->add_option("--tol", inv.tol, "convergence tolerance (sup norm)")->capture_default_str();
    cmd_inv->add_option("--min-u0", inv.min_u0, "converge-mode lower bound on u0")->capture_default_str();
    cmd_inv->add_option("--seed", inv.seed, "sampling seed")->capture_default_str();
    cmd_inv->add_option("--threads", inv.threads, "worker threads, 0 = all")->capture_default_str();
    cmd_inv->add_option("--out", inv.out, "output path, - for stdout")->capture_default_str();
    add_config(cmd_inv);
    cmd_inv->callback([&] { run_invariant(inv); });

    try {
        std::vector<std::string> args = expand_config_args(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
