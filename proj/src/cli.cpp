#include "chemwave/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "chemwave/cole_hopf.hpp"
#include "chemwave/diagnostics.hpp"
#include "chemwave/ibvp_solver.hpp"
#include "chemwave/numerics.hpp"
#include "chemwave/scenarios.hpp"
#include "chemwave/shift_and_balance.hpp"
#include "chemwave/wave_model.hpp"

namespace chemwave::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
    if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Scenario load_or_default(const std::string& path) {
    return path.empty() ? make_default_scenario() : load_scenario(path);
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

json checks_to_json(const std::vector<Check>& checks, bool all_pass) {
    json out;
    out["all_pass"] = all_pass;
    out["checks"] = json::array();
    for (const auto& c : checks) {
        out["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return out;
}

// Runs sc on its grid and returns the final sup_u_err (diagnostics only at
// the endpoints).
std::pair<double, double> tracking_error(Scenario sc) {
    RunResult rr = run(sc, std::numeric_limits<int>::max());
    if (rr.blowup) throw std::runtime_error(rr.error);
    return {rr.dt, rr.trajectory.back().sup_u_err};
}

template <typename Task>
void run_batched(const std::vector<Task>& tasks, int jobs) {
    int batch = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (batch < 1) batch = 1;
    std::size_t next = 0;
    while (next < tasks.size()) {
        std::vector<std::future<void>> futs;
        for (int j = 0; j < batch && next < tasks.size(); ++j, ++next) {
            futs.push_back(std::async(std::launch::async, tasks[next]));
        }
        for (auto& f : futs) f.get();
    }
}

}  // namespace

int cmd_verify_wave(const VerifyWaveOptions& opt) {
    std::vector<Check> checks;
    try {
        ModelParams mp = opt.chi != 0.0 ? ModelParams(opt.D, opt.xi, opt.mu, opt.chi, opt.c_plus)
                                        : ModelParams(opt.D, opt.xi, opt.mu, opt.c_plus);
        WaveParams wp = select_wave(mp.chi, opt.eta_minus);
        const double D = mp.D;
        const double zs = D / wp.s;

        {
            bool pass = true;
            std::string detail = "s^3=chi|eta-|, s=sqrt(chi u-), v-=-sqrt(u-/chi), eta-=chi u- v-";
            try {
                check_wave_closure(wp, mp.chi);
            } catch (const std::exception& e) {
                pass = false;
                detail = e.what();
            }
            checks.push_back({"wave_closure", pass, detail});
        }

        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> zdist(-30.0 * zs, 30.0 * zs);
        double max_res = 0.0;
        bool pointwise_ok = true;
        for (int i = 0; i < 1000; ++i) {
            const double z = zdist(rng);
            const OdeResidual r = ode_residual(z, wp, D);
            max_res = std::fmax(max_res, std::fmax(r.momentum, r.coupling));
            if (!within_ulps(profile_U(z, wp, D), -wp.s * profile_V(z, wp, D), 4)) {
                pointwise_ok = false;
            }
        }
        checks.push_back({"ode_residual", max_res <= 1e-12 * wp.u_minus,
                          "max residual " + g17(max_res)});
        checks.push_back({"U_equals_minus_sV", pointwise_ok, "4-ulp pointwise identity"});

        {
            bool mono = true;
            double pu = profile_U(-30.0 * zs, wp, D);
            double pv = profile_V(-30.0 * zs, wp, D);
            double pc = profile_C(-30.0 * zs, wp, mp);
            for (int i = 1; i <= 1000; ++i) {
                const double z = (-30.0 + 0.06 * i) * zs;
                const double cu = profile_U(z, wp, D);
                const double cv = profile_V(z, wp, D);
                const double cc = profile_C(z, wp, mp);
                if (!(cu < pu) || !(cv > pv) || !(cc > pc)) mono = false;
                pu = cu;
                pv = cv;
                pc = cc;
            }
            checks.push_back({"monotonicity", mono, "U down, V up, C up on [-30,30] D/s"});
        }

        {
            const double left = std::fabs(wave_flux(-35.0 * zs, wp, D) - wp.eta_minus);
            const double right = std::fabs(wave_flux(35.0 * zs, wp, D));
            double max_identity = 0.0;
            for (int i = 0; i <= 200; ++i) {
                const double z = (-20.0 + 0.2 * i) * zs;
                max_identity = std::fmax(
                    max_identity, std::fabs(wave_flux(z, wp, D) + wp.s * profile_U(z, wp, D)));
            }
            const bool pass = left <= 1e-12 * std::fabs(wp.eta_minus) &&
                              right <= 1e-12 * std::fabs(wp.eta_minus) &&
                              max_identity <= 1e-13 * wp.s * wp.u_minus;
            checks.push_back({"flux_limits_and_identity", pass,
                              "left dev " + g17(left) + ", right dev " + g17(right) +
                                  ", max |flux + sU| " + g17(max_identity)});
        }

        {
            // Cole-Hopf fixed point: forward transform of C reproduces V at
            // second order on a dx-halving ladder.
            std::vector<std::pair<double, double>> ladder;
            for (double dx : {0.05, 0.025, 0.0125}) {
                const double x_lo = 0.0, x_hi = 30.0, beta = 10.0;
                const int nx = static_cast<int>(std::lround((x_hi - x_lo) / dx)) + 1;
                std::vector<double> c(nx);
                for (int i = 0; i < nx; ++i) {
                    c[i] = profile_C(x_lo + i * dx - beta, wp, mp);
                }
                std::vector<double> v = forward_transform(c, mp.mu, dx);
                double err = 0.0;
                for (int i = 0; i < nx; ++i) {
                    err = std::fmax(
                        err, std::fabs(v[i] - profile_V(x_lo + i * dx - beta, wp, D)));
                }
                ladder.emplace_back(dx, err);
            }
            const OrderEstimate est = convergence_order(ladder);
            const bool pass = est.monotone && est.order >= 1.7 && est.order <= 2.3;
            checks.push_back(
                {"cole_hopf_fixed_point", pass, "observed order " + g17(est.order)});
        }

        {
            bool finite = true;
            for (double z : {-1e6, 1e6, -1e12, 1e12}) {
                for (double v : {profile_U(z, wp, D), profile_V(z, wp, D), profile_C(z, wp, mp),
                                 profile_U_prime(z, wp, D), profile_C_prime(z, wp, mp),
                                 wave_flux(z, wp, D)}) {
                    if (!std::isfinite(v)) finite = false;
                }
            }
            const bool sat = profile_U(1e6, wp, D) == 0.0 &&
                             profile_U(-1e6, wp, D) == wp.u_minus &&
                             profile_C(1e6, wp, mp) == mp.c_plus;
            checks.push_back({"saturated_tails", finite && sat,
                              "finite profiles and exact asymptotic states at |z| = 1e6"});
        }
    } catch (const std::exception& e) {
        checks.push_back({"construction", false, e.what()});
    }

    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;
    write_text(fs::path(opt.out_dir) / "verify_wave.json",
               checks_to_json(checks, all_pass).dump(2) + "\n");
    for (const auto& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    }
    return all_pass ? 0 : 1;
}

namespace {

json smallness_to_json(const SmallnessReport& rep) {
    return json{{"norm_phi0_2w0", rep.norm_phi0_2w0},
                {"norm_psi0_2", rep.norm_psi0_2},
                {"norm_psi0x_1w0", rep.norm_psi0x_1w0},
                {"norm_phi0_h1", rep.norm_phi0_h1},
                {"delta", rep.delta},
                {"beta_inv", rep.beta_inv},
                {"hypothesis_sum", rep.hypothesis_sum},
                {"product_h1_beta", rep.product_h1_beta},
                {"epsilon0", rep.epsilon0},
                {"smallness_ok", rep.smallness_ok},
                {"product_ok", rep.product_ok},
                {"admissible", rep.admissible}};
}

void write_diag_csv(const fs::path& path, const std::vector<DiagRecord>& traj) {
    std::string text = diag_csv_header() + "\n";
    for (const auto& r : traj) text += diag_csv_row(r) + "\n";
    write_text(path, text);
}

}  // namespace

int cmd_simulate(const SimulateOptions& opt) {
    try {
        Scenario sc = load_or_default(opt.scenario_path);
        InitialData init = build_initial(sc.pert, sc.wp, sc.mp.D, sc.grid);
        const double dx = sc.grid.dx();
        const double alpha = compute_alpha(
            {init.u0, dx, sc.grid.x_max, sc.pert.beta, sc.wp, sc.mp, sc.eta});
        const SmallnessReport rep =
            smallness_report(sc.pert, sc.eta, sc.wp, sc.mp.D, sc.grid, alpha, opt.epsilon0);

        json summary;
        summary["scenario"] = opt.scenario_path.empty() ? "default" : opt.scenario_path;
        summary["alpha"] = alpha;
        summary["around_budget"] = around_budget(sc.eta);
        summary["smallness"] = smallness_to_json(rep);

        if (!rep.admissible && !opt.force_inadmissible) {
            summary["status"] = "rejected: scenario outside the smallness hypotheses "
                                "(rerun with --force-inadmissible to explore)";
            write_text(fs::path(opt.out_dir) / "summary.json", summary.dump(2) + "\n");
            std::cerr << "scenario rejected: smallness hypotheses fail (sum "
                      << rep.hypothesis_sum << " vs epsilon0 " << rep.epsilon0 << ", product "
                      << rep.product_h1_beta << ")\n";
            return 2;
        }

        RunResult rr = run(sc, opt.diag_every);
        write_diag_csv(fs::path(opt.out_dir) / "diag.csv", rr.trajectory);

        {
            // final fields, with c reconstructed through the anti-derivative
            const State& st = rr.final_state;
            const double front = sc.wp.s * st.t - rr.alpha + sc.pert.beta;
            const std::size_t n = st.u.size();
            std::vector<double> rv(n), shifted_C(n);
            for (std::size_t i = 0; i < n; ++i) {
                rv[i] = st.v[i] - profile_V(init.x[i] - front, sc.wp, sc.mp.D);
                shifted_C[i] = profile_C(init.x[i] - front, sc.wp, sc.mp);
            }
            const double tail_v = -wave_tail_mass_V(sc.grid.x_max, front, sc.wp, sc.mp.D);
            std::vector<double> psi = anti_derivative(rv, dx, tail_v);
            std::vector<double> c = reconstruct_c(psi, shifted_C, sc.mp.mu);
            std::string text = "x,u,v,c\n";
            for (std::size_t i = 0; i < n; ++i) {
                text += g17(init.x[i]) + "," + g17(st.u[i]) + "," + g17(st.v[i]) + "," +
                        g17(c[i]) + "\n";
            }
            write_text(fs::path(opt.out_dir) / "final_state.csv", text);
        }

        summary["dt"] = rr.dt;
        summary["records"] = rr.trajectory.size();
        summary["status"] = rr.blowup ? "blowup" : "ok";
        if (rr.blowup) summary["error"] = rr.error;
        const DiagRecord& last = rr.trajectory.back();
        summary["final"] = {{"t", last.t},
                            {"sup_u_err", last.sup_u_err},
                            {"sup_v_err", last.sup_v_err},
                            {"sup_c_err", last.sup_c_err},
                            {"mass_residual_sim", last.mass_residual_sim},
                            {"mass_residual_closed", last.mass_residual_closed},
                            {"E", last.E},
                            {"D_int", last.D_int}};
        write_text(fs::path(opt.out_dir) / "summary.json", summary.dump(2) + "\n");
        return rr.blowup ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        return 2;
    }
}

int cmd_convergence(const ConvergenceOptions& opt) {
    try {
        if (!opt.dx_list.empty()) {
            for (std::size_t i = 1; i < opt.dx_list.size(); ++i) {
                if (!(opt.dx_list[i] < opt.dx_list[i - 1])) {
                    std::cerr << "convergence: dx list must be strictly decreasing "
                                 "(duplicate or non-monotone level rejected)\n";
                    return 2;
                }
            }
        }
        const int levels = opt.dx_list.empty() ? opt.levels : static_cast<int>(opt.dx_list.size());
        if (levels < 3) {
            std::cerr << "convergence: need at least 3 refinement levels\n";
            return 2;
        }

        Scenario base = load_or_default(opt.scenario_path);
        // the ladder tracks the exact wave driven by its own boundary flux
        base.pert.amp_phi = 0.0;
        base.pert.amp_psi = 0.0;
        base.pert.initial_shift = 0.0;
        base.eta = EtaSpec::wave_flux(base.wp, base.mp.D, base.pert.beta);

        std::vector<double> dxs = opt.dx_list;
        if (dxs.empty()) {
            double dx = base.grid.dx();
            for (int l = 0; l < levels; ++l, dx *= 0.5) dxs.push_back(dx);
        }

        std::vector<double> dts(dxs.size(), 0.0), errs(dxs.size(), 0.0);
        std::vector<std::string> fails(dxs.size());
        std::vector<std::function<void()>> tasks;
        for (std::size_t l = 0; l < dxs.size(); ++l) {
            tasks.emplace_back([&, l] {
                try {
                    Scenario sc = base;
                    sc.grid.nx = static_cast<int>(std::lround(sc.grid.x_max / dxs[l])) + 1;
                    auto [dt, err] = tracking_error(sc);
                    dts[l] = dt;
                    errs[l] = err;
                } catch (const std::exception& e) {
                    fails[l] = e.what();
                }
            });
        }
        run_batched(tasks, opt.jobs);

        json out;
        out["levels"] = json::array();
        std::vector<std::pair<double, double>> ladder;
        bool level_failed = false;
        for (std::size_t l = 0; l < dxs.size(); ++l) {
            json lvl{{"dx", dxs[l]}, {"dt", dts[l]}, {"sup_u_err", errs[l]}};
            if (!fails[l].empty()) {
                lvl["error"] = fails[l];
                level_failed = true;
            }
            out["levels"].push_back(lvl);
            ladder.emplace_back(dxs[l], errs[l]);
        }

        bool pass = false;
        if (!level_failed) {
            const OrderEstimate est = convergence_order(ladder);
            out["observed_order"] = est.order;
            out["monotone"] = est.monotone;
            pass = est.monotone && est.order >= 1.7 && est.order <= 2.3;
            if (!est.monotone) out["quality_flag"] = "non-monotone ladder";
            std::cout << "observed spatial order: " << est.order
                      << (est.monotone ? "" : " (non-monotone ladder)") << "\n";
        }
        out["pass"] = pass;
        write_text(fs::path(opt.out_dir) / "convergence.json", out.dump(2) + "\n");

        std::string csv = "dx,dt,sup_u_err\n";
        for (std::size_t l = 0; l < dxs.size(); ++l) {
            csv += g17(dxs[l]) + "," + g17(dts[l]) + "," + g17(errs[l]) + "\n";
        }
        write_text(fs::path(opt.out_dir) / "convergence.csv", csv);
        return pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "convergence: " << e.what() << "\n";
        return 2;
    }
}

namespace {

struct SweepRow {
    double value = 0.0;
    std::string status = "ok";
    double alpha = 0.0;
    double budget = 0.0;
    bool admissible = false;
    double hypothesis_sum = 0.0;
    double E0 = 0.0;
    double max_E_plus_Dint = 0.0;
    double energy_margin = 0.0;
    double final_sup_u = 0.0;
    double final_sup_v = 0.0;
    double final_sup_c = 0.0;
};

Scenario apply_axis(Scenario sc, const std::string& axis, double value) {
    if (axis == "beta") {
        sc.pert.beta = value;
        if (sc.eta.form == EtaSpec::Form::WaveFlux) {
            sc.eta = EtaSpec::wave_flux(sc.wp, sc.mp.D, value);
        }
    } else if (axis == "delta") {
        if (sc.eta.form != EtaSpec::Form::PowerLaw) {
            throw std::invalid_argument("axis 'delta' needs a power-law eta in the scenario");
        }
        sc.eta = EtaSpec::power_law(sc.eta.eta_minus, value, sc.eta.k);
    } else if (axis == "k") {
        if (sc.eta.form != EtaSpec::Form::PowerLaw) {
            throw std::invalid_argument("axis 'k' needs a power-law eta in the scenario");
        }
        sc.eta = EtaSpec::power_law(sc.eta.eta_minus, sc.eta.delta, value);
    } else if (axis == "amp_phi") {
        sc.pert.amp_phi = value;
    } else if (axis == "amp_psi") {
        sc.pert.amp_psi = value;
    } else {
        throw std::invalid_argument("unknown sweep axis '" + axis + "'");
    }
    return sc;
}

}  // namespace

int cmd_sweep(const SweepOptions& opt) {
    try {
        if (opt.values.empty()) {
            std::cerr << "sweep: empty value list rejected\n";
            return 2;
        }
        Scenario base = load_or_default(opt.scenario_path);
        {
            // surface an unknown axis before spawning any runs
            apply_axis(base, opt.axis, opt.values.front());
        }

        std::vector<double> values = opt.values;
        std::sort(values.begin(), values.end());

        std::vector<SweepRow> rows(values.size());
        std::vector<std::function<void()>> tasks;
        for (std::size_t i = 0; i < values.size(); ++i) {
            tasks.emplace_back([&, i] {
                SweepRow& row = rows[i];
                row.value = values[i];
                try {
                    Scenario sc = apply_axis(base, opt.axis, values[i]);
                    InitialData init = build_initial(sc.pert, sc.wp, sc.mp.D, sc.grid);
                    const double alpha = compute_alpha({init.u0, sc.grid.dx(), sc.grid.x_max,
                                                        sc.pert.beta, sc.wp, sc.mp, sc.eta});
                    const SmallnessReport rep = smallness_report(
                        sc.pert, sc.eta, sc.wp, sc.mp.D, sc.grid, alpha, opt.epsilon0);
                    row.alpha = alpha;
                    row.budget = around_budget(sc.eta);
                    row.admissible = rep.admissible;
                    row.hypothesis_sum = rep.hypothesis_sum;

                    RunResult rr = run(sc, opt.diag_every);
                    row.E0 = rr.trajectory.front().E;
                    const double denom = row.E0 +
                                         std::exp(-sc.wp.s * sc.pert.beta / sc.mp.D) +
                                         rep.delta;
                    for (const auto& rec : rr.trajectory) {
                        row.max_E_plus_Dint = std::fmax(row.max_E_plus_Dint, rec.E + rec.D_int);
                    }
                    row.energy_margin = row.max_E_plus_Dint / denom;
                    row.final_sup_u = rr.trajectory.back().sup_u_err;
                    row.final_sup_v = rr.trajectory.back().sup_v_err;
                    row.final_sup_c = rr.trajectory.back().sup_c_err;
                    if (rr.blowup) row.status = "blowup: " + rr.error;
                } catch (const std::exception& e) {
                    row.status = std::string("error: ") + e.what();
                }
            });
        }
        run_batched(tasks, opt.jobs);

        std::string csv =
            "value,alpha,around_budget,admissible,hypothesis_sum,E0,max_E_plus_Dint,"
            "energy_margin,final_sup_u_err,final_sup_v_err,final_sup_c_err,status\n";
        bool all_ok = true;
        for (const auto& r : rows) {
            csv += g17(r.value) + "," + g17(r.alpha) + "," + g17(r.budget) + "," +
                   (r.admissible ? "1" : "0") + "," + g17(r.hypothesis_sum) + "," + g17(r.E0) +
                   "," + g17(r.max_E_plus_Dint) + "," + g17(r.energy_margin) + "," +
                   g17(r.final_sup_u) + "," + g17(r.final_sup_v) + "," + g17(r.final_sup_c) +
                   "," + r.status + "\n";
            if (r.status != "ok") all_ok = false;
        }
        write_text(fs::path(opt.out_dir) / "sweep.csv", csv);

        json out;
        out["axis"] = opt.axis;
        out["rows"] = json::array();
        for (const auto& r : rows) {
            out["rows"].push_back({{"value", r.value},
                                   {"alpha", r.alpha},
                                   {"around_budget", r.budget},
                                   {"admissible", r.admissible},
                                   {"energy_margin", r.energy_margin},
                                   {"final_sup_u_err", r.final_sup_u},
                                   {"status", r.status}});
        }
        out["all_ok"] = all_ok;
        write_text(fs::path(opt.out_dir) / "sweep.json", out.dump(2) + "\n");
        return all_ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "sweep: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"half-line chemotaxis wavefront simulator and verification harness"};
    app.require_subcommand(1);

    VerifyWaveOptions vw;
    auto* verify = app.add_subcommand(
        "verify-wave", "run the traveling-wave property suite and write a pass/fail report");
    verify->add_option("--D", vw.D, "diffusion coefficient");
    verify->add_option("--xi", vw.xi, "chemotactic coefficient");
    verify->add_option("--mu", vw.mu, "degradation rate");
    verify->add_option("--c-plus", vw.c_plus, "far-field concentration");
    verify->add_option("--eta-minus", vw.eta_minus, "asymptotic boundary flux (< 0)");
    verify->add_option("--chi", vw.chi, "explicit coupling (must equal mu*xi)");
    verify->add_option("--out", vw.out_dir, "output directory");

    SimulateOptions sim;
    auto* simulate =
        app.add_subcommand("simulate", "integrate a scenario and write CSV/JSON diagnostics");
    simulate->add_option("--scenario", sim.scenario_path, "scenario file path");
    simulate->add_option("--out", sim.out_dir, "output directory");
    simulate->add_option("--diag-every", sim.diag_every, "steps between diagnostic records")
        ->check(CLI::PositiveNumber);
    simulate->add_flag("--force-inadmissible", sim.force_inadmissible,
                       "run even when the smallness hypotheses fail");
    simulate->add_option("--epsilon0", sim.epsilon0, "smallness threshold");

    ConvergenceOptions conv;
    auto* convergence = app.add_subcommand(
        "convergence", "exact-wave tracking order study on a dx-halving ladder");
    convergence->add_option("--scenario", conv.scenario_path, "scenario file path");
    convergence->add_option("--out", conv.out_dir, "output directory");
    convergence->add_option("--levels", conv.levels, "refinement levels (>= 3)");
    convergence->add_option("--dx-list", conv.dx_list, "explicit dx ladder (strictly decreasing)")
        ->delimiter(',');
    convergence->add_option("--jobs", conv.jobs, "max concurrent level runs");

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "independent runs across one parameter axis");
    sweep->add_option("--scenario", sw.scenario_path, "scenario file path");
    sweep->add_option("--out", sw.out_dir, "output directory");
    sweep->add_option("--axis", sw.axis, "beta | delta | k | amp_phi | amp_psi")->required();
    sweep->add_option("--values", sw.values, "comma-separated axis values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--diag-every", sw.diag_every, "steps between diagnostic records")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--jobs", sw.jobs, "max concurrent runs");
    sweep->add_option("--epsilon0", sw.epsilon0, "smallness threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (verify->parsed()) return cmd_verify_wave(vw);
    if (simulate->parsed()) return cmd_simulate(sim);
    if (convergence->parsed()) return cmd_convergence(conv);
    if (sweep->parsed()) return cmd_sweep(sw);
    return 2;
}

}  // namespace chemwave::cli
