#include "chemwave/ibvp_solver.hpp"

#include <cmath>
#include <sstream>

#include "chemwave/shift_and_balance.hpp"

namespace chemwave {

double cfl_dt(const Grid& grid, const ModelParams& mp, const WaveParams& wp,
              double cfl_safety) {
    if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) {
        throw std::invalid_argument("cfl_safety must be in (0, 1]");
    }
    const double dx = grid.dx();
    const double diffusive = dx * dx / (2.0 * mp.D);
    const double advective = dx / (mp.chi * (wp.u_minus + std::fabs(wp.v_minus)) + wp.s);
    return cfl_safety * std::fmin(diffusive, advective);
}

double resolve_dt(const Grid& grid, const ModelParams& mp, const WaveParams& wp,
                  const SolverConfig& cfg) {
    const double bound = cfl_dt(grid, mp, wp, cfg.cfl_safety);
    if (grid.dt > 0.0) {
        if (grid.dt > bound * (1.0 + 1e-9)) {
            throw std::invalid_argument("dt inadmissible: exceeds the CFL bound");
        }
        const double ratio = grid.t_max / grid.dt;
        if (std::fabs(ratio - std::round(ratio)) > 1e-6) {
            throw std::invalid_argument("dt must divide t_max evenly");
        }
        return grid.dt;
    }
    const double n_steps = std::ceil(grid.t_max / bound - 1e-12);
    return grid.t_max / n_steps;
}

namespace {

// Right-hand side of u_t = D u_xx + chi (u v)_x, v_t = u_x on the truncated
// half line. The flux condition enters through the ghost value
// u_{-1} = u_1 - 2 dx (eta - chi u_0 v_0) / D; v at x = 0 uses one-sided
// second-order u_x; the last node is held at the far-field state.
void eval_rhs(std::span<const double> u, std::span<const double> v, double t, double D,
              double chi, double dx, const EtaSpec& eta, std::span<double> p,
              std::span<double> du, std::span<double> dv) {
    const std::size_t n = u.size();
    const double idx2 = 1.0 / (dx * dx);
    const double i2dx = 0.5 / dx;

    for (std::size_t i = 0; i < n; ++i) p[i] = u[i] * v[i];

    for (std::size_t i = 1; i + 1 < n; ++i) {
        du[i] = D * (u[i + 1] - 2.0 * u[i] + u[i - 1]) * idx2 +
                chi * (p[i + 1] - p[i - 1]) * i2dx;
        dv[i] = (u[i + 1] - u[i - 1]) * i2dx;
    }

    const double eta_t = eta_eval(eta, t);
    const double ux0 = (eta_t - chi * p[0]) / D;
    const double ughost = u[1] - 2.0 * dx * ux0;
    const double uxx0 = (u[1] - 2.0 * u[0] + ughost) * idx2;
    const double vx0 = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * i2dx;
    du[0] = D * uxx0 + chi * (ux0 * v[0] + u[0] * vx0);
    dv[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) * i2dx;

    du[n - 1] = 0.0;
    dv[n - 1] = 0.0;
}

struct Work {
    std::vector<double> p, k1u, k1v, k2u, k2v, u1, v1;
    explicit Work(std::size_t n)
        : p(n), k1u(n), k1v(n), k2u(n), k2v(n), u1(n), v1(n) {}
};

void check_finite(const State& st, double t, long step) {
    for (std::size_t i = 0; i < st.u.size(); ++i) {
        if (!std::isfinite(st.u[i]) || !std::isfinite(st.v[i])) {
            std::ostringstream msg;
            msg << "blowup: step rejected at t=" << t << ", step " << step << ", node " << i
                << " (u=" << st.u[i] << ", v=" << st.v[i] << ")";
            throw BlowupError(t, step, i, msg.str());
        }
    }
}

void advance(State& st, double t, double dt, double D, double chi, const EtaSpec& eta,
             double dx, SolverConfig::Scheme scheme, Work& w) {
    const std::size_t n = st.u.size();
    eval_rhs(st.u, st.v, t, D, chi, dx, eta, w.p, w.k1u, w.k1v);
    if (scheme == SolverConfig::Scheme::Euler) {
        for (std::size_t i = 0; i < n; ++i) {
            st.u[i] += dt * w.k1u[i];
            st.v[i] += dt * w.k1v[i];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            w.u1[i] = st.u[i] + dt * w.k1u[i];
            w.v1[i] = st.v[i] + dt * w.k1v[i];
        }
        eval_rhs(w.u1, w.v1, t + dt, D, chi, dx, eta, w.p, w.k2u, w.k2v);
        const double h = 0.5 * dt;
        for (std::size_t i = 0; i < n; ++i) {
            st.u[i] += h * (w.k1u[i] + w.k2u[i]);
            st.v[i] += h * (w.k1v[i] + w.k2v[i]);
        }
    }
    check_finite(st, t + dt, st.step_count + 1);
}

void validate_domain(const Scenario& sc) {
    const double required =
        sc.pert.beta + sc.wp.s * sc.grid.t_max + 40.0 * sc.mp.D / sc.wp.s;
    if (sc.grid.x_max < required) {
        std::ostringstream msg;
        msg << "x_max too small: the wave reaches the right boundary (need x_max >= "
            << required << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

State step(const State& state, const Grid& grid, const ModelParams& mp,
           const WaveParams& wp, const EtaSpec& eta, const SolverConfig& cfg) {
    if (static_cast<int>(state.u.size()) != grid.nx ||
        static_cast<int>(state.v.size()) != grid.nx || grid.nx < 4) {
        throw std::invalid_argument("state does not match the grid");
    }
    const double bound = cfl_dt(grid, mp, wp, cfg.cfl_safety);
    const double dt = grid.dt > 0.0 ? grid.dt : bound;
    if (dt > bound * (1.0 + 1e-9)) {
        throw std::invalid_argument("dt inadmissible: exceeds the CFL bound");
    }
    State out = state;
    Work w(state.u.size());
    advance(out, state.t, dt, mp.D, mp.chi, eta, grid.dx(), cfg.scheme, w);
    out.t = state.t + dt;
    out.step_count = state.step_count + 1;
    return out;
}

RunResult run(const Scenario& sc, int diag_every) {
    if (diag_every < 1) throw std::invalid_argument("diag_every must be >= 1");
    validate_domain(sc);
    const Grid& g = sc.grid;
    const double dx = g.dx();

    InitialData init = build_initial(sc.pert, sc.wp, sc.mp.D, g);

    RunResult res;
    res.alpha = compute_alpha({init.u0, dx, g.x_max, sc.pert.beta, sc.wp, sc.mp, sc.eta});
    res.dt = resolve_dt(g, sc.mp, sc.wp, sc.solver);
    const long n_steps = std::lround(g.t_max / res.dt);

    State st;
    st.u = init.u0;
    st.v = init.v0;
    st.u.back() = 0.0;
    st.v.back() = 0.0;

    DissipationAccumulator acc;
    res.trajectory.push_back(
        record(0.0, init.x, st.u, st.v, res.alpha, sc.pert.beta, sc.wp, sc.mp, sc.eta, acc));

    Work w(st.u.size());
    for (long n = 1; n <= n_steps; ++n) {
        const double t_prev = (n - 1) * res.dt;
        try {
            advance(st, t_prev, res.dt, sc.mp.D, sc.mp.chi, sc.eta, dx, sc.solver.scheme, w);
        } catch (const BlowupError& e) {
            res.blowup = true;
            res.error = e.what();
            break;
        }
        st.t = n * res.dt;
        st.step_count = n;
        if (n % diag_every == 0 || n == n_steps) {
            res.trajectory.push_back(record(st.t, init.x, st.u, st.v, res.alpha, sc.pert.beta,
                                            sc.wp, sc.mp, sc.eta, acc));
        }
    }
    res.final_state = std::move(st);
    return res;
}

OriginalRunResult run_original(const Scenario& sc, int diag_every) {
    if (diag_every < 1) throw std::invalid_argument("diag_every must be >= 1");
    validate_domain(sc);
    const Grid& g = sc.grid;
    const double dx = g.dx();
    const std::size_t n = static_cast<std::size_t>(g.nx);
    const double floor =
        sc.solver.c_floor > 0.0 ? sc.solver.c_floor : 1e-12 * sc.mp.c_plus;

    InitialData init = build_initial(sc.pert, sc.wp, sc.mp.D, g);

    OriginalRunResult res;
    res.alpha = compute_alpha({init.u0, dx, g.x_max, sc.pert.beta, sc.wp, sc.mp, sc.eta});
    res.dt = resolve_dt(g, sc.mp, sc.wp, sc.solver);
    const long n_steps = std::lround(g.t_max / res.dt);

    std::vector<double> u = init.u0;
    u.back() = 0.0;
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = profile_C(init.x[i] - sc.pert.beta, sc.wp, sc.mp) *
               std::exp(-sc.mp.mu * init.psi0[i]);
        if (c[i] < floor) {
            throw std::invalid_argument("initial chemical concentration below the floor");
        }
    }

    auto make_record = [&](double t, long clamped) {
        OriginalDiagRecord r;
        r.t = t;
        r.clamped = clamped;
        const double front = sc.wp.s * t - res.alpha + sc.pert.beta;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = init.x[i] - front;
            r.sup_u_err = std::fmax(r.sup_u_err, std::fabs(u[i] - profile_U(z, sc.wp, sc.mp.D)));
            r.sup_c_err = std::fmax(r.sup_c_err, std::fabs(c[i] - profile_C(z, sc.wp, sc.mp)));
        }
        r.c_end = c[n - 1];
        return r;
    };
    res.trajectory.push_back(make_record(0.0, 0));

    std::vector<double> clamped_c(n), vd(n), u_prev(n);
    Work w(n);
    const long clamp_limit = g.nx / 100;
    for (long step_i = 1; step_i <= n_steps; ++step_i) {
        const double t_prev = (step_i - 1) * res.dt;
        long clamped = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (c[i] < floor) {
                ++clamped;
                clamped_c[i] = floor;
            } else {
                clamped_c[i] = c[i];
            }
        }
        if (clamped > clamp_limit && !res.flagged_unreliable) {
            res.flagged_unreliable = true;
            res.error = "singularity dominated: original-system solve unreliable";
        }
        res.max_clamped_per_step = std::max(res.max_clamped_per_step, clamped);

        vd = forward_transform(clamped_c, sc.mp.mu, dx);
        u_prev = u;

        // u-step with (ln c)_x frozen; the v-equation slot of eval_rhs is unused
        State ust;
        ust.u = std::move(u);
        ust.v = vd;
        try {
            eval_rhs(ust.u, vd, t_prev, sc.mp.D, sc.mp.chi, dx, sc.eta, w.p, w.k1u, w.k1v);
            if (sc.solver.scheme == SolverConfig::Scheme::Euler) {
                for (std::size_t i = 0; i < n; ++i) ust.u[i] += res.dt * w.k1u[i];
            } else {
                for (std::size_t i = 0; i < n; ++i) w.u1[i] = ust.u[i] + res.dt * w.k1u[i];
                eval_rhs(w.u1, vd, t_prev + res.dt, sc.mp.D, sc.mp.chi, dx, sc.eta, w.p, w.k2u,
                         w.k2v);
                for (std::size_t i = 0; i < n; ++i) {
                    ust.u[i] += 0.5 * res.dt * (w.k1u[i] + w.k2u[i]);
                }
            }
            ust.step_count = step_i - 1;
            check_finite(ust, t_prev + res.dt, step_i);
        } catch (const BlowupError& e) {
            u = std::move(ust.u);
            res.blowup = true;
            res.error = e.what();
            break;
        }
        u = std::move(ust.u);

        c = ode_update_c(c, u, u_prev, sc.mp.mu, res.dt);

        if (step_i % diag_every == 0 || step_i == n_steps) {
            res.trajectory.push_back(make_record(step_i * res.dt, clamped));
        }
    }

    res.final_state.x = init.x;
    res.final_state.u = std::move(u);
    res.final_state.companion = std::move(c);
    res.final_state.t = res.trajectory.back().t;
    return res;
}

}  // namespace chemwave
