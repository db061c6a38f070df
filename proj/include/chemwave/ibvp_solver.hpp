#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chemwave/cole_hopf.hpp"
#include "chemwave/diagnostics.hpp"
#include "chemwave/grid.hpp"
#include "chemwave/scenarios.hpp"
#include "chemwave/wave_model.hpp"

namespace chemwave {

/// Discrete fields of the transformed system at one time level.
struct State {
    std::vector<double> u;
    std::vector<double> v;
    double t = 0.0;
    long step_count = 0;
};

/// Thrown when a step produces a non-finite value. Carries the time and the
/// first offending node for the diagnostic dump.
struct BlowupError : std::runtime_error {
    BlowupError(double t, long step, std::size_t node, const std::string& what_arg)
        : std::runtime_error(what_arg), t(t), step(step), node(node) {}
    double t;
    long step;
    std::size_t node;
};

/// cfl_safety * min( dx^2 / (2 D), dx / (chi (u_- + |v_-|) + s) ).
double cfl_dt(const Grid& grid, const ModelParams& mp, const WaveParams& wp,
              double cfl_safety);

/// The dt a run will actually use: the largest step <= the CFL bound that
/// divides t_max into a whole number of steps.
double resolve_dt(const Grid& grid, const ModelParams& mp, const WaveParams& wp,
                  const SolverConfig& cfg);

/// One explicit step of the transformed system
///   u_t - chi (u v)_x = D u_xx,   v_t - u_x = 0
/// with the flux condition (D u_x + chi u v)(0,t) = eta(t) enforced through
/// a second-order ghost value, one-sided second-order u_x for v at x = 0,
/// and (u,v) = (0,0) held at x = x_max. Rejects an inadmissible dt before
/// stepping and throws BlowupError on non-finite output.
State step(const State& state, const Grid& grid, const ModelParams& mp,
           const WaveParams& wp, const EtaSpec& eta, const SolverConfig& cfg);

struct RunResult {
    std::vector<DiagRecord> trajectory;
    State final_state;
    double alpha = 0.0;
    double dt = 0.0;
    bool blowup = false;
    std::string error;
};

/// Integrates the scenario to t_max, recording diagnostics every diag_every
/// steps (plus the initial and final states). Deterministic for a given
/// scenario. On blowup the partial trajectory is returned with the flag set.
RunResult run(const Scenario& sc, int diag_every);

struct OriginalDiagRecord {
    double t = 0.0;
    double sup_u_err = 0.0;
    double sup_c_err = 0.0;
    double c_end = 0.0;
    long clamped = 0;
};

struct OriginalRunResult {
    std::vector<OriginalDiagRecord> trajectory;
    FieldPair final_state;  // companion = c
    double alpha = 0.0;
    double dt = 0.0;
    long max_clamped_per_step = 0;
    bool flagged_unreliable = false;  // clamp count exceeded 1% of the grid
    bool blowup = false;
    std::string error;
};

/// Direct solver for the original singular system: alternates an explicit
/// u-step of u_t = [D u_x - xi u (ln c)_x]_x (c clamped at the floor, clamps
/// counted) with the exact exponential c-update. Initial c is
/// C(x - beta) e^{-mu Psi0}.
OriginalRunResult run_original(const Scenario& sc, int diag_every);

}  // namespace chemwave
