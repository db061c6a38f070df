#pragma once

#include <string>
#include <vector>

namespace chemwave::cli {

/// Empirically chosen working epsilon_0 for the smallness hypotheses. The
/// theorems only assert existence of such a constant; this value admits the
/// canonical small-bump scenarios and is not a model constant.
inline constexpr double kDefaultEpsilon0 = 0.2;

struct VerifyWaveOptions {
    double D = 1.0;
    double xi = 4.0;
    double mu = 2.0;
    double c_plus = 1.0;
    double eta_minus = -1.0;
    double chi = 0.0;  // 0 = derive as mu*xi; anything else is asserted against mu*xi
    std::string out_dir = ".";
};

struct SimulateOptions {
    std::string scenario_path;  // empty = built-in desk-scale defaults
    std::string out_dir = ".";
    int diag_every = 200;
    bool force_inadmissible = false;
    double epsilon0 = kDefaultEpsilon0;
};

struct ConvergenceOptions {
    std::string scenario_path;
    std::string out_dir = ".";
    int levels = 3;
    std::vector<double> dx_list;  // optional explicit ladder, strictly decreasing
    int jobs = 0;                 // 0 = hardware concurrency
};

struct SweepOptions {
    std::string scenario_path;
    std::string out_dir = ".";
    std::string axis;  // beta | delta | k | amp_phi | amp_psi
    std::vector<double> values;
    int diag_every = 400;
    int jobs = 0;
    double epsilon0 = kDefaultEpsilon0;
};

/// Wave-family property suite: closure identities, ODE residuals, U = -sV,
/// monotonicity, flux limits, the Cole-Hopf fixed point and saturation
/// behavior. Writes verify_wave.json; exit 0 iff every check passed.
int cmd_verify_wave(const VerifyWaveOptions& opt);

/// Full run: diag.csv, final_state.csv and summary.json under out_dir.
/// Refuses inadmissible scenarios unless forced; nonzero exit on blowup.
int cmd_simulate(const SimulateOptions& opt);

/// Exact-wave tracking on a dx-halving ladder with dt tied to the diffusive
/// CFL bound; reports the observed spatial order. Exit 0 iff the ladder is
/// monotone and the order lands in [1.7, 2.3].
int cmd_convergence(const ConvergenceOptions& opt);

/// Independent runs across one parameter axis, executed concurrently,
/// summarized one row per value (sorted by value).
int cmd_sweep(const SweepOptions& opt);

/// argv-level entry point (subcommands: verify-wave, simulate, convergence,
/// sweep). Returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace chemwave::cli
