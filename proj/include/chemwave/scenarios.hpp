#pragma once

#include <span>
#include <string>
#include <vector>

#include "chemwave/grid.hpp"
#include "chemwave/wave_model.hpp"

namespace chemwave {

/// Boundary-flux time signal eta(t) -> eta_minus with closed-form accessors
/// for every improper integral the shift and budget formulas need.
///
/// Forms:
///   constant    eta(t) = eta_minus
///   power-law   eta(t) = eta_minus + delta (1+t)^-k,  k > 2
///   wave-flux   eta(t) = D U' + chi U V evaluated at z = -s t - beta,
///               i.e. the selected wave's own flux trace at x = 0
struct EtaSpec {
    enum class Form { Constant, PowerLaw, WaveFlux };

    Form form = Form::Constant;
    double eta_minus = -1.0;
    double delta = 0.0;  // power-law amplitude, >= 0
    double k = 3.0;      // power-law decay exponent, > 2
    // wave-flux parameters
    double s = 0.0;
    double u_minus = 0.0;
    double D = 1.0;
    double beta = 0.0;

    static EtaSpec constant(double eta_minus);
    static EtaSpec power_law(double eta_minus, double delta, double k);
    static EtaSpec wave_flux(const WaveParams& wp, double D, double beta);
};

double eta_eval(const EtaSpec& spec, double t);

/// Integral of (eta - eta_minus) over [0, inf).
double eta_integral_full(const EtaSpec& spec);

/// Integral of (eta - eta_minus) over [t, inf).
double eta_integral_tail(const EtaSpec& spec, double t);

/// Total variation of eta: integral of |eta'| over [0, inf).
double eta_prime_total_variation(const EtaSpec& spec);

/// Sum of the suprema of the four smallness terms
///   int_0^t |eta'| , |eta(t)-eta_-| , int_0^inf |eta-eta_-| ,
///   int_0^t int_tau^inf |eta-eta_-|
/// in closed form. For the power law this is
/// delta (2 + 1/(k-1) + 1/((k-1)(k-2))); throws for k <= 2
/// ("fourth around-integral diverges").
double around_budget(const EtaSpec& spec);

/// Gaussian anti-derivative perturbations of the shifted wave. The bumps
/// live on (Phi0, Psi0); the fields get their exact analytic derivatives.
struct PerturbationSpec {
    double amp_phi = 0.0;
    double amp_psi = 0.0;
    double center = 5.0;
    double width = 1.0;
    double beta = 10.0;
    double initial_shift = 0.0;  // u0 = U(x - beta + shift) + Phi0'
};

struct InitialData {
    std::vector<double> x;
    std::vector<double> u0, v0;
    std::vector<double> phi0, psi0;  // the analytic (Phi0, Psi0) samples
};

/// Builds (u0, v0) = (U, V)(x - beta + shift) + (Phi0', Psi0') on the grid.
/// Rejects bumps that are not negligible at either domain end.
InitialData build_initial(const PerturbationSpec& p, const WaveParams& wp, double D,
                          const Grid& grid);

struct SmallnessReport {
    double norm_phi0_2w0 = 0.0;   // ||Phi0||_{2,w0}
    double norm_psi0_2 = 0.0;     // ||Psi0||_2
    double norm_psi0x_1w0 = 0.0;  // ||Psi0x||_{1,w0}
    double norm_phi0_h1 = 0.0;    // ||Phi0||_1
    double delta = 0.0;
    double beta_inv = 0.0;
    double hypothesis_sum = 0.0;   // sum of the five smallness terms
    double product_h1_beta = 0.0;  // (||Phi0||_1 + delta) * beta
    double epsilon0 = 0.0;
    bool smallness_ok = false;     // hypothesis_sum <= epsilon0
    bool product_ok = false;       // product <= 1
    bool admissible = false;
};

/// Measures the hypotheses of the convergence theorems against a
/// user-supplied epsilon0. A report, not a gate.
SmallnessReport smallness_report(const PerturbationSpec& p, const EtaSpec& eta,
                                 const WaveParams& wp, double D, const Grid& grid,
                                 double alpha, double epsilon0);

/// A full simulation setup: model, selected wave, flux signal, initial
/// perturbation, grid and solver options.
struct Scenario {
    ModelParams mp;
    WaveParams wp;
    EtaSpec eta;
    PerturbationSpec pert;
    Grid grid;
    SolverConfig solver;
};

/// The desk-scale defaults: D=1, xi=4, mu=2 (chi=8), c_+=1, eta_-=-1
/// (s=2, u_-=1/2, v_-=-1/4), beta=10, x_max=80, dx=0.05, t_max=15.
Scenario make_default_scenario();

/// Parses the sectioned key=value scenario format ([model], [wave], [eta],
/// [perturbation], [grid]). Unknown sections or keys are rejected.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& text);

}  // namespace chemwave
