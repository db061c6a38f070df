#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chemwave/scenarios.hpp"
#include "chemwave/wave_model.hpp"

namespace chemwave {

/// One timestamped row of everything the convergence theorems speak about.
/// The first 13 fields are the CSV contract, in this exact column order:
/// t, sup_u_err, sup_v_err, sup_c_err, mass_residual_sim,
/// mass_residual_closed, phi_at_0, A_of_t, E, D_int, norm_phi_2w, norm_psi,
/// norm_psix_1w.
struct DiagRecord {
    double t = 0.0;
    double sup_u_err = 0.0;
    double sup_v_err = 0.0;
    double sup_c_err = 0.0;
    double mass_residual_sim = 0.0;
    double mass_residual_closed = 0.0;
    double phi_at_0 = 0.0;
    double A_of_t = 0.0;
    double E = 0.0;
    double D_int = 0.0;
    double norm_phi_2w = 0.0;
    double norm_psi = 0.0;
    double norm_psix_1w = 0.0;
    // auxiliary (not part of the CSV contract)
    double sup_abs_psi = 0.0;
    double c_end = 0.0;
};

std::string diag_csv_header();
std::string diag_csv_row(const DiagRecord& r);

/// phi_i = -(trapezoid of f from x_i to x_max) - analytic_tail, accumulated
/// right to left. analytic_tail is int_{x_max}^inf f dy. If f has not
/// decayed at the right end the tail is dropped and *decay_ok (when given)
/// is set false.
std::vector<double> anti_derivative(std::span<const double> f, double dx,
                                    double analytic_tail, bool* decay_ok = nullptr);

/// w(x,t) = 1 + e^{(s/D)(x - s t + alpha - beta)}, exponent saturated at
/// +-700 like the wave profiles.
double weight_w(double x, double t, double alpha, double beta, const WaveParams& wp,
                double D);

/// ||f||_{m,w} = sum_{k=0..m} sqrt( sum_i w_i (d^k f)_i^2 dx ), with
/// centered-difference derivatives (one-sided second order at the ends).
/// m in {0,1,2}; the field must have at least m+2 points.
double weighted_sobolev_norm(std::span<const double> f, std::span<const double> w,
                             int m, double dx);

/// Unweighted variant (w == 1).
double sobolev_norm(std::span<const double> f, int m, double dx);

/// Trapezoid-in-time accumulator for the running dissipation integral.
class DissipationAccumulator {
public:
    double accumulate(double t, double rate);
    double value() const { return value_; }

private:
    double value_ = 0.0;
    double last_t_ = 0.0;
    double last_rate_ = 0.0;
    bool has_last_ = false;
};

/// Assembles a full DiagRecord from the discrete state. Computes the
/// anti-derivative perturbations (phi, psi) with analytic tails, the
/// reconstructed c = C_shifted e^{-mu psi}, the closed-form mass law, the
/// energy functional and the weighted norms.
DiagRecord record(double t, std::span<const double> x, std::span<const double> u,
                  std::span<const double> v, double alpha, double beta,
                  const WaveParams& wp, const ModelParams& mp, const EtaSpec& eta,
                  DissipationAccumulator& acc);

struct OrderEstimate {
    double order = 0.0;
    bool monotone = false;  // errors strictly decreasing along the ladder
};

/// Least-squares slope of log(error) against log(dx). Requires >= 3 levels;
/// a non-monotone ladder is reported with monotone = false.
OrderEstimate convergence_order(std::span<const std::pair<double, double>> dx_and_error);

}  // namespace chemwave
