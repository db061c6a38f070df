#pragma once

#include <span>

#include "chemwave/scenarios.hpp"
#include "chemwave/wave_model.hpp"

namespace chemwave {

/// Inputs of the shift formula. u0 is sampled on the uniform grid
/// [0, x_max]; the integral beyond x_max is closed analytically (u0 is
/// required to have decayed there).
struct ShiftInputs {
    std::span<const double> u0;
    double dx;
    double x_max;
    double beta;
    WaveParams wp;
    ModelParams mp;
    EtaSpec eta;
};

/// alpha = -(1/u_-) int_0^inf [u0 - U(x-beta)] dx
///         - (D/s) ln(1 + e^{-s beta / D})
///         + (1/u_-) int_0^inf (eta - eta_-) dt.
/// Spatial integral: composite Simpson on the grid plus the analytic tail
/// of U beyond x_max; the eta integral comes from the EtaSpec closed form.
/// Throws if u0 has not decayed at x_max ("initial data does not decay").
double compute_alpha(const ShiftInputs& in);

/// Closed-form residual mass
///   -(D u_-/s) ln(1 + e^{(s/D)(-s t + alpha - beta)}) + int_t^inf (eta - eta_-).
/// Tends to 0 as t -> inf.
double residual_mass_closed(double t, double alpha, double beta, const WaveParams& wp,
                            double D, const EtaSpec& eta);

/// Boundary trace A(t); the same closed form as residual_mass_closed. The
/// anti-derivative definition gives phi(0,t) = -A(t) while the paperwork
/// convention asserts +A(t); diagnostics report both signed values and
/// comparisons use magnitudes.
double boundary_A(double t, double alpha, double beta, const WaveParams& wp, double D,
                  const EtaSpec& eta);

/// A'(t) = s (u_- - U(-s t + alpha - beta)) - (eta(t) - eta_-).
double boundary_A_prime(double t, double alpha, double beta, const WaveParams& wp,
                        double D, const EtaSpec& eta);

/// Predicted instantaneous rate d/dt int (u - U) dx; identical to A'(t).
double mass_balance_rhs(double t, double alpha, double beta, const WaveParams& wp,
                        double D, const EtaSpec& eta);

/// Analytic tail mass of the shifted profile beyond the grid:
/// int_{x_max}^inf U(y - front) dy with front = s t - alpha + beta.
double wave_tail_mass_U(double x_max, double front, const WaveParams& wp, double D);
double wave_tail_mass_V(double x_max, double front, const WaveParams& wp, double D);

}  // namespace chemwave
