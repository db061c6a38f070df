#pragma once

#include <span>
#include <vector>

namespace chemwave {

/// Discrete fields on a uniform half-line grid: density u plus either the
/// chemical concentration c (original variables) or the transformed state v.
struct FieldPair {
    std::vector<double> x;
    std::vector<double> u;
    std::vector<double> companion;
    double t = 0.0;
};

/// v = -(ln c)_x / mu, centered second order in the interior, one-sided
/// second order at both ends. Throws std::runtime_error
/// "singularity: chemical concentration vanished" if any sample is <= 0.
std::vector<double> forward_transform(std::span<const double> c, double mu, double dx);

/// c_i = shifted_C_i * exp(-mu * psi_i). Strictly positive by construction.
std::vector<double> reconstruct_c(std::span<const double> psi,
                                  std::span<const double> shifted_C, double mu);

/// One step of c_t = -mu u c in exact exponential form with a trapezoidal
/// exponent: c_i <- c_i * exp(-mu dt (u_now_i + u_prev_i)/2). Positivity is
/// preserved unconditionally.
std::vector<double> ode_update_c(std::span<const double> c_prev,
                                 std::span<const double> u_now,
                                 std::span<const double> u_prev, double mu, double dt);

}  // namespace chemwave
