#include "chemwave/shift_and_balance.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chemwave/numerics.hpp"

namespace chemwave {

double wave_tail_mass_U(double x_max, double front, const WaveParams& wp, double D) {
    return D * wp.u_minus / wp.s * log1p_exp(-wp.s / D * (x_max - front));
}

double wave_tail_mass_V(double x_max, double front, const WaveParams& wp, double D) {
    return D * wp.v_minus / wp.s * log1p_exp(-wp.s / D * (x_max - front));
}

double compute_alpha(const ShiftInputs& in) {
    const std::size_t n = in.u0.size();
    if (n < 3) throw std::invalid_argument("u0 too short");
    if (!(in.beta > 0.0)) throw std::invalid_argument("beta must be positive");
    if (std::fabs(in.u0[n - 1]) > 1e-12 * in.wp.u_minus) {
        throw std::invalid_argument("initial data does not decay; alpha ill-defined");
    }

    const double D = in.mp.D;
    std::vector<double> residual(n);
    for (std::size_t i = 0; i < n; ++i) {
        residual[i] = in.u0[i] - profile_U(i * in.dx - in.beta, in.wp, D);
    }
    // int_0^inf [u0 - U(x-beta)] dx: Simpson on the grid, u0 treated as zero
    // beyond x_max, and the U tail closed analytically.
    const double integral = simpson(residual, in.dx) - wave_tail_mass_U(in.x_max, in.beta, in.wp, D);

    return -integral / in.wp.u_minus - D / in.wp.s * log1p_exp(-in.wp.s * in.beta / D) +
           eta_integral_full(in.eta) / in.wp.u_minus;
}

double residual_mass_closed(double t, double alpha, double beta, const WaveParams& wp,
                            double D, const EtaSpec& eta) {
    const double arg = wp.s / D * (-wp.s * t + alpha - beta);
    return -D * wp.u_minus / wp.s * log1p_exp(arg) + eta_integral_tail(eta, t);
}

double boundary_A(double t, double alpha, double beta, const WaveParams& wp, double D,
                  const EtaSpec& eta) {
    return residual_mass_closed(t, alpha, beta, wp, D, eta);
}

double boundary_A_prime(double t, double alpha, double beta, const WaveParams& wp,
                        double D, const EtaSpec& eta) {
    // u_- - U(z) = u_- / (e^{-s z / D} + 1), free of cancellation in the tail
    const double z = -wp.s * t + alpha - beta;
    const double deficit = wp.u_minus * logistic_tail(-wp.s * z / D);
    return wp.s * deficit - (eta_eval(eta, t) - eta.eta_minus);
}

double mass_balance_rhs(double t, double alpha, double beta, const WaveParams& wp,
                        double D, const EtaSpec& eta) {
    return boundary_A_prime(t, alpha, beta, wp, D, eta);
}

}  // namespace chemwave
