#include "chemwave/wave_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "chemwave/numerics.hpp"

namespace chemwave {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be positive");
    }
}

}  // namespace

ModelParams::ModelParams(double D_, double xi_, double mu_, double c_plus_)
    : D(D_), xi(xi_), mu(mu_), chi(mu_ * xi_), c_plus(c_plus_) {
    require_positive(D, "D");
    require_positive(xi, "xi");
    require_positive(mu, "mu");
    require_positive(c_plus, "c_plus");
}

ModelParams::ModelParams(double D_, double xi_, double mu_, double chi_, double c_plus_)
    : D(D_), xi(xi_), mu(mu_), chi(chi_), c_plus(c_plus_) {
    require_positive(D, "D");
    require_positive(xi, "xi");
    require_positive(mu, "mu");
    require_positive(c_plus, "c_plus");
    if (!within_ulps(chi, mu * xi, 4)) {
        throw std::invalid_argument("chi must equal mu*xi");
    }
}

namespace {

// cbrt with one Newton step; keeps the cubed-back identity within 4 ulps
double polished_cbrt(double x) {
    double r = std::cbrt(x);
    r -= (r * r * r - x) / (3.0 * r * r);
    return r;
}

}  // namespace

WaveParams select_wave(double chi, double eta_minus) {
    require_positive(chi, "chi");
    if (!(eta_minus < 0.0)) {
        throw std::invalid_argument("flux must be inward");
    }
    WaveParams wp;
    wp.eta_minus = eta_minus;
    wp.s = polished_cbrt(chi * -eta_minus);
    wp.u_minus = polished_cbrt(eta_minus * eta_minus / chi);
    wp.v_minus = -std::sqrt(wp.u_minus / chi);  // = (eta_minus/chi^2)^{1/3}
    return wp;
}

void check_wave_closure(const WaveParams& wp, double chi) {
    if (!within_ulps(wp.s * wp.s * wp.s, chi * std::fabs(wp.eta_minus), 4))
        throw std::logic_error("wave closure violated: s^3 != chi*|eta_minus|");
    if (!within_ulps(wp.s, std::sqrt(chi * wp.u_minus), 4))
        throw std::logic_error("wave closure violated: s != sqrt(chi*u_minus)");
    if (!within_ulps(wp.v_minus, -std::sqrt(wp.u_minus / chi), 4))
        throw std::logic_error("wave closure violated: v_minus != -sqrt(u_minus/chi)");
    if (!within_ulps(wp.eta_minus, chi * wp.u_minus * wp.v_minus, 4))
        throw std::logic_error("wave closure violated: eta_minus != chi*u_minus*v_minus");
}

double profile_U(double z, const WaveParams& wp, double D) {
    return wp.u_minus * logistic_tail(wp.s * z / D);
}

double profile_V(double z, const WaveParams& wp, double D) {
    return wp.v_minus * logistic_tail(wp.s * z / D);
}

double profile_C(double z, const WaveParams& wp, const ModelParams& mp) {
    const double a = wp.s * z / mp.D;
    if (a > 700.0) return mp.c_plus;
    // c_plus * exp((D/xi) * [a - log(1 + e^a)]); the bracket equals
    // -log1p(e^-a), which is the well-conditioned form for a >= 0.
    double bracket;
    if (a >= 0.0) {
        bracket = -std::log1p(std::exp(-a));
    } else {
        bracket = a - std::log1p(std::exp(a));
    }
    return mp.c_plus * std::exp(mp.D / mp.xi * bracket);
}

double profile_U_prime(double z, const WaveParams& wp, double D) {
    const double U = profile_U(z, wp, D);
    return -(wp.s / D) * U * (1.0 - U / wp.u_minus);
}

double profile_V_prime(double z, const WaveParams& wp, double D) {
    const double V = profile_V(z, wp, D);
    return -(wp.s / D) * V * (1.0 - V / wp.v_minus);
}

double profile_C_prime(double z, const WaveParams& wp, const ModelParams& mp) {
    // (ln C)' = (s/xi) / (e^{sz/D} + 1)
    const double C = profile_C(z, wp, mp);
    return C * (wp.s / mp.xi) * logistic_tail(wp.s * z / mp.D);
}

double wave_flux(double z, const WaveParams& wp, double D) {
    const double chi = wp.s * wp.s / wp.u_minus;  // s^2 = chi * u_minus
    return D * profile_U_prime(z, wp, D) + chi * profile_U(z, wp, D) * profile_V(z, wp, D);
}

OdeResidual ode_residual(double z, const WaveParams& wp, double D) {
    const double chi = wp.s * wp.s / wp.u_minus;
    const double U = profile_U(z, wp, D);
    const double V = profile_V(z, wp, D);
    const double Up = profile_U_prime(z, wp, D);
    OdeResidual r;
    r.momentum = std::fabs(-wp.s * U - chi * U * V - D * Up);
    r.coupling = std::fabs(-wp.s * V - U);
    return r;
}

}  // namespace chemwave
