#pragma once

namespace chemwave {

/// Physical constants of the chemotaxis model.
///
/// The coupling chi of the transformed system equals mu*xi; it is stored
/// explicitly and the product identity is asserted at construction.
struct ModelParams {
    double D;       ///< cell diffusion rate (length^2 / time)
    double xi;      ///< chemotactic coefficient
    double mu;      ///< chemical degradation rate
    double chi;     ///< coupling, chi = mu * xi
    double c_plus;  ///< far-field chemical concentration

    ModelParams(double D, double xi, double mu, double c_plus);
    /// Variant taking an explicit chi; throws if chi != mu*xi (4 ulps).
    ModelParams(double D, double xi, double mu, double chi, double c_plus);
};

/// The traveling wave uniquely selected by the asymptotic boundary flux:
///   s = (chi*|eta_minus|)^(1/3),
///   u_minus = (eta_minus^2 / chi)^(1/3),
///   v_minus = (eta_minus / chi^2)^(1/3) < 0.
struct WaveParams {
    double s;          ///< wave speed, > 0
    double u_minus;    ///< left asymptotic cell density, > 0
    double v_minus;    ///< left asymptotic transformed state, < 0
    double eta_minus;  ///< asymptotic boundary flux, < 0
};

/// Selects the wave from the coupling and the asymptotic inward flux.
/// Throws std::invalid_argument for eta_minus >= 0 ("flux must be inward")
/// or chi <= 0.
WaveParams select_wave(double chi, double eta_minus);

/// Raises std::logic_error if any of the wave closure identities
/// (s^3 = chi|eta-|, s = sqrt(chi u-), v- = -sqrt(u-/chi), eta- = chi u- v-)
/// is violated beyond 4 ulps.
void check_wave_closure(const WaveParams& wp, double chi);

// Closed-form profiles in the moving coordinate z = x - s t. All are
// overflow-safe: beyond |s z / D| = 700 they return the exact asymptotic
// states.
double profile_U(double z, const WaveParams& wp, double D);
double profile_V(double z, const WaveParams& wp, double D);
double profile_C(double z, const WaveParams& wp, const ModelParams& mp);

// Analytic derivatives, so residual checks never rely on finite differences.
double profile_U_prime(double z, const WaveParams& wp, double D);
double profile_V_prime(double z, const WaveParams& wp, double D);
double profile_C_prime(double z, const WaveParams& wp, const ModelParams& mp);

/// Wave flux D*U' + chi*U*V. Identically equal to -s*U(z): substituting
/// V = (v-/u-) U and using s^2 = chi u-, v- = -u-/s, the quadratic terms
/// of D*U' and chi*U*V cancel exactly. Tends to eta_minus as z -> -inf
/// and to 0 as z -> +inf.
double wave_flux(double z, const WaveParams& wp, double D);

/// Pointwise residuals of the integrated traveling-wave ODEs
///   |-sU - chi U V - D U'|  and  |-sV - U|.
struct OdeResidual {
    double momentum;  ///< first equation
    double coupling;  ///< second equation
};
OdeResidual ode_residual(double z, const WaveParams& wp, double D);

}  // namespace chemwave
