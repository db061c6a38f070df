#include "chemwave/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "chemwave/cole_hopf.hpp"
#include "chemwave/numerics.hpp"
#include "chemwave/shift_and_balance.hpp"

namespace chemwave {

std::string diag_csv_header() {
    return "t,sup_u_err,sup_v_err,sup_c_err,mass_residual_sim,mass_residual_closed,"
           "phi_at_0,A_of_t,E,D_int,norm_phi_2w,norm_psi,norm_psix_1w";
}

namespace {

void append_g17(std::string& out, double v, bool first) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    if (!first) out.push_back(',');
    out += buf;
}

}  // namespace

std::string diag_csv_row(const DiagRecord& r) {
    std::string out;
    append_g17(out, r.t, true);
    for (double v : {r.sup_u_err, r.sup_v_err, r.sup_c_err, r.mass_residual_sim,
                     r.mass_residual_closed, r.phi_at_0, r.A_of_t, r.E, r.D_int,
                     r.norm_phi_2w, r.norm_psi, r.norm_psix_1w}) {
        append_g17(out, v, false);
    }
    return out;
}

std::vector<double> anti_derivative(std::span<const double> f, double dx,
                                    double analytic_tail, bool* decay_ok) {
    const std::size_t n = f.size();
    if (n < 2) throw std::invalid_argument("anti_derivative needs at least 2 samples");

    double max_abs = 0.0;
    for (double v : f) max_abs = std::fmax(max_abs, std::fabs(v));
    const bool decayed = std::fabs(f[n - 1]) <= 1e-8 * max_abs + 1e-300;
    if (decay_ok) *decay_ok = decayed;
    if (!decayed) analytic_tail = 0.0;

    std::vector<double> phi(n);
    phi[n - 1] = -analytic_tail;
    for (std::size_t i = n - 1; i-- > 0;) {
        phi[i] = phi[i + 1] - 0.5 * dx * (f[i] + f[i + 1]);
    }
    return phi;
}

double weight_w(double x, double t, double alpha, double beta, const WaveParams& wp,
                double D) {
    const double arg = wp.s / D * (x - wp.s * t + alpha - beta);
    return 1.0 + std::exp(std::fmin(arg, 700.0));
}

namespace {

// k-th derivative by centered differences, one-sided second order at ends
std::vector<double> derivative(std::span<const double> f, double dx) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    const double i2dx = 0.5 / dx;
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * i2dx;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) * i2dx;
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * i2dx;
    return d;
}

std::vector<double> second_derivative(std::span<const double> f, double dx) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    const double idx2 = 1.0 / (dx * dx);
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * idx2;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * idx2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * idx2;
    return d;
}

double weighted_l2(std::span<const double> g, std::span<const double> w, double dx) {
    double sum = 0.0;
    if (w.empty()) {
        for (std::size_t i = 0; i < g.size(); ++i) sum += g[i] * g[i];
    } else {
        for (std::size_t i = 0; i < g.size(); ++i) sum += w[i] * g[i] * g[i];
    }
    return std::sqrt(sum * dx);
}

double sobolev_norm_impl(std::span<const double> f, std::span<const double> w, int m,
                         double dx) {
    if (m < 0 || m > 2) throw std::invalid_argument("sobolev norm order must be 0, 1 or 2");
    if (static_cast<int>(f.size()) < m + 2) throw std::invalid_argument("field too short");
    double norm = weighted_l2(f, w, dx);
    if (m >= 1) {
        std::vector<double> d1 = derivative(f, dx);
        norm += weighted_l2(d1, w, dx);
        if (m >= 2) {
            std::vector<double> d2 = second_derivative(f, dx);
            norm += weighted_l2(d2, w, dx);
        }
    }
    return norm;
}

}  // namespace

double weighted_sobolev_norm(std::span<const double> f, std::span<const double> w, int m,
                             double dx) {
    if (f.size() != w.size()) throw std::invalid_argument("field/weight size mismatch");
    return sobolev_norm_impl(f, w, m, dx);
}

double sobolev_norm(std::span<const double> f, int m, double dx) {
    return sobolev_norm_impl(f, {}, m, dx);
}

double DissipationAccumulator::accumulate(double t, double rate) {
    if (has_last_) {
        value_ += 0.5 * (rate + last_rate_) * (t - last_t_);
    }
    has_last_ = true;
    last_t_ = t;
    last_rate_ = rate;
    return value_;
}

DiagRecord record(double t, std::span<const double> x, std::span<const double> u,
                  std::span<const double> v, double alpha, double beta,
                  const WaveParams& wp, const ModelParams& mp, const EtaSpec& eta,
                  DissipationAccumulator& acc) {
    const std::size_t n = x.size();
    if (u.size() != n || v.size() != n || n < 4) {
        throw std::invalid_argument("record: inconsistent grid");
    }
    const double dx = x[1] - x[0];
    const double x_max = x[n - 1];
    const double front = wp.s * t - alpha + beta;  // profile argument is x - front

    DiagRecord r;
    r.t = t;

    std::vector<double> ru(n), rv(n), w(n), shifted_C(n);
    double sup_u = 0.0, sup_v = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = x[i] - front;
        ru[i] = u[i] - profile_U(z, wp, mp.D);
        rv[i] = v[i] - profile_V(z, wp, mp.D);
        shifted_C[i] = profile_C(z, wp, mp);
        w[i] = weight_w(x[i], t, alpha, beta, wp, mp.D);
        sup_u = std::fmax(sup_u, std::fabs(ru[i]));
        sup_v = std::fmax(sup_v, std::fabs(rv[i]));
    }
    r.sup_u_err = sup_u;
    r.sup_v_err = sup_v;

    const double tail_u = -wave_tail_mass_U(x_max, front, wp, mp.D);
    const double tail_v = -wave_tail_mass_V(x_max, front, wp, mp.D);
    r.mass_residual_sim = simpson(ru, dx) + tail_u;
    r.mass_residual_closed = residual_mass_closed(t, alpha, beta, wp, mp.D, eta);
    r.A_of_t = boundary_A(t, alpha, beta, wp, mp.D, eta);

    std::vector<double> phi = anti_derivative(ru, dx, tail_u);
    std::vector<double> psi = anti_derivative(rv, dx, tail_v);
    r.phi_at_0 = phi[0];

    double sup_psi = 0.0;
    for (double p : psi) sup_psi = std::fmax(sup_psi, std::fabs(p));
    r.sup_abs_psi = sup_psi;

    std::vector<double> c = reconstruct_c(psi, shifted_C, mp.mu);
    double sup_c = 0.0;
    for (std::size_t i = 0; i < n; ++i) sup_c = std::fmax(sup_c, std::fabs(c[i] - shifted_C[i]));
    r.sup_c_err = sup_c;
    r.c_end = c[n - 1];

    r.norm_phi_2w = weighted_sobolev_norm(phi, w, 2, dx);
    r.norm_psi = sobolev_norm(psi, 0, dx);
    r.norm_psix_1w = weighted_sobolev_norm(rv, w, 1, dx);
    r.E = r.norm_phi_2w * r.norm_phi_2w + r.norm_psi * r.norm_psi +
          r.norm_psix_1w * r.norm_psix_1w;

    const double phix_2w = weighted_sobolev_norm(ru, w, 2, dx);
    const double rate = phix_2w * phix_2w + r.norm_psix_1w * r.norm_psix_1w;
    r.D_int = acc.accumulate(t, rate);
    return r;
}

OrderEstimate convergence_order(std::span<const std::pair<double, double>> dx_and_error) {
    if (dx_and_error.size() < 3) {
        throw std::invalid_argument("convergence_order needs at least 3 refinement levels");
    }
    OrderEstimate est;
    est.monotone = true;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(dx_and_error.size());
    for (std::size_t i = 0; i < dx_and_error.size(); ++i) {
        const auto [dx, err] = dx_and_error[i];
        if (!(dx > 0.0) || !(err > 0.0)) {
            throw std::invalid_argument("convergence_order needs positive dx and error");
        }
        if (i > 0) {
            if (!(dx < dx_and_error[i - 1].first)) {
                throw std::invalid_argument("refinement ladder must have decreasing dx");
            }
            if (!(err < dx_and_error[i - 1].second)) est.monotone = false;
        }
        const double lx = std::log(dx), ly = std::log(err);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    est.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return est;
}

}  // namespace chemwave
