#include "chemwave/cole_hopf.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace chemwave {

std::vector<double> forward_transform(std::span<const double> c, double mu, double dx) {
    const std::size_t n = c.size();
    if (n < 3) throw std::invalid_argument("forward_transform needs at least 3 samples");
    if (!(mu > 0.0) || !(dx > 0.0)) throw std::invalid_argument("mu and dx must be positive");

    std::vector<double> lnc(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(c[i] > 0.0)) {
            throw std::runtime_error("singularity: chemical concentration vanished");
        }
        lnc[i] = std::log(c[i]);
    }

    std::vector<double> v(n);
    const double r = -1.0 / (2.0 * dx * mu);
    v[0] = r * (-3.0 * lnc[0] + 4.0 * lnc[1] - lnc[2]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        v[i] = r * (lnc[i + 1] - lnc[i - 1]);
    }
    v[n - 1] = r * (3.0 * lnc[n - 1] - 4.0 * lnc[n - 2] + lnc[n - 3]);
    return v;
}

std::vector<double> reconstruct_c(std::span<const double> psi,
                                  std::span<const double> shifted_C, double mu) {
    assert(psi.size() == shifted_C.size());
    std::vector<double> c(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        assert(shifted_C[i] > 0.0);
        c[i] = shifted_C[i] * std::exp(-mu * psi[i]);
    }
    return c;
}

std::vector<double> ode_update_c(std::span<const double> c_prev,
                                 std::span<const double> u_now,
                                 std::span<const double> u_prev, double mu, double dt) {
    assert(c_prev.size() == u_now.size() && c_prev.size() == u_prev.size());
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    std::vector<double> c(c_prev.size());
    for (std::size_t i = 0; i < c_prev.size(); ++i) {
        c[i] = c_prev[i] * std::exp(-mu * dt * 0.5 * (u_now[i] + u_prev[i]));
    }
    return c;
}

}  // namespace chemwave
