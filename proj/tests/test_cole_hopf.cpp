#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

#include "chemwave/cole_hopf.hpp"
#include "chemwave/wave_model.hpp"

using namespace chemwave;

namespace {
const ModelParams kMp(1.0, 4.0, 2.0, 1.0);
const WaveParams kWp = select_wave(kMp.chi, -1.0);

std::vector<double> sample_C(double x0, double dx, int n, double beta) {
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) c[i] = profile_C(x0 + i * dx - beta, kWp, kMp);
    return c;
}

double max_err_vs_V(const std::vector<double>& v, double x0, double dx, double beta) {
    double err = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        err = std::fmax(err, std::fabs(v[i] - profile_V(x0 + i * dx - beta, kWp, kMp.D)));
    }
    return err;
}
}  // namespace

TEST_CASE("forward transform of a constant field vanishes") {
    std::vector<double> c(50, 3.7);
    for (double v : forward_transform(c, 2.0, 0.1)) CHECK(v == 0.0);
}

TEST_CASE("forward transform is exact for exponential concentration") {
    // ln c linear in x: centered and one-sided stencils are both exact
    const double mu = 2.0, dx = 0.05;
    std::vector<double> c(80);
    for (int i = 0; i < 80; ++i) c[i] = std::exp(-mu * i * dx);
    for (double v : forward_transform(c, mu, dx)) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("forward transform reproduces V at second order") {
    const double beta = 10.0;
    const double e1 = max_err_vs_V(
        forward_transform(sample_C(0.0, 0.05, 601, beta), kMp.mu, 0.05), 0.0, 0.05, beta);
    const double e2 = max_err_vs_V(
        forward_transform(sample_C(0.0, 0.025, 1201, beta), kMp.mu, 0.025), 0.0, 0.025, beta);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 1.7);
    CHECK(order <= 2.3);
}

TEST_CASE("forward transform refuses vanished concentration") {
    std::vector<double> c(10, 1.0);
    c[4] = 0.0;
    CHECK_THROWS_WITH_AS(forward_transform(c, 2.0, 0.1),
                         "singularity: chemical concentration vanished", std::runtime_error);
    c[4] = -1e-3;
    CHECK_THROWS_AS(forward_transform(c, 2.0, 0.1), std::runtime_error);
}

TEST_CASE("reconstruct_c identity and uniform factor") {
    const int n = 40;
    std::vector<double> C = sample_C(0.0, 0.25, n, 5.0);
    std::vector<double> psi(n, 0.0);
    std::vector<double> c = reconstruct_c(psi, C, kMp.mu);
    for (int i = 0; i < n; ++i) CHECK(c[i] == C[i]);

    std::fill(psi.begin(), psi.end(), 0.3);
    c = reconstruct_c(psi, C, kMp.mu);
    const double factor = std::exp(-kMp.mu * 0.3);
    for (int i = 0; i < n; ++i) CHECK(c[i] == doctest::Approx(C[i] * factor).epsilon(1e-15));
}

TEST_CASE("reconstruct_c is positive and monotone in psi") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> pd(-3.0, 3.0);
    const int n = 30;
    std::vector<double> C = sample_C(0.0, 0.3, n, 4.0);
    std::vector<double> a(n), b(n);
    for (int i = 0; i < n; ++i) {
        a[i] = pd(rng);
        b[i] = a[i] + std::fabs(pd(rng));
    }
    std::vector<double> ca = reconstruct_c(a, C, kMp.mu);
    std::vector<double> cb = reconstruct_c(b, C, kMp.mu);
    for (int i = 0; i < n; ++i) {
        CHECK(ca[i] > 0.0);
        CHECK(cb[i] <= ca[i]);  // larger psi gives smaller c
    }
}

TEST_CASE("transform roundtrip: c = C e^{-mu psi} maps back to V + psi_x") {
    const double beta = 8.0;
    auto run_at = [&](double dx) {
        const int n = static_cast<int>(std::lround(30.0 / dx)) + 1;
        std::vector<double> C(n), psi(n), expected(n);
        for (int i = 0; i < n; ++i) {
            const double x = i * dx;
            C[i] = profile_C(x - beta, kWp, kMp);
            const double xi = (x - 12.0) / 2.0;
            psi[i] = 1e-2 * std::exp(-xi * xi);
            expected[i] = profile_V(x - beta, kWp, kMp.D) +
                          1e-2 * std::exp(-xi * xi) * (-2.0 * xi / 2.0);
        }
        std::vector<double> v = forward_transform(reconstruct_c(psi, C, kMp.mu), kMp.mu, dx);
        double err = 0.0;
        for (int i = 0; i < n; ++i) err = std::fmax(err, std::fabs(v[i] - expected[i]));
        return err;
    };
    const double e1 = run_at(0.05), e2 = run_at(0.025);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 1.7);
    CHECK(order <= 2.3);
}

TEST_CASE("ode_update_c: no degradation without cells") {
    const int n = 25;
    std::vector<double> c = sample_C(0.0, 0.4, n, 6.0);
    std::vector<double> zero(n, 0.0);
    std::vector<double> out = ode_update_c(c, zero, zero, kMp.mu, 0.01);
    for (int i = 0; i < n; ++i) CHECK(out[i] == c[i]);
}

TEST_CASE("ode_update_c is exact for constant density") {
    const int n = 20;
    const double u0 = 0.37, dt = 0.02, mu = 2.0;
    std::vector<double> c(n, 1.0), u(n, u0);
    for (int k = 0; k < 50; ++k) c = ode_update_c(c, u, u, mu, dt);
    const double expected = std::exp(-mu * u0 * 50 * dt);
    for (int i = 0; i < n; ++i) CHECK(c[i] == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("ode_update_c tracks the traveling concentration at second order in dt") {
    // u sampled from the exact wave keeps c = C(x - s t - beta) exact in space;
    // the trapezoidal exponent leaves an O(dt^2) error
    const double beta = 6.0, t_end = 2.0;
    const int n = 201;
    const double dx = 0.1;
    auto solve = [&](double dt) {
        const int steps = static_cast<int>(std::lround(t_end / dt));
        std::vector<double> c(n), u_prev(n), u_now(n);
        for (int i = 0; i < n; ++i) c[i] = profile_C(i * dx - beta, kWp, kMp);
        for (int k = 0; k < steps; ++k) {
            for (int i = 0; i < n; ++i) {
                u_prev[i] = profile_U(i * dx - kWp.s * (k * dt) - beta, kWp, kMp.D);
                u_now[i] = profile_U(i * dx - kWp.s * ((k + 1) * dt) - beta, kWp, kMp.D);
            }
            c = ode_update_c(c, u_now, u_prev, kMp.mu, dt);
        }
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            err = std::fmax(err,
                            std::fabs(c[i] - profile_C(i * dx - kWp.s * t_end - beta, kWp, kMp)));
        }
        return err;
    };
    const double e1 = solve(0.02), e2 = solve(0.01);
    CHECK(e1 / e2 >= 3.2);
    CHECK(e1 / e2 <= 4.8);
    CHECK(e2 < 1e-5);
}

TEST_CASE("ode_update_c keeps c positive for arbitrary bounded u") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ud(-5.0, 5.0);
    const int n = 40;
    std::vector<double> c(n, 1e-6), a(n), b(n);
    for (int k = 0; k < 20; ++k) {
        for (int i = 0; i < n; ++i) {
            a[i] = ud(rng);
            b[i] = ud(rng);
        }
        c = ode_update_c(c, a, b, 2.0, 0.1);
        for (int i = 0; i < n; ++i) CHECK(c[i] > 0.0);
    }
}
