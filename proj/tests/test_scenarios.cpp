#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chemwave/diagnostics.hpp"
#include "chemwave/numerics.hpp"
#include "chemwave/scenarios.hpp"
#include "chemwave/wave_model.hpp"
#include "oracles.hpp"

using namespace chemwave;

namespace {

const ModelParams kMp(1.0, 4.0, 2.0, 1.0);
const WaveParams kWp = select_wave(kMp.chi, -1.0);

// Independent budget oracle: suprema of the four smallness terms by
// quadrature and dense sampling, not the library closed forms. The
// deviation eta - eta_- is evaluated in definitional form; subtracting
// eta_eval from eta_minus would lose the far tail to cancellation.
double budget_by_quadrature(const EtaSpec& spec) {
    auto dev = [&](double t) {
        if (spec.form == EtaSpec::Form::PowerLaw) {
            return spec.delta * std::pow(1.0 + t, -spec.k);
        }
        return std::fabs(eta_eval(spec, t) - spec.eta_minus);
    };
    auto dev_prime = [&](double t) {
        return std::fabs(oracles::derivative([&](double x) { return eta_eval(spec, x); }, t,
                                             1e-3 * (1.0 + t)));
    };
    const double term1 = oracles::integrate_to_inf(dev_prime, 0.0, 1e-12);
    double term2 = dev(0.0);
    for (int i = 1; i <= 2000; ++i) term2 = std::fmax(term2, dev(i * 0.05));
    const double term3 = oracles::integrate_to_inf(dev, 0.0, 1e-12);
    // sup_t int_0^t int_tau^inf dev(z) dz dtau = int_0^inf z dev(z) dz (Fubini)
    const double term4 =
        oracles::integrate_to_inf([&](double z) { return z * dev(z); }, 0.0, 1e-12);
    return term1 + term2 + term3 + term4;
}

}  // namespace

TEST_CASE("eta_eval forms") {
    const EtaSpec c = EtaSpec::constant(-1.0);
    CHECK(eta_eval(c, 0.0) == -1.0);
    CHECK(eta_eval(c, 1e9) == -1.0);

    const EtaSpec p = EtaSpec::power_law(-1.0, 0.01, 3.0);
    CHECK(eta_eval(p, 0.0) == doctest::Approx(-0.99).epsilon(1e-15));
    CHECK(eta_eval(p, 1e6) == doctest::Approx(-1.0).epsilon(1e-12));

    const EtaSpec z = EtaSpec::power_law(-1.0, 0.0, 3.0);
    for (double t : {0.0, 0.5, 7.0}) CHECK(eta_eval(z, t) == -1.0);

    const EtaSpec w = EtaSpec::wave_flux(kWp, kMp.D, 10.0);
    for (double t : {0.0, 1.0, 4.0}) {
        CHECK(eta_eval(w, t) ==
              doctest::Approx(wave_flux(-kWp.s * t - 10.0, kWp, kMp.D)).epsilon(1e-14));
    }
    CHECK(eta_eval(w, 1e6) == doctest::Approx(kWp.eta_minus).epsilon(1e-14));
}

TEST_CASE("eta closed-form integrals match quadrature") {
    for (const EtaSpec& spec : {EtaSpec::power_law(-1.0, 0.01, 3.0),
                                EtaSpec::power_law(-0.5, 0.03, 4.0),
                                EtaSpec::wave_flux(kWp, kMp.D, 6.0)}) {
        auto dev = [&](double t) { return eta_eval(spec, t) - spec.eta_minus; };
        CHECK(eta_integral_full(spec) ==
              doctest::Approx(oracles::integrate_to_inf(dev, 0.0, 1e-13)).epsilon(1e-9));
        for (double t : {0.0, 0.7, 3.0}) {
            CHECK(eta_integral_tail(spec, t) ==
                  doctest::Approx(oracles::integrate_to_inf(dev, t, 1e-13)).epsilon(1e-9));
        }
    }
    CHECK(eta_integral_full(EtaSpec::power_law(-1.0, 0.01, 3.0)) ==
          doctest::Approx(0.005).epsilon(1e-14));
    CHECK(eta_prime_total_variation(EtaSpec::power_law(-1.0, 0.01, 3.0)) == 0.01);
}

TEST_CASE("around budget closed forms") {
    CHECK(around_budget(EtaSpec::constant(-1.0)) == 0.0);

    const double b3 = around_budget(EtaSpec::power_law(-1.0, 0.01, 3.0));
    CHECK(std::fabs(b3 - 0.03) <= 1e-10);
    const double b4 = around_budget(EtaSpec::power_law(-1.0, 0.01, 4.0));
    CHECK(std::fabs(b4 - 0.025) <= 1e-10);

    // independent high-precision quadrature of the four terms
    CHECK(std::fabs(b3 - budget_by_quadrature(EtaSpec::power_law(-1.0, 0.01, 3.0))) <= 1e-10);
    CHECK(std::fabs(b4 - budget_by_quadrature(EtaSpec::power_law(-1.0, 0.01, 4.0))) <= 1e-10);

    const EtaSpec w = EtaSpec::wave_flux(kWp, kMp.D, 4.0);
    CHECK(around_budget(w) ==
          doctest::Approx(budget_by_quadrature(w)).epsilon(1e-7));
}

TEST_CASE("around budget is homogeneous of degree 1 in delta") {
    for (double k : {2.5, 3.0, 6.0}) {
        const double b1 = around_budget(EtaSpec::power_law(-1.0, 0.01, k));
        const double b2 = around_budget(EtaSpec::power_law(-1.0, 0.07, k));
        CHECK(b2 / b1 == doctest::Approx(7.0).epsilon(1e-12));
    }
}

TEST_CASE("slow power-law decay is rejected") {
    CHECK_THROWS_AS(EtaSpec::power_law(-1.0, 0.01, 2.0), std::invalid_argument);
    EtaSpec bad;  // bypasses the factory validation
    bad.form = EtaSpec::Form::PowerLaw;
    bad.eta_minus = -1.0;
    bad.delta = 0.01;
    bad.k = 1.5;
    CHECK_THROWS_WITH_AS(around_budget(bad), "fourth around-integral diverges",
                         std::runtime_error);
}

TEST_CASE("build_initial: zero amplitude gives the exact shifted wave") {
    Grid g{40.0, 401, 3.0, 0.0};
    PerturbationSpec p;
    p.beta = 8.0;
    const InitialData data = build_initial(p, kWp, kMp.D, g);
    for (int i = 0; i < g.nx; ++i) {
        CHECK(data.u0[i] == profile_U(data.x[i] - 8.0, kWp, kMp.D));
        CHECK(data.v0[i] == profile_V(data.x[i] - 8.0, kWp, kMp.D));
        CHECK(data.phi0[i] == 0.0);
        CHECK(data.psi0[i] == 0.0);
    }
}

TEST_CASE("build_initial: quadrature recovers Phi0 from the density field") {
    Grid g{40.0, 801, 3.0, 0.0};
    PerturbationSpec p;
    p.amp_phi = 1e-3;
    p.center = 5.0;
    p.width = 1.0;
    p.beta = 8.0;
    const InitialData data = build_initial(p, kWp, kMp.D, g);

    // Phi0(x) = -int_x^inf (u0 - U(y - beta)) dy by fine-grid Simpson
    for (double x : {0.0, 3.0, 5.0, 6.5}) {
        const double fine_dx = 0.001;
        const int n = static_cast<int>(std::lround((14.0 - x) / fine_dx)) + 1;
        std::vector<double> f(n);
        for (int i = 0; i < n; ++i) {
            const double y = x + i * fine_dx;
            const double xi = (y - p.center) / p.width;
            f[i] = 1e-3 * std::exp(-xi * xi) * (-2.0 * xi / p.width);
        }
        const double recovered = -simpson(f, fine_dx);
        const int gi = static_cast<int>(std::lround(x / g.dx()));
        CHECK(std::fabs(recovered - data.phi0[gi]) <= 1e-10 * p.amp_phi);
    }
}

TEST_CASE("build_initial: sign flip of the amplitude flips Phi0") {
    Grid g{40.0, 401, 3.0, 0.0};
    PerturbationSpec p;
    p.amp_phi = 2e-3;
    p.beta = 8.0;
    PerturbationSpec m = p;
    m.amp_phi = -2e-3;
    const InitialData dp = build_initial(p, kWp, kMp.D, g);
    const InitialData dm = build_initial(m, kWp, kMp.D, g);
    for (int i = 0; i < g.nx; ++i) CHECK(dp.phi0[i] == -dm.phi0[i]);
}

TEST_CASE("build_initial rejects bumps touching the domain ends") {
    Grid g{40.0, 401, 3.0, 0.0};
    PerturbationSpec p;
    p.amp_phi = 1e-3;
    p.center = 1.0;  // e^{-1} tail at x = 0
    p.beta = 8.0;
    CHECK_THROWS_AS(build_initial(p, kWp, kMp.D, g), std::invalid_argument);
    p.center = 39.0;
    CHECK_THROWS_AS(build_initial(p, kWp, kMp.D, g), std::invalid_argument);
}

TEST_CASE("build_initial translation data recovers through the anti-derivative") {
    Grid g{40.0, 801, 3.0, 0.0};
    PerturbationSpec p;
    p.beta = 8.0;
    p.initial_shift = 0.5;
    const InitialData data = build_initial(p, kWp, kMp.D, g);
    // phi0(0) is the translation mass: -int_0^a U(theta - beta) dtheta ~ a u_-
    const double mass = oracles::integrate(
        [&](double th) { return profile_U(th - p.beta, kWp, kMp.D); }, 0.0, 0.5, 1e-14);
    CHECK(data.phi0[0] == doctest::Approx(mass).epsilon(1e-10));
    // and the field derivative matches u0 - U(x - beta)
    const int gi = 200;  // x = 10
    const double x = data.x[gi];
    const double lhs = (data.phi0[gi + 1] - data.phi0[gi - 1]) / (2.0 * g.dx());
    CHECK(lhs == doctest::Approx(data.u0[gi] - profile_U(x - p.beta, kWp, kMp.D))
                     .epsilon(1e-4));
}

TEST_CASE("smallness report: zero data") {
    Grid g{40.0, 401, 3.0, 0.0};
    PerturbationSpec p;
    p.beta = 8.0;
    const SmallnessReport rep =
        smallness_report(p, EtaSpec::constant(-1.0), kWp, kMp.D, g, 0.0, 0.2);
    CHECK(rep.norm_phi0_2w0 == 0.0);
    CHECK(rep.norm_psi0_2 == 0.0);
    CHECK(rep.norm_psi0x_1w0 == 0.0);
    CHECK(rep.product_h1_beta == 0.0);
    CHECK(rep.hypothesis_sum == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
    CHECK(rep.admissible);
}

TEST_CASE("weight at the front trace is exactly 2") {
    const double alpha = 0.01, beta = 10.0;
    for (double t : {0.0, 1.0, 5.0}) {
        const double x = kWp.s * t - alpha + beta;
        CHECK(weight_w(x, t, alpha, beta, kWp, kMp.D) == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("smallness report: canonical bump regression values") {
    // amp = 1e-3, sigma = 1, x0 = 5, beta = 10 on the desk-scale grid.
    // Golden values frozen from the first run; the m = 0 piece has the
    // analytic anchor ||Phi0|| = amp (sigma sqrt(pi/2))^{1/2} = 1.11954e-3.
    Scenario sc = make_default_scenario();
    sc.pert.amp_phi = 1e-3;
    sc.pert.amp_psi = 1e-3;
    const SmallnessReport rep =
        smallness_report(sc.pert, EtaSpec::power_law(-1.0, 0.01, 3.0), sc.wp, sc.mp.D,
                         sc.grid, 0.01, 0.2);
    CHECK(rep.norm_phi0_2w0 == doctest::Approx(4.1749474986527164e-3).epsilon(1e-9));
    CHECK(rep.norm_psi0_2 == doctest::Approx(4.1746711729486793e-3).epsilon(1e-9));
    CHECK(rep.norm_psi0x_1w0 == doctest::Approx(3.0547712753585064e-3).epsilon(1e-9));
    CHECK(rep.delta == 0.01);
    CHECK(rep.admissible);
    // weighted norms dominate the unweighted counterparts (w >= 1)
    CHECK(rep.norm_phi0_2w0 >= rep.norm_phi0_h1);
}

TEST_CASE("scenario parser round trip and defaults") {
    const std::string text = R"([model]
D = 1.0
xi = 4.0
mu = 2.0
c_plus = 1.0

[wave]
eta_minus = -1.0
beta = 10.0

[eta]
form = power-law
delta = 0.01
k = 3.0

[perturbation]
amp_phi = 1e-3
amp_psi = 1e-3
center = 5.0
width = 1.0

[grid]
x_max = 80.0
dx = 0.05
t_max = 15.0
cfl_safety = 0.4
)";
    const Scenario sc = parse_scenario(text);
    CHECK(sc.mp.chi == 8.0);
    CHECK(sc.wp.s == doctest::Approx(2.0));
    CHECK(sc.eta.form == EtaSpec::Form::PowerLaw);
    CHECK(sc.eta.delta == 0.01);
    CHECK(sc.pert.beta == 10.0);
    CHECK(sc.grid.nx == 1601);
    CHECK(sc.grid.dx() == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(sc.solver.cfl_safety == 0.4);

    const Scenario dflt = parse_scenario("");
    CHECK(dflt.mp.chi == 8.0);
    CHECK(dflt.eta.form == EtaSpec::Form::Constant);
}

TEST_CASE("scenario parser rejections") {
    CHECK_THROWS_AS(parse_scenario("[model]\nbogus_key = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("[warp]\nD = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("[model]\nD = 1\nD = 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("[model]\nD = fast\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("[eta]\nform = ramp\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("[model]\nchi = 7.5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("D = 1\n"), std::invalid_argument);
    // wave-flux form wires beta and the selected wave into the signal
    const Scenario wf = parse_scenario("[eta]\nform = wave-flux\n");
    CHECK(wf.eta.form == EtaSpec::Form::WaveFlux);
    CHECK(wf.eta.beta == 10.0);
}
