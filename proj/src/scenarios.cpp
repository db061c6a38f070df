#include "chemwave/scenarios.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chemwave/diagnostics.hpp"
#include "chemwave/numerics.hpp"

namespace chemwave {

EtaSpec EtaSpec::constant(double eta_minus) {
    if (!(eta_minus < 0.0)) throw std::invalid_argument("flux must be inward");
    EtaSpec e;
    e.form = Form::Constant;
    e.eta_minus = eta_minus;
    return e;
}

EtaSpec EtaSpec::power_law(double eta_minus, double delta, double k) {
    if (!(eta_minus < 0.0)) throw std::invalid_argument("flux must be inward");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
    if (!(k > 2.0)) throw std::invalid_argument("fourth around-integral diverges: need k > 2");
    EtaSpec e;
    e.form = Form::PowerLaw;
    e.eta_minus = eta_minus;
    e.delta = delta;
    e.k = k;
    return e;
}

EtaSpec EtaSpec::wave_flux(const WaveParams& wp, double D, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    EtaSpec e;
    e.form = Form::WaveFlux;
    e.eta_minus = wp.eta_minus;
    e.s = wp.s;
    e.u_minus = wp.u_minus;
    e.D = D;
    e.beta = beta;
    return e;
}

double eta_eval(const EtaSpec& spec, double t) {
    switch (spec.form) {
        case EtaSpec::Form::Constant:
            return spec.eta_minus;
        case EtaSpec::Form::PowerLaw:
            return spec.eta_minus + spec.delta * std::pow(1.0 + t, -spec.k);
        case EtaSpec::Form::WaveFlux:
            // -s U(-s t - beta); equals the wave's flux trace at x = 0
            return -spec.s * spec.u_minus *
                   logistic_tail(spec.s / spec.D * (-spec.s * t - spec.beta));
    }
    return spec.eta_minus;
}

namespace {

// sum_{n>=1} (-1)^{n+1} q^n / n^2 = -Li2(-q), for 0 <= q < 1
double dilog_alternating(double q) {
    double sum = 0.0;
    double qn = q;
    for (int n = 1; n <= 1000; ++n) {
        const double term = qn / (static_cast<double>(n) * n);
        sum += (n % 2 == 1) ? term : -term;
        if (term < 1e-18 * (1.0 + std::fabs(sum))) break;
        qn *= q;
    }
    return sum;
}

}  // namespace

double eta_integral_full(const EtaSpec& spec) {
    switch (spec.form) {
        case EtaSpec::Form::Constant:
            return 0.0;
        case EtaSpec::Form::PowerLaw:
            return spec.delta / (spec.k - 1.0);
        case EtaSpec::Form::WaveFlux:
            return spec.D * spec.u_minus / spec.s * log1p_exp(-spec.s * spec.beta / spec.D);
    }
    return 0.0;
}

double eta_integral_tail(const EtaSpec& spec, double t) {
    switch (spec.form) {
        case EtaSpec::Form::Constant:
            return 0.0;
        case EtaSpec::Form::PowerLaw:
            return spec.delta * std::pow(1.0 + t, 1.0 - spec.k) / (spec.k - 1.0);
        case EtaSpec::Form::WaveFlux: {
            const double arg = -spec.s / spec.D * (spec.s * t + spec.beta);
            return spec.D * spec.u_minus / spec.s * log1p_exp(arg);
        }
    }
    return 0.0;
}

double eta_prime_total_variation(const EtaSpec& spec) {
    switch (spec.form) {
        case EtaSpec::Form::Constant:
            return 0.0;
        case EtaSpec::Form::PowerLaw:
            return spec.delta;
        case EtaSpec::Form::WaveFlux:
            // s (u_- - U(-beta)) = s u_- / (e^{s beta/D} + 1)
            return spec.s * spec.u_minus * logistic_tail(spec.s * spec.beta / spec.D);
    }
    return 0.0;
}

double around_budget(const EtaSpec& spec) {
    switch (spec.form) {
        case EtaSpec::Form::Constant:
            return 0.0;
        case EtaSpec::Form::PowerLaw: {
            if (!(spec.k > 2.0)) throw std::runtime_error("fourth around-integral diverges");
            const double k1 = spec.k - 1.0;
            const double k2 = spec.k - 2.0;
            return spec.delta * (2.0 + 1.0 / k1 + 1.0 / (k1 * k2));
        }
        case EtaSpec::Form::WaveFlux: {
            const double tv = eta_prime_total_variation(spec);
            const double q = std::exp(-spec.s * spec.beta / spec.D);
            const double fourth =
                spec.D * spec.D * spec.u_minus / (spec.s * spec.s * spec.s) * dilog_alternating(q);
            return 2.0 * tv + eta_integral_full(spec) + fourth;
        }
    }
    return 0.0;
}

namespace {

double gauss(double x, double amp, double x0, double sigma) {
    const double xi = (x - x0) / sigma;
    return amp * std::exp(-xi * xi);
}

double gauss_prime(double x, double amp, double x0, double sigma) {
    const double xi = (x - x0) / sigma;
    return amp * std::exp(-xi * xi) * (-2.0 * xi / sigma);
}

// -int_x^inf [G(y - beta + a) - G(y - beta)] dy for G in {U, V}; the
// anti-derivative contribution of translating the initial wave by a.
double translation_phi(double x, double a, double beta, double g_minus, double s_over_D,
                       double D_over_s) {
    const double t0 = log1p_exp(-s_over_D * (x - beta));
    const double ta = log1p_exp(-s_over_D * (x - beta + a));
    return g_minus * D_over_s * (t0 - ta);
}

}  // namespace

InitialData build_initial(const PerturbationSpec& p, const WaveParams& wp, double D,
                          const Grid& grid) {
    if (!(p.width > 0.0)) throw std::invalid_argument("perturbation width must be positive");
    if (!(p.beta > 0.0)) throw std::invalid_argument("beta must be positive");
    if (grid.nx < 4) throw std::invalid_argument("grid too small");

    // Bumps must be negligible at both domain ends.
    const double support_tol = 1e-12;
    for (double amp : {p.amp_phi, p.amp_psi}) {
        const double left = std::fabs(gauss(0.0, amp, p.center, p.width));
        const double right = std::fabs(gauss(grid.x_max, amp, p.center, p.width));
        if (left > support_tol || right > support_tol) {
            throw std::invalid_argument(
                "perturbation support violation: bump not negligible at a domain end");
        }
    }

    const double dx = grid.dx();
    const double s_over_D = wp.s / D;
    const double D_over_s = D / wp.s;
    const double a = p.initial_shift;

    InitialData out;
    out.x.resize(grid.nx);
    out.u0.resize(grid.nx);
    out.v0.resize(grid.nx);
    out.phi0.resize(grid.nx);
    out.psi0.resize(grid.nx);
    for (int i = 0; i < grid.nx; ++i) {
        const double x = i * dx;
        out.x[i] = x;
        const double z = x - p.beta + a;
        out.u0[i] = profile_U(z, wp, D) + gauss_prime(x, p.amp_phi, p.center, p.width);
        out.v0[i] = profile_V(z, wp, D) + gauss_prime(x, p.amp_psi, p.center, p.width);
        out.phi0[i] = gauss(x, p.amp_phi, p.center, p.width);
        out.psi0[i] = gauss(x, p.amp_psi, p.center, p.width);
        if (a != 0.0) {
            out.phi0[i] += translation_phi(x, a, p.beta, wp.u_minus, s_over_D, D_over_s);
            out.psi0[i] += translation_phi(x, a, p.beta, wp.v_minus, s_over_D, D_over_s);
        }
    }
    return out;
}

SmallnessReport smallness_report(const PerturbationSpec& p, const EtaSpec& eta,
                                 const WaveParams& wp, double D, const Grid& grid,
                                 double alpha, double epsilon0) {
    InitialData data = build_initial(p, wp, D, grid);
    const double dx = grid.dx();
    const int n = grid.nx;

    std::vector<double> w0(n), psi0x(n);
    for (int i = 0; i < n; ++i) {
        w0[i] = weight_w(data.x[i], 0.0, alpha, p.beta, wp, D);
        psi0x[i] = data.v0[i] - profile_V(data.x[i] - p.beta, wp, D);
    }

    SmallnessReport rep;
    rep.norm_phi0_2w0 = weighted_sobolev_norm(data.phi0, w0, 2, dx);
    rep.norm_psi0_2 = sobolev_norm(data.psi0, 2, dx);
    rep.norm_psi0x_1w0 = weighted_sobolev_norm(psi0x, w0, 1, dx);
    rep.norm_phi0_h1 = sobolev_norm(data.phi0, 1, dx);
    rep.delta = (eta.form == EtaSpec::Form::PowerLaw) ? eta.delta : 0.0;
    rep.beta_inv = 1.0 / p.beta;
    rep.hypothesis_sum =
        rep.norm_phi0_2w0 + rep.norm_psi0_2 + rep.norm_psi0x_1w0 + rep.delta + rep.beta_inv;
    rep.product_h1_beta = (rep.norm_phi0_h1 + rep.delta) * p.beta;
    rep.epsilon0 = epsilon0;
    rep.smallness_ok = rep.hypothesis_sum <= epsilon0;
    rep.product_ok = rep.product_h1_beta <= 1.0;
    rep.admissible = rep.smallness_ok && rep.product_ok;
    return rep;
}

Scenario make_default_scenario() {
    ModelParams mp(1.0, 4.0, 2.0, 1.0);
    WaveParams wp = select_wave(mp.chi, -1.0);
    Scenario sc{mp, wp, EtaSpec::constant(-1.0), PerturbationSpec{}, Grid{}, SolverConfig{}};
    sc.pert.beta = 10.0;
    return sc;
}

namespace {

using SectionMap = std::map<std::string, std::map<std::string, std::string>>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

SectionMap parse_sections(const std::string& text) {
    static const std::set<std::string> known_sections = {"model", "wave", "eta", "perturbation",
                                                         "grid"};
    SectionMap out;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw std::invalid_argument("scenario parse error at line " +
                                            std::to_string(lineno) + ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (!known_sections.count(section)) {
                throw std::invalid_argument("scenario parse error: unknown section [" + section +
                                            "]");
            }
            out[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || section.empty()) {
            throw std::invalid_argument("scenario parse error at line " + std::to_string(lineno) +
                                        ": expected key = value inside a section");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!out[section].emplace(key, value).second) {
            throw std::invalid_argument("scenario parse error: duplicate key '" + key + "' in [" +
                                        section + "]");
        }
    }
    return out;
}

class SectionReader {
public:
    SectionReader(const SectionMap& m, const std::string& section) : section_(section) {
        auto it = m.find(section);
        if (it != m.end()) kv_ = it->second;
    }

    double number(const std::string& key, double fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        seen_.insert(key);
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(it->second, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("scenario parse error: bad number for '" + key + "' in [" +
                                        section_ + "]");
        }
        if (pos != it->second.size()) {
            throw std::invalid_argument("scenario parse error: bad number for '" + key + "' in [" +
                                        section_ + "]");
        }
        return v;
    }

    std::string word(const std::string& key, const std::string& fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        seen_.insert(key);
        return it->second;
    }

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    void reject_unknown() const {
        for (const auto& [key, value] : kv_) {
            (void)value;
            if (!seen_.count(key)) {
                throw std::invalid_argument("scenario parse error: unknown key '" + key +
                                            "' in [" + section_ + "]");
            }
        }
    }

private:
    std::string section_;
    std::map<std::string, std::string> kv_;
    std::set<std::string> seen_;
};

}  // namespace

Scenario parse_scenario(const std::string& text) {
    const SectionMap sections = parse_sections(text);

    SectionReader model(sections, "model");
    const double D = model.number("D", 1.0);
    const double xi = model.number("xi", 4.0);
    const double mu = model.number("mu", 2.0);
    const double c_plus = model.number("c_plus", 1.0);
    const bool has_chi = model.has("chi");
    const double chi = model.number("chi", mu * xi);
    model.reject_unknown();

    ModelParams mp = has_chi ? ModelParams(D, xi, mu, chi, c_plus) : ModelParams(D, xi, mu, c_plus);

    SectionReader wave(sections, "wave");
    const double eta_minus = wave.number("eta_minus", -1.0);
    const double beta = wave.number("beta", 10.0);
    wave.reject_unknown();
    WaveParams wp = select_wave(mp.chi, eta_minus);

    SectionReader eta(sections, "eta");
    const std::string form = eta.word("form", "constant");
    const double delta = eta.number("delta", 0.0);
    const double k = eta.number("k", 3.0);
    eta.reject_unknown();
    EtaSpec eta_spec = EtaSpec::constant(eta_minus);
    if (form == "power-law") {
        eta_spec = EtaSpec::power_law(eta_minus, delta, k);
    } else if (form == "wave-flux") {
        eta_spec = EtaSpec::wave_flux(wp, mp.D, beta);
    } else if (form != "constant") {
        throw std::invalid_argument("scenario parse error: unknown eta form '" + form + "'");
    }

    SectionReader pert(sections, "perturbation");
    PerturbationSpec ps;
    ps.amp_phi = pert.number("amp_phi", 0.0);
    ps.amp_psi = pert.number("amp_psi", 0.0);
    ps.center = pert.number("center", 5.0);
    ps.width = pert.number("width", 1.0);
    ps.initial_shift = pert.number("initial_shift", 0.0);
    ps.beta = beta;
    pert.reject_unknown();

    SectionReader grid(sections, "grid");
    Grid g;
    g.x_max = grid.number("x_max", 80.0);
    const double dx = grid.number("dx", 0.05);
    g.t_max = grid.number("t_max", 15.0);
    g.dt = grid.number("dt", 0.0);
    if (!(dx > 0.0) || !(g.x_max > 0.0)) {
        throw std::invalid_argument("scenario parse error: dx and x_max must be positive");
    }
    g.nx = static_cast<int>(std::lround(g.x_max / dx)) + 1;
    SolverConfig cfg;
    cfg.cfl_safety = grid.number("cfl_safety", 0.4);
    cfg.c_floor = grid.number("c_floor", 0.0);
    const std::string scheme = grid.word("scheme", "rk2");
    if (scheme == "rk2") {
        cfg.scheme = SolverConfig::Scheme::Rk2;
    } else if (scheme == "euler") {
        cfg.scheme = SolverConfig::Scheme::Euler;
    } else {
        throw std::invalid_argument("scenario parse error: unknown scheme '" + scheme + "'");
    }
    grid.reject_unknown();
    if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0)) {
        throw std::invalid_argument("cfl_safety must be in (0, 1]");
    }

    return Scenario{mp, wp, eta_spec, ps, g, cfg};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace chemwave
