#pragma once

namespace chemwave {

/// Truncated half-line grid and time horizon. dt == 0 means "derive the
/// step from the CFL bound at run start" (dt = t_max / ceil(t_max / bound),
/// which lands the final step exactly on t_max).
struct Grid {
    double x_max = 80.0;
    int nx = 1601;
    double t_max = 15.0;
    double dt = 0.0;

    double dx() const { return x_max / (nx - 1); }
};

struct SolverConfig {
    enum class Scheme { Rk2, Euler };
    enum class RightBc { DirichletFarField };

    Scheme scheme = Scheme::Rk2;
    double cfl_safety = 0.4;            // in (0, 1]
    RightBc right_bc = RightBc::DirichletFarField;
    double c_floor = 0.0;               // original-system solver; 0 = 1e-12 * c_plus
};

}  // namespace chemwave
