#include "chemwave/numerics.hpp"

#include <cmath>
#include <limits>

namespace chemwave {

double trapezoid(std::span<const double> f, double dx) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    double sum = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < n; ++i) sum += f[i];
    return sum * dx;
}

double simpson(std::span<const double> f, double dx) {
    const std::size_t n = f.size();
    if (n < 3) return trapezoid(f, dx);

    std::size_t intervals = n - 1;
    std::size_t m = n;  // points covered by the 1/3 rule
    double tail38 = 0.0;
    if (intervals % 2 != 0) {
        // 3/8 rule on the last three intervals keeps global O(dx^4)
        if (intervals >= 3) {
            const std::size_t j = n - 4;
            tail38 = 3.0 * dx / 8.0 * (f[j] + 3.0 * f[j + 1] + 3.0 * f[j + 2] + f[j + 3]);
            m = n - 3;
        } else {
            return trapezoid(f, dx);
        }
    }
    double sum = f[0] + f[m - 1];
    for (std::size_t i = 1; i + 1 < m; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
    return sum * dx / 3.0 + tail38;
}

bool within_ulps(double a, double b, int n) {
    if (a == b) return true;
    if (!std::isfinite(a) || !std::isfinite(b)) return false;
    const double scale = std::fmax(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= n * std::numeric_limits<double>::epsilon() * scale;
}

double logistic_tail(double a) {
    if (a > 700.0) return 0.0;
    if (a < -700.0) return 1.0;
    if (a >= 0.0) {
        const double e = std::exp(-a);
        return e / (1.0 + e);
    }
    return 1.0 / (std::exp(a) + 1.0);
}

double log1p_exp(double a) {
    if (a > 0.0) return a + std::log1p(std::exp(-a));
    return std::log1p(std::exp(a));
}

}  // namespace chemwave
