#pragma once

#include <span>

namespace chemwave {

/// Composite Simpson rule on a uniform grid. Handles an odd interval count
/// by finishing with the 3/8 rule on the last three intervals; degenerates
/// to the trapezoid rule below three points.
double simpson(std::span<const double> f, double dx);

double trapezoid(std::span<const double> f, double dx);

/// |a - b| <= n * eps * max(|a|, |b|), i.e. closeness in units of the
/// relative machine epsilon.
bool within_ulps(double a, double b, int n);

/// 1 / (e^a + 1), evaluated without overflow for any finite a. Saturates
/// exactly to 0 for a > 700 and to 1 for a < -700.
double logistic_tail(double a);

/// log(1 + e^a) without overflow: a + log1p(e^-a) for a > 0.
double log1p_exp(double a);

}  // namespace chemwave
