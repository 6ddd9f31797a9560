#ifndef RFUNC_POLYGAMMA_HPP
#define RFUNC_POLYGAMMA_HPP

#include "rfunc/series.hpp"

namespace rfunc {

/// An argument in (0,1) paired with its exactly tracked complement.
struct ReflectionPoint {
    double x;
    double one_minus_x;

    explicit ReflectionPoint(double x_);
};

/// Digamma, x > 0. Recurrence shift to x >= 10, then the 8-term Bernoulli
/// asymptotic expansion.
double psi(double x);

/// psi^(n)(x) = (-1)^{n+1} n! sum_{k>=0} (k+x)^{-n-1},  n >= 1, x > 0.
/// target_abs_err = 0 asks for full relative accuracy (~4e-15).
SeriesValue polygamma(int n, double x, double target_abs_err = 0.0);

/// B(x) = pi / sin(pi x) on (0,1), reduced so that B(x) = B(1-x) whenever the
/// complement is exactly representable.
double B_fn(double x);

/// H1(x) = pi cot(pi x) = psi(1-x) - psi(x) on (0,1), via the cotangent form;
/// exactly 0 at x = 1/2.
double H1(double x);

}  // namespace rfunc

#endif
