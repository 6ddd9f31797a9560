#ifndef RFUNC_DIRICHLET_HPP
#define RFUNC_DIRICHLET_HPP

#include <optional>

#include "rfunc/series.hpp"

namespace rfunc {

/// Default absolute accuracy for internally composed sums.
inline constexpr double kDefaultTarget = 1e-14;

/// Riemann zeta, s > 1.
SeriesValue zeta(double s, double target_abs_err = kDefaultTarget);

/// zeta(s) - 1, relative-accurate (sums from k = 2). Needed wherever zeta
/// values indistinguishable from 1 in binary64 must still be compared.
SeriesValue zeta_m1(double s, double target_rel_err = 4e-15);

/// Dirichlet eta via the identity eta(s) = (1 - 2^{1-s}) zeta(s), s > 1.
double eta(double s);

/// eta(s) - 1, relative-accurate (alternating tail from k = 2).
SeriesValue eta_m1(double s, double target_rel_err = 4e-15);

/// Dirichlet lambda(x) = sum_{k>=0} (2k+1)^-x, x > 1. Integer arguments are
/// cross-checked against lambda(n) = (1 - 2^-n) zeta(n).
SeriesValue lambda_fn(double x, double target_abs_err = kDefaultTarget);

/// lambda(x) - 1, relative-accurate (sums from k = 1).
SeriesValue lambda_m1(double x, double target_rel_err = 4e-15);

/// Dirichlet beta(x) = sum_{k>=0} (-1)^k (2k+1)^-x, x >= 1, summed in
/// positive decreasing pairs.
SeriesValue beta_fn(double x, double target_abs_err = kDefaultTarget);

enum class DirichletKind { lambda, beta };

/// Term-wise derivative: lambda'(x) = -sum log(2k+1)/(2k+1)^x (x > 1) or
/// beta'(x) = sum (-1)^{k+1} log(2k+1)/(2k+1)^x (x >= 1).
SeriesValue dirichlet_derivative(DirichletKind kind, double x,
                                 double target_abs_err = kDefaultTarget);

/// The auxiliary functions phi_1..phi_6:
///   phi_1(x) = lambda(x) - lambda(x+1)                  x > 1
///   phi_2(x) = lambda(x+c)/lambda(x), c >= C1           x >= 2 (c required)
///   phi_3(x) = 5 lambda(x+1) - lambda(x-1) - 4 beta(x+1)  x >= 3
///   phi_4(x) = (x - 3 + 1/log 5) phi_3(x)               x >= 3
///   phi_5(x) = x phi_3(x)                               x >= 3
///   phi_6(x) = phi_5(x+2) - phi_5(x)                    x >= 3
double phi(int k, double x, std::optional<double> c = std::nullopt);

/// phi_3 through its cancellation-free series
/// -4 sum_{k>=2} [k(k+1) - 1 + (-1)^k] (2k+1)^{-x-1}; relative-accurate for
/// every x >= 3, which is what makes the far coefficients b_n usable.
double phi3_series(double x);

}  // namespace rfunc

#endif
