#ifndef RFUNC_RFUNCTION_HPP
#define RFUNC_RFUNCTION_HPP

#include "rfunc/coefficients.hpp"

namespace rfunc {

enum class EvalMethod { automatic, direct, origin_series, center_series };

struct RFunctionValue {
    double value = 0.0;
    EvalMethod method = EvalMethod::direct;  // the method actually used
    double est_abs_err = 0.0;                // rigorous tail bound for series methods
};

/// R(x) = -2 gamma - psi(x) - psi(1-x) on (0,1); arguments above 1/2 are
/// folded by symmetry. automatic picks: origin series on (0, 0.15],
/// center series on [0.35, 0.5], direct in between (the direct form loses
/// ~all digits as x -> 0 where R, B ~ 1/x).
RFunctionValue R_eval(double x, EvalMethod method = EvalMethod::automatic);

/// R^(n)(x) = (-1)^{n+1} psi^(n)(1-x) - psi^(n)(x), 1 <= n <= 8.
double R_derivative(int n, double x);

/// f(x) = [1 + x(1-x)] R(x) - B(x) on (0, 1/2]; series methods use the
/// cached a_n / b_n coefficients.
RFunctionValue f_eval(double x, EvalMethod method = EvalMethod::automatic);

/// f^(n)(x), 1 <= n <= 8, via the central-coefficient derivative series;
/// exactly 0 at x = 1/2 for odd n.
double f_derivative(int n, double x);

/// F(x) = b0 + b1 (1-2x)^2 + B(x) - [1+x(1-x)] R(x), evaluated through its
/// cancellation-free series -sum_{k>=2} b_k (1-2x)^{2k}.
double F_cm(double x);

/// f_n(x) = (f(x) - sum_{k<=n} a_k x^k) / x^{n+1} via the shifted series
/// sum_k a_{n+k+1} x^k (the raw quotient is 0/0 at both ends).
double fn_ratio(int n, double x);

/// g_n(x) = (f(x) - sum_{k<=n} b_k (1-2x)^{2k}) / (1-2x)^{2(n+1)} via
/// sum_k b_{n+k+1} (1-2x)^{2k}, on (0, 1/2).
double gn_ratio(int n, double x);

/// g_n^(m)(x) via the term-wise differentiated series, 0 <= m <= 8.
double gn_derivative(int n, int m, double x);

}  // namespace rfunc

#endif
