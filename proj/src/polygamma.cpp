#include "rfunc/polygamma.hpp"

#include <cmath>
#include <stdexcept>

namespace rfunc {
namespace {

// B_{2j}/(2j) for the digamma asymptotic series, j = 1..8.
constexpr double kPsiAsym[] = {
    8.3333333333333333e-02,   // 1/12
    -8.3333333333333333e-03,  // -1/120
    3.9682539682539683e-03,   // 1/252
    -4.1666666666666667e-03,  // -1/240
    7.5757575757575758e-03,   // 1/132
    -2.1092796092796093e-02,  // -691/32760
    8.3333333333333333e-02,   // 1/12
    -4.4325980392156863e-01,  // -3617/8160
};

}  // namespace

ReflectionPoint::ReflectionPoint(double x_) : x(x_), one_minus_x(1.0 - x_) {
    if (!(x_ > 0.0 && x_ < 1.0))
        throw std::domain_error("ReflectionPoint: requires 0 < x < 1");
}

double psi(double x) {
    if (!(x > 0.0)) throw std::domain_error("psi: requires x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ log x - 1/(2x) - sum_j B_{2j}/(2j) x^{-2j}
    const double z = 1.0 / (x * x);
    double s = 0.0;
    for (int j = 7; j >= 0; --j) s = (s + kPsiAsym[j]) * z;
    return acc + std::log(x) - 0.5 / x - s;
}

SeriesValue polygamma(int n, double x, double target_abs_err) {
    if (n < 1) throw std::domain_error("polygamma: requires n >= 1");
    if (!(x > 0.0)) throw std::domain_error("polygamma: requires x > 0");
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    const double inner_abs = target_abs_err > 0.0 ? target_abs_err / fact : 1e-300;
    SeriesValue inner = detail::em_sum(detail::PowerTerm{1.0, x, n + 1.0}, inner_abs, 0, 4e-15);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return {sign * fact * inner.value, fact * inner.tail_bound, inner.terms_used};
}

double B_fn(double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("B_fn: requires 0 < x < 1");
    const double xr = x > 0.5 ? 1.0 - x : x;
    return M_PI / std::sin(M_PI * xr);
}

double H1(double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("H1: requires 0 < x < 1");
    // Accuracy degrades below ~1e-8 where cot(pi x) ~ 1/(pi x) dominates.
    if (x <= 0.25) return M_PI / std::tan(M_PI * x);
    return M_PI * std::tan(M_PI * (0.5 - x));
}

}  // namespace rfunc
