#include "rfunc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rfunc/coefficients.hpp"
#include "rfunc/constants.hpp"
#include "rfunc/polygamma.hpp"

namespace rfunc {
namespace {

void check_domain(double x) {
    if (!(x > 0.0 && x <= 0.5)) throw std::domain_error("bounds: requires 0 < x <= 1/2");
}

// R_m(x) = sum_{k<=m} a_k x^k (Horner).
double a_partial(const CoefficientTable& t, int m, double x) {
    if (m > t.N) throw std::out_of_range("bounds: origin index beyond table");
    double s = t.a[m];
    for (int k = m - 1; k >= 0; --k) s = s * x + t.a[k];
    return s;
}

// S_m(x) = sum_{k<=m} b_k (1-2x)^{2k}.
double b_partial(const CoefficientTable& t, int m, double x) {
    if (m > t.N) throw std::out_of_range("bounds: center index beyond table");
    const double y2 = (1.0 - 2.0 * x) * (1.0 - 2.0 * x);
    double s = t.b[m];
    for (int k = m - 1; k >= 0; --k) s = s * y2 + t.b[k];
    return s;
}

double weight(double x) { return 1.0 + x * (1.0 - x); }

void check_delta(double delta) {
    const auto& pc = paper_constants();
    if (!(delta >= pc.delta_lo && delta <= pc.delta_hi))
        throw std::invalid_argument("bounds: delta outside the proven bracket");
}

}  // namespace

BoundPair bound_sine_poly(double x) {
    check_domain(x);
    const auto& t = default_table();
    const double b0 = t.b[0], b1 = t.b[1];
    const double y = 1.0 - 2.0 * x;
    const double P = std::max(0.0, 1.0 - b0 - b1 + b1 * y);
    const double Q = std::min(1.0 - b0, b1 * y);
    const double B = B_fn(x), w = weight(x);
    return {(b0 + y * P + B) / w, (b0 + y * Q + B) / w, BoundMethod::sine_poly, 0};
}

BoundPair bound_origin_poly(int n, double x) {
    if (n < 1) throw std::domain_error("bound_origin_poly: requires n >= 1");
    check_domain(x);
    const auto& t = default_table();
    const double B = B_fn(x), w = weight(x);
    const double lo =
        (B + a_partial(t, 2 * n + 2, x) + t.A[2 * n + 2] * std::pow(x, 2 * n + 3)) / w;
    const double hi =
        (B + a_partial(t, 2 * n + 1, x) + t.A[2 * n + 1] * std::pow(x, 2 * n + 2)) / w;
    return {lo, hi, BoundMethod::origin_poly, n};
}

BoundPair bound_center_poly(int n, double x) {
    if (n < 0) throw std::domain_error("bound_center_poly: requires n >= 0");
    check_domain(x);
    const auto& t = default_table();
    const double B = B_fn(x), w = weight(x);
    const double y = 1.0 - 2.0 * x;
    const double S = b_partial(t, n + 1, x);
    const double lo = (B + S + t.c[n + 1] * std::pow(y, 2 * n + 3)) / w;
    const double hi = (B + S) / w;
    return {lo, hi, BoundMethod::center_poly, n};
}

BoundPair bound_multiplicative(double x, double delta) {
    check_domain(x);
    check_delta(delta);
    const double base = B_fn(x) / weight(x);
    return {base, delta * base, BoundMethod::multiplicative, 0};
}

BoundPair bound_additive(double x) {
    check_domain(x);
    const auto& pc = paper_constants();
    const double base = B_fn(x) / weight(x);
    const double y = 1.0 - 2.0 * x;
    return {pc.rho + base, pc.rho + (1.0 - pc.rho) * y + base, BoundMethod::additive, 0};
}

BoundPair bound_envelope(int n, double x, double delta) {
    if (n < 1) throw std::domain_error("bound_envelope: requires n >= 1");
    check_domain(x);
    check_delta(delta);
    const auto& t = default_table();
    const double B = B_fn(x), w = weight(x);
    const double y = 1.0 - 2.0 * x;
    const double b0 = t.b[0], b1 = t.b[1];

    const double P = std::max(0.0, 1.0 - b0 - b1 + b1 * y);
    const double Q = std::min(1.0 - b0, b1 * y);
    const double S = b_partial(t, n + 1, x);

    const double d1 = std::max({b0 + y * P,
                                a_partial(t, 2 * n + 2, x) + t.A[2 * n + 2] * std::pow(x, 2 * n + 3),
                                S + t.c[n + 1] * std::pow(y, 2 * n + 3)});
    const double d2 = std::min({b0 + y * Q,
                                a_partial(t, 2 * n + 1, x) + t.A[2 * n + 1] * std::pow(x, 2 * n + 2),
                                S, (delta - 1.0) * B});
    return {(B + d1) / w, (B + d2) / w, BoundMethod::envelope, n};
}

}  // namespace rfunc
