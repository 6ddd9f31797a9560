#include "rfunc/rfunction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rfunc/constants.hpp"
#include "rfunc/dirichlet.hpp"
#include "rfunc/polygamma.hpp"

namespace rfunc {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kOddCacheMax = 90;

struct SeriesTables {
    std::vector<double> zeta_odd;    // zeta(2n+1), n = 1..kOddCacheMax
    std::vector<double> lambda_odd;  // lambda(2n+1)
    int zeta_flat;    // first n with zeta(2n+1) == 1.0 in binary64
    int lambda_flat;  // first n with lambda(2n+1) == 1.0
};

const SeriesTables& series_tables() {
    static const SeriesTables t = [] {
        SeriesTables s;
        s.zeta_odd.resize(kOddCacheMax + 1);
        s.lambda_odd.resize(kOddCacheMax + 1);
        s.zeta_flat = s.lambda_flat = kOddCacheMax;
        for (int n = 1; n <= kOddCacheMax; ++n) {
            s.zeta_odd[n] = 1.0 + zeta_m1(2.0 * n + 1.0).value;
            s.lambda_odd[n] = 1.0 + lambda_m1(2.0 * n + 1.0).value;
            if (s.zeta_odd[n] == 1.0 && s.zeta_flat == kOddCacheMax) s.zeta_flat = n;
            if (s.lambda_odd[n] == 1.0 && s.lambda_flat == kOddCacheMax) s.lambda_flat = n;
        }
        return s;
    }();
    return t;
}

RFunctionValue R_origin(double x) {
    // 1/x + 2 sum_{n>=1} zeta(2n+1) x^{2n}; once zeta(2n+1) is 1.0 to machine
    // precision the remainder is exactly geometric and closes in closed form.
    const auto& t = series_tables();
    const double x2 = x * x;
    detail::Accumulator acc;
    acc.add(1.0 / x);
    double xp = 1.0;
    int n = 1;
    for (; n <= t.zeta_flat; ++n) {
        xp *= x2;
        acc.add(2.0 * t.zeta_odd[n] * xp);
    }
    const double geo = 2.0 * xp * x2 / (1.0 - x2);
    acc.add(geo);
    const double v = acc.total();
    // omitted: 2 sum_{n>flat} (zeta(2n+1)-1) x^{2n} <= eps * geo
    const double err = kEps * std::abs(geo) + 4.0 * kEps * std::abs(v);
    return {v, EvalMethod::origin_series, err};
}

RFunctionValue R_center(double x) {
    const auto& t = series_tables();
    const double y = 1.0 - 2.0 * x;
    const double y2 = y * y;
    detail::Accumulator acc;
    acc.add(std::log(16.0));
    double yp = 1.0;
    int n = 1;
    for (; n <= t.lambda_flat; ++n) {
        yp *= y2;
        acc.add(4.0 * t.lambda_odd[n] * yp);
    }
    double geo = 0.0;
    if (y2 > 0.0) {
        geo = 4.0 * yp * y2 / (1.0 - y2);
        acc.add(geo);
    }
    const double v = acc.total();
    const double err = kEps * std::abs(geo) + 4.0 * kEps * std::abs(v);
    return {v, EvalMethod::center_series, err};
}

RFunctionValue R_direct(double x) {
    const double px = psi(x), p1x = psi(1.0 - x);
    const double g = paper_constants().gamma;
    const double v = -2.0 * g - px - p1x;
    const double err = 4.0 * kEps * (std::abs(px) + std::abs(p1x) + 2.0 * g);
    return {v, EvalMethod::direct, err};
}

// f origin series sum a_n x^n with tail bound from the verified decay ratio.
RFunctionValue f_origin(double x) {
    const auto& t = default_table();
    const int M = static_cast<int>(t.a_ext.size()) - 1;
    detail::Accumulator acc;
    double xp = 1.0;
    double term = 0.0;
    int n = 0;
    for (; n <= M; ++n) {
        term = t.a_ext[n] * xp;
        acc.add(term);
        if (n >= 4 && std::abs(term) < 1e-20 * std::abs(acc.total())) break;
        xp *= x;
    }
    const double q = t.ratio_a * x;  // next-term ratio bound beyond n >= 2
    const double tail = std::abs(term) * q / (1.0 - q);
    const double v = acc.total();
    return {v, EvalMethod::origin_series, tail + 4.0 * kEps * std::abs(v) + 2.0 * kEps};
}

RFunctionValue f_center(double x) {
    const auto& t = default_table();
    const int M = static_cast<int>(t.b_ext.size()) - 1;
    const double y = 1.0 - 2.0 * x;
    const double y2 = y * y;
    detail::Accumulator acc;
    double yp = 1.0;
    double term = 0.0;
    int n = 0;
    for (; n <= M; ++n) {
        term = t.b_ext[n] * yp;
        acc.add(term);
        if (n >= 2 && std::abs(term) < 1e-20 * std::abs(acc.total())) break;
        yp *= y2;
    }
    const double q = t.ratio_b * y2;
    const double tail = std::abs(term) * q / (1.0 - q);
    const double v = acc.total();
    return {v, EvalMethod::center_series, tail + 4.0 * kEps * std::abs(v) + 2.0 * kEps};
}

RFunctionValue f_direct(double x) {
    const RFunctionValue r = R_direct(x);
    const double w = 1.0 + x * (1.0 - x);
    const double b = B_fn(x);
    const double v = w * r.value - b;
    const double err = w * r.est_abs_err + 2.0 * kEps * (w * std::abs(r.value) + b);
    return {v, EvalMethod::direct, err};
}

void check_order(int n) {
    if (n < 1 || n > 8) throw std::domain_error("derivative order must be in 1..8");
}

}  // namespace

RFunctionValue R_eval(double x, EvalMethod method) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("R_eval: requires 0 < x < 1");
    if (x > 0.5) x = ReflectionPoint(x).one_minus_x;  // symmetry fold
    switch (method) {
        case EvalMethod::direct: return R_direct(x);
        case EvalMethod::origin_series: return R_origin(x);
        case EvalMethod::center_series: return R_center(x);
        case EvalMethod::automatic:
            if (x <= 0.15) return R_origin(x);
            if (x >= 0.35) return R_center(x);
            return R_direct(x);
    }
    throw std::invalid_argument("R_eval: bad method");
}

double R_derivative(int n, double x) {
    check_order(n);
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("R_derivative: requires 0 < x < 1");
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    return sign * polygamma(n, 1.0 - x).value - polygamma(n, x).value;
}

RFunctionValue f_eval(double x, EvalMethod method) {
    if (!(x > 0.0 && x <= 0.5)) throw std::domain_error("f_eval: requires 0 < x <= 1/2");
    switch (method) {
        case EvalMethod::direct: return f_direct(x);
        case EvalMethod::origin_series: return f_origin(x);
        case EvalMethod::center_series: return f_center(x);
        case EvalMethod::automatic:
            if (x <= 0.15) return f_origin(x);
            if (x >= 0.35) return f_center(x);
            return f_direct(x);
    }
    throw std::invalid_argument("f_eval: bad method");
}

double f_derivative(int n, double x) {
    check_order(n);
    if (!(x > 0.0 && x <= 0.5)) throw std::domain_error("f_derivative: requires 0 < x <= 1/2");
    const auto& t = default_table();
    const int M = static_cast<int>(t.b_ext.size()) - 1;
    const double y = 1.0 - 2.0 * x;
    const double y2 = y * y;
    detail::Accumulator acc;
    if (n % 2 == 0) {
        // f^(2p)(x) = 2^{2p} sum_{k>=0} (2p+2k)!/(2k)! b_{p+k} y^{2k}
        const int p = n / 2;
        double pref = 1.0;
        for (int i = 1; i <= 2 * p; ++i) pref *= i;  // (2p)!
        double yp = 1.0;
        for (int k = 0; p + k <= M; ++k) {
            const double term = pref * t.b_ext[p + k] * yp;
            acc.add(term);
            if (k >= 2 && std::abs(term) < 1e-19 * std::abs(acc.total())) break;
            pref *= static_cast<double>(2 * k + 2 * p + 1) * (2 * k + 2 * p + 2) /
                    ((2 * k + 1) * (2 * k + 2));
            yp *= y2;
        }
        return std::ldexp(acc.total(), 2 * p);
    }
    // f^(2p-1)(x) = -2^{2p-1} sum_{k>=1} (2p+2k-2)!/(2k-1)! b_{k+p-1} y^{2k-1}
    const int p = (n + 1) / 2;
    if (y == 0.0) return 0.0;
    double pref = 1.0;
    for (int i = 1; i <= 2 * p; ++i) pref *= i;  // k = 1 factor (2p)!/1!
    double yp = y;
    for (int k = 1; k + p - 1 <= M; ++k) {
        const double term = pref * t.b_ext[k + p - 1] * yp;
        acc.add(term);
        if (k >= 3 && std::abs(term) < 1e-19 * std::abs(acc.total())) break;
        pref *= static_cast<double>(2 * k + 2 * p) * (2 * k + 2 * p - 1) /
                ((2 * k + 1) * (2 * k));
        yp *= y2;
    }
    return -std::ldexp(acc.total(), 2 * p - 1);
}

double F_cm(double x) {
    if (!(x > 0.0 && x <= 0.5)) throw std::domain_error("F_cm: requires 0 < x <= 1/2");
    const auto& t = default_table();
    const int M = static_cast<int>(t.b_ext.size()) - 1;
    const double y2 = (1.0 - 2.0 * x) * (1.0 - 2.0 * x);
    detail::Accumulator acc;
    double yp = y2 * y2;
    for (int k = 2; k <= M; ++k) {
        const double term = t.b_ext[k] * yp;
        acc.add(term);
        if (std::abs(term) < 1e-22 * std::abs(acc.total())) break;
        yp *= y2;
    }
    return -acc.total();
}

double fn_ratio(int n, double x) {
    if (n < 0) throw std::domain_error("fn_ratio: requires n >= 0");
    if (!(x > 0.0 && x <= 0.5)) throw std::domain_error("fn_ratio: requires 0 < x <= 1/2");
    const auto& t = default_table();
    if (n > t.N) throw std::out_of_range("fn_ratio: n beyond table");
    const int M = static_cast<int>(t.a_ext.size()) - 1;
    detail::Accumulator acc;
    double xp = 1.0;
    for (int k = 0; n + k + 1 <= M; ++k) {
        const double term = t.a_ext[n + k + 1] * xp;
        acc.add(term);
        if (k >= 3 && std::abs(term) < 1e-19 * std::abs(acc.total())) break;
        xp *= x;
    }
    return acc.total();
}

double gn_ratio(int n, double x) {
    if (n < 0) throw std::domain_error("gn_ratio: requires n >= 0");
    if (!(x > 0.0 && x < 0.5)) throw std::domain_error("gn_ratio: requires 0 < x < 1/2");
    return gn_derivative(n, 0, x);
}

double gn_derivative(int n, int m, double x) {
    if (n < 0) throw std::domain_error("gn_derivative: requires n >= 0");
    if (m < 0 || m > 8) throw std::domain_error("gn_derivative: order must be in 0..8");
    if (!(x > 0.0 && x < 0.5)) throw std::domain_error("gn_derivative: requires 0 < x < 1/2");
    const auto& t = default_table();
    if (n > t.N) throw std::out_of_range("gn_derivative: n beyond table");
    const int M = static_cast<int>(t.b_ext.size()) - 1;
    const double y = 1.0 - 2.0 * x;
    const double y2 = y * y;
    detail::Accumulator acc;
    if (m % 2 == 0) {
        // g_n^(2q)(x) = 2^{2q} sum_{k>=0} (2q+2k)!/(2k)! b_{n+q+k+1} y^{2k}
        const int q = m / 2;
        double pref = 1.0;
        for (int i = 1; i <= 2 * q; ++i) pref *= i;
        double yp = 1.0;
        for (int k = 0; n + q + k + 1 <= M; ++k) {
            const double term = pref * t.b_ext[n + q + k + 1] * yp;
            acc.add(term);
            if (k >= 2 && std::abs(term) < 1e-19 * std::abs(acc.total())) break;
            pref *= static_cast<double>(2 * k + 2 * q + 1) * (2 * k + 2 * q + 2) /
                    ((2 * k + 1) * (2 * k + 2));
            yp *= y2;
        }
        return std::ldexp(acc.total(), 2 * q);
    }
    // g_n^(2q+1)(x) = -2^{2q+1} sum_{k>=1} (2q+2k)!/(2k-1)! b_{n+q+k+1} y^{2k-1}
    const int q = (m - 1) / 2;
    double pref = 1.0;
    for (int i = 2; i <= 2 * q + 2; ++i) pref *= i;  // k = 1 factor (2q+2)!/1!
    double yp = y;
    for (int k = 1; n + q + k + 1 <= M; ++k) {
        const double term = pref * t.b_ext[n + q + k + 1] * yp;
        acc.add(term);
        if (k >= 3 && std::abs(term) < 1e-19 * std::abs(acc.total())) break;
        pref *= static_cast<double>(2 * k + 2 * q + 2) * (2 * k + 2 * q + 1) /
                ((2 * k + 1) * (2 * k));
        yp *= y2;
    }
    return -std::ldexp(acc.total(), 2 * q + 1);
}

}  // namespace rfunc
