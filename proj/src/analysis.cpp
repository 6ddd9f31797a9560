#include "rfunc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rfunc/bounds.hpp"
#include "rfunc/constants.hpp"
#include "rfunc/polygamma.hpp"
#include "rfunc/rfunction.hpp"

namespace rfunc {
namespace {

void check_open(double x) {
    if (!(x > 0.0 && x < 0.5)) throw std::domain_error("analysis: requires 0 < x < 1/2");
}

void check_half_open(double x) {
    if (!(x > 0.0 && x <= 0.5)) throw std::domain_error("analysis: requires 0 < x <= 1/2");
}

double weight(double x) { return 1.0 + x * (1.0 - x); }

double S2(double x) {
    const auto& t = default_table();
    const double y2 = (1.0 - 2.0 * x) * (1.0 - 2.0 * x);
    return t.b[0] + (t.b[1] + t.b[2] * y2) * y2;
}

}  // namespace

double F_eval(int kind, double x) {
    check_half_open(x);
    switch (kind) {
        case 1:
            if (x < 0.05) return f_eval(x).value / B_fn(x) + 1.0;
            return weight(x) * R_eval(x).value / B_fn(x);
        case 2:
            if (x < 0.05) return f_eval(x).value / (weight(x) * B_fn(x));
            return R_eval(x).value / B_fn(x) - 1.0 / weight(x);
        case 3:
            return f_eval(x).value / weight(x);
        default:
            throw std::invalid_argument("F_eval: kind must be 1, 2 or 3");
    }
}

double H_eval(double x) {
    check_open(x);
    if (x <= 0.35) {
        const double fp = f_derivative(1, x);
        const double fv = f_eval(x).value;
        return (fp + fv * H1(x)) / (4.0 * (1.0 - 2.0 * x));
    }
    // sum d_n (1-2x)^{2n}
    const auto& t = default_table();
    const double y2 = (1.0 - 2.0 * x) * (1.0 - 2.0 * x);
    detail::Accumulator acc;
    double yp = 1.0;
    for (int n = 0; n <= t.N; ++n) {
        const double term = t.d[n] * yp;
        acc.add(term);
        if (n >= 2 && std::abs(term) < 1e-18 * std::abs(acc.total())) break;
        yp *= y2;
    }
    return acc.total();
}

double H3_eval(double x) {
    check_open(x);
    if (x <= 0.35) {
        const double y = 1.0 - 2.0 * x;
        return (5.0 - y * y) * H_eval(x) - f_eval(x).value;
    }
    // sum D_n (1-2x)^{2n}
    const auto& t = default_table();
    const double y2 = (1.0 - 2.0 * x) * (1.0 - 2.0 * x);
    detail::Accumulator acc;
    double yp = 1.0;
    for (int n = 0; n <= t.N; ++n) {
        const double term = t.D[n] * yp;
        acc.add(term);
        if (n >= 2 && std::abs(term) < 1e-18 * std::abs(acc.total())) break;
        yp *= y2;
    }
    return acc.total();
}

double h8_eval(double x) {
    check_half_open(x);
    return S2(x) * std::sin(M_PI * x) / M_PI;
}

double h10_eval(double x) {
    const auto& t = default_table();
    const double y = 1.0 - 2.0 * x;
    return t.b[1] + 2.0 * t.b[2] * y * y;
}

double h11_eval(double x) {
    return (1.0 - 2.0 * x) * std::tan(M_PI * x);
}

double h9_eval(double x) {
    check_open(x);
    return S2(x) - 4.0 * h10_eval(x) * h11_eval(x) / M_PI;
}

double F5_eval(double x) {
    check_half_open(x);
    const double b0 = default_table().b[0];
    return (b0 + (1.0 - b0) * (1.0 - 2.0 * x)) * std::sin(M_PI * x);
}

double F6_eval(double x) {
    check_open(x);
    const double b0 = default_table().b[0];
    return M_PI * (b0 + (1.0 - b0) * (1.0 - 2.0 * x)) - 2.0 * (1.0 - b0) * std::tan(M_PI * x);
}

double F7_eval(double x) {
    check_half_open(x);
    const auto& t = default_table();
    const double y = 1.0 - 2.0 * x;
    return (t.b[0] + t.b[1] * y * y) * std::sin(M_PI * x);
}

double F8_eval(double x) {
    check_open(x);
    const auto& t = default_table();
    const double y = 1.0 - 2.0 * x;
    return M_PI * (t.b[0] + t.b[1] * y * y) - 4.0 * t.b[1] * h11_eval(x);
}

double F9_F10_eval(int kind, double x) {
    const auto& pc = paper_constants();
    if (kind == 9) {
        check_half_open(x);
        // (F3 - 1)/x = (f0(x) - (1 - x)) / (1 + x(1-x))
        return (fn_ratio(0, x) - (1.0 - x)) / weight(x);
    }
    if (kind == 10) {
        check_open(x);
        // (F3 - rho)/(1-2x) = 4y (b0 + 5 g0(x)) / (5 (5 - y^2))
        const double y = 1.0 - 2.0 * x;
        return 4.0 * y * (default_table().b[0] + 5.0 * gn_ratio(0, x)) /
               (5.0 * (5.0 - y * y));
    }
    (void)pc;
    throw std::invalid_argument("F9_F10_eval: kind must be 9 or 10");
}

double root_target_eval(RootTarget t, double x, double level) {
    switch (t) {
        case RootTarget::H: return H_eval(x);
        case RootTarget::H3: return H3_eval(x);
        case RootTarget::h9: return h9_eval(x);
        case RootTarget::F6_shift: return F6_eval(x);
        case RootTarget::F8_shift: return F8_eval(x);
        case RootTarget::F5_level: return F5_eval(x) - level;
        case RootTarget::F7_level: return F7_eval(x) - level;
    }
    throw std::invalid_argument("root_target_eval: bad target");
}

RootBracket make_bracket(RootTarget t, double lo, double hi, double level) {
    if (!(lo < hi)) throw std::invalid_argument("make_bracket: requires lo < hi");
    RootBracket b{lo, hi, root_target_eval(t, lo, level), root_target_eval(t, hi, level), t,
                  level};
    if (!(b.f_lo * b.f_hi < 0.0))
        throw std::invalid_argument("make_bracket: no sign change over [lo, hi]");
    return b;
}

double find_root(const RootBracket& bracket, double tol) {
    if (!(tol >= 1e-13)) throw std::invalid_argument("find_root: tol must be >= 1e-13");
    double lo = bracket.lo, hi = bracket.hi;
    double flo = bracket.f_lo, fhi = bracket.f_hi;

    // bisect to a 1e-6 window
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double fm = root_target_eval(bracket.target, mid, bracket.level);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    // bracketed secant with bisection fallback
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = (fhi != flo) ? lo - flo * (hi - lo) / (fhi - flo) : 0.5 * (lo + hi);
        const double margin = 0.01 * (hi - lo);
        if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
        const double fm = root_target_eval(bracket.target, mid, bracket.level);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

DeltaEstimate delta_estimate(double tol) {
    // H(1/4) > 0 (= 0.0957) and H(0.49) < 0; verified at bracket build time.
    const RootBracket br = make_bracket(RootTarget::H, 0.26, 0.49);
    const double x1 = find_root(br, tol);
    DeltaEstimate est{x1, F_eval(1, x1), std::abs(H_eval(x1))};
    const auto& pc = paper_constants();
    if (!(x1 > 0.25 && x1 < 0.5))
        throw std::runtime_error("delta_estimate: x1 outside (1/4, 1/2)");
    if (!(est.delta > pc.delta_lo && est.delta < pc.delta_hi))
        throw std::runtime_error("delta_estimate: delta outside the proven bracket");
    return est;
}

CmReport cm_probe(CmTarget target, int max_order, int grid_size) {
    if (max_order < 0 || max_order > 8)
        throw std::invalid_argument("cm_probe: max_order must be in 0..8");
    if (grid_size < 16) throw std::invalid_argument("cm_probe: grid too small");

    // Evaluator, expected sign pattern, domain, and lowest meaningful order.
    double lo = 1e-9, hi = 0.5;
    int first_order = 0;
    bool g_pattern = false;  // sign (-1)^{m+1} instead of (-1)^m
    CmReport rep;
    switch (target.kind) {
        case CmTarget::F_cm:
            rep.target = "F";
            break;
        case CmTarget::F3:
            rep.target = "F3";
            break;
        case CmTarget::g:
            rep.target = "g" + std::to_string(target.n);
            hi = 0.5 - 1e-9;
            first_order = 1;  // g_n itself may be negative; the pattern is on derivatives
            g_pattern = true;
            break;
        case CmTarget::H3:
            rep.target = "H3";
            hi = 0.5 - 1e-9;
            first_order = 1;  // H3(1/2-) = D_0 < 0; the pattern is on derivatives
            break;
    }
    auto eval = [&](double x) {
        switch (target.kind) {
            case CmTarget::F_cm: return F_cm(x);
            case CmTarget::F3: return F_eval(3, x);
            case CmTarget::g: return gn_ratio(target.n, x);
            case CmTarget::H3: return H3_eval(x);
        }
        return 0.0;
    };

    for (int m = first_order; m <= max_order; ++m) {
        // spacing: h^m >= 1e-10, but no wider than the window allows
        double h = (m == 0) ? (hi - lo) / grid_size : std::pow(1e-10, 1.0 / m);
        h = std::min(h, (hi - lo) / (m + 1.0));
        const double span = hi - lo - m * h;
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid_size; ++i) {
            const double x0 = lo + span * i / (grid_size - 1.0);
            // forward difference of order m
            double diff = 0.0;
            double binom = 1.0;
            for (int j = 0; j <= m; ++j) {
                const double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
                diff += sign * binom * eval(std::min(x0 + j * h, hi));
                binom = binom * (m - j) / (j + 1.0);
            }
            const double s = g_pattern ? ((m % 2 == 1) ? 1.0 : -1.0)
                                       : ((m % 2 == 0) ? 1.0 : -1.0);
            worst = std::min(worst, s * diff);
        }
        rep.orders.push_back({m, h, worst});
    }
    return rep;
}

Crossings crossings(double delta) {
    const auto& pc = paper_constants();
    if (!(delta > pc.delta_lo && delta <= pc.delta_hi))
        throw std::invalid_argument("crossings: delta outside the proven bracket");
    const double level = M_PI * (delta - 1.0);
    const double eps_lo = 1e-9, eps_hi = 0.5 - 1e-9;

    Crossings c{};
    c.x5 = find_root(make_bracket(RootTarget::F6_shift, 0.01, eps_hi));
    c.x6 = find_root(make_bracket(RootTarget::F5_level, eps_lo, c.x5, level), 1e-13);
    c.x7 = find_root(make_bracket(RootTarget::F5_level, c.x5, eps_hi, level), 1e-13);
    c.x8 = find_root(make_bracket(RootTarget::F8_shift, 0.01, eps_hi));
    c.x9 = find_root(make_bracket(RootTarget::F7_level, eps_lo, c.x8, level), 1e-13);
    c.x10 = find_root(make_bracket(RootTarget::F7_level, c.x8, eps_hi, level), 1e-13);
    return c;
}

}  // namespace rfunc
