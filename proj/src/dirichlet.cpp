#include "rfunc/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rfunc {
namespace {

using detail::em_sum;
using detail::LogPowerPairTerm;
using detail::LogPowerTerm;
using detail::PowerPairTerm;
using detail::PowerTerm;

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_integer(double x) { return x == std::floor(x) && std::abs(x) < 1e15; }

}  // namespace

SeriesValue zeta(double s, double target_abs_err) {
    if (!(s > 1.0)) throw std::domain_error("zeta: requires s > 1");
    // sum_{k>=1} k^-s
    return em_sum(PowerTerm{1.0, 1.0, s}, target_abs_err);
}

SeriesValue zeta_m1(double s, double target_rel_err) {
    if (!(s > 1.0)) throw std::domain_error("zeta_m1: requires s > 1");
    // sum_{k>=2} k^-s
    return em_sum(PowerTerm{1.0, 2.0, s}, 1e-300, 0, target_rel_err);
}

double eta(double s) {
    if (!(s > 1.0)) throw std::domain_error("eta: requires s > 1");
    return (1.0 - std::pow(2.0, 1.0 - s)) * zeta(s).value;
}

SeriesValue eta_m1(double s, double target_rel_err) {
    if (!(s > 1.0)) throw std::domain_error("eta_m1: requires s > 1");
    // eta - 1 = -sum_{j>=0} [(2j+2)^-s - (2j+3)^-s]
    SeriesValue v =
        em_sum(PowerPairTerm{{2.0, 2.0, s}, {2.0, 3.0, s}}, 1e-300, 0, target_rel_err);
    return {-v.value, v.tail_bound, v.terms_used};
}

SeriesValue lambda_fn(double x, double target_abs_err) {
    if (!(x > 1.0)) throw std::domain_error("lambda_fn: requires x > 1");
    SeriesValue m1 = lambda_m1(x);
    SeriesValue v{1.0 + m1.value, m1.tail_bound + 2.0 * kEps, m1.terms_used + 1};
    if (v.tail_bound > target_abs_err)
        throw ConvergenceError("lambda_fn: target below binary64 rounding floor");
    if (is_integer(x)) {
        // identity cross-check: lambda(n) = (1 - 2^-n) zeta(n)
        SeriesValue z = zeta(x, std::max(target_abs_err, 1e-14));
        const double ident = (1.0 - std::pow(2.0, -x)) * z.value;
        if (std::abs(ident - v.value) > v.tail_bound + z.tail_bound + 1e-13)
            throw std::logic_error("lambda_fn: zeta identity cross-check failed");
    }
    return v;
}

SeriesValue lambda_m1(double x, double target_rel_err) {
    if (!(x > 1.0)) throw std::domain_error("lambda_m1: requires x > 1");
    // sum_{k>=1} (2k+1)^-x
    return em_sum(PowerTerm{2.0, 1.0, x}, 1e-300, 1, target_rel_err);
}

SeriesValue beta_fn(double x, double target_abs_err) {
    if (!(x >= 1.0)) throw std::domain_error("beta_fn: requires x >= 1");
    // pairs (4j+1)^-x - (4j+3)^-x, positive and decreasing
    return em_sum(PowerPairTerm{{4.0, 1.0, x}, {4.0, 3.0, x}}, target_abs_err);
}

SeriesValue dirichlet_derivative(DirichletKind kind, double x, double target_abs_err) {
    if (kind == DirichletKind::lambda) {
        if (!(x > 1.0)) throw std::domain_error("dirichlet_derivative(lambda): requires x > 1");
        // lambda'(x) = -sum_{k>=1} log(2k+1) (2k+1)^-x   (k = 0 term vanishes)
        SeriesValue v = em_sum(LogPowerTerm{2.0, 1.0, x}, target_abs_err, 1);
        return {-v.value, v.tail_bound, v.terms_used};
    }
    if (!(x >= 1.0)) throw std::domain_error("dirichlet_derivative(beta): requires x >= 1");
    // beta'(x) = sum_{k>=1} (-1)^{k+1} log(2k+1)/(2k+1)^x, paired as
    // [log(4j+3)(4j+3)^-x - log(4j+5)(4j+5)^-x], j >= 0
    return em_sum(LogPowerPairTerm{{4.0, 3.0, x}, {4.0, 5.0, x}}, target_abs_err);
}

double phi3_series(double x) {
    if (!(x >= 3.0)) throw std::domain_error("phi3: requires x >= 3");
    // -4 sum_{k>=2} c_k (2k+1)^{-x-1} with c_k = k(k+1) - 1 + (-1)^k
    //            = (2k+1)^2/4 - 5/4 + (-1)^k,
    // split into three tails that the EM machinery sums relative-accurately:
    //   -sum_{k>=2} (2k+1)^{1-x} + 5 sum_{k>=2} (2k+1)^{-x-1}
    //   - 4 sum_{j>=1} [(4j+1)^{-x-1} - (4j+3)^{-x-1}].
    // The pieces share the scale 5^{-x} of the result, so only ~1 digit cancels
    // and phi3 stays relative-accurate for every x (b_n = phi3(2n) down to
    // n = 60 depends on this).
    constexpr double rel = 2e-15;
    const SeriesValue s1 = em_sum(PowerTerm{2.0, 1.0, x - 1.0}, 1e-300, 2, rel);
    const SeriesValue s2 = em_sum(PowerTerm{2.0, 1.0, x + 1.0}, 1e-300, 2, rel);
    const SeriesValue s3 =
        em_sum(PowerPairTerm{{4.0, 1.0, x + 1.0}, {4.0, 3.0, x + 1.0}}, 1e-300, 1, rel);
    return -s1.value + 5.0 * s2.value - 4.0 * s3.value;
}

double phi(int k, double x, std::optional<double> c) {
    switch (k) {
        case 1:
            if (!(x > 1.0)) throw std::domain_error("phi_1: requires x > 1");
            return lambda_fn(x).value - lambda_fn(x + 1.0).value;
        case 2: {
            if (!c) throw std::invalid_argument("phi_2: parameter c is required");
            const double C1 = std::log(M_PI * M_PI / 8.0) / std::log(3.0);
            if (!(x >= 2.0)) throw std::domain_error("phi_2: requires x >= 2");
            if (!(*c >= C1)) throw std::domain_error("phi_2: requires c >= C1");
            return lambda_fn(x + *c).value / lambda_fn(x).value;
        }
        case 3:
            return phi3_series(x);
        case 4:
            if (!(x >= 3.0)) throw std::domain_error("phi_4: requires x >= 3");
            return (x - 3.0 + 1.0 / std::log(5.0)) * phi3_series(x);
        case 5:
            if (!(x >= 3.0)) throw std::domain_error("phi_5: requires x >= 3");
            return x * phi3_series(x);
        case 6:
            if (!(x >= 3.0)) throw std::domain_error("phi_6: requires x >= 3");
            return (x + 2.0) * phi3_series(x + 2.0) - x * phi3_series(x);
        default:
            throw std::invalid_argument("phi: k must be in 1..6");
    }
}

}  // namespace rfunc
