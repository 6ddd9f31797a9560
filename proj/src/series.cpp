#include "rfunc/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rfunc::detail {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2j}/(2j)! for j = 1..13.
constexpr double kBernOverFact[] = {
    0.0,  // unused
    8.3333333333333333e-02,   // B2/2!
    -1.3888888888888889e-03,  // B4/4!
    3.3068783068783069e-05,   // B6/6!
    -8.2671957671957672e-07,  // B8/8!
    2.0876756987868099e-08,   // B10/10!
    -5.2841901386874932e-10,  // B12/12!
    1.3382536530684679e-11,   // B14/14!
    -3.3896802963225829e-13,  // B16/16!
    8.5860620562778446e-15,   // B18/18!
    -2.1748686985580619e-16,  // B20/20!
    5.5090028283602295e-18,   // B22/22!
    -1.3954464685812523e-19,  // B24/24!
    3.5347070396294675e-21,   // B26/26!
};
constexpr int kMaxJ = 12;  // deepest correction; kBernOverFact[kMaxJ+1] bounds its remainder

template <class Term>
SeriesValue em_sum_impl(const Term& f, double target_abs, std::int64_t k_begin,
                        double target_rel) {
    if (!(target_abs > 0.0) && !(target_rel > 0.0))
        throw std::invalid_argument("em_sum: needs a positive error target");

    Accumulator acc;
    double eval_abs = 0.0;  // sum of term magnitudes actually evaluated
    std::int64_t k = k_begin;
    std::int64_t k_tail = std::max<std::int64_t>(k_begin + 8, f.min_tail_index());

    while (true) {
        for (; k < k_tail; ++k) {
            const double kk = static_cast<double>(k);
            acc.add(f.term(kk));
            eval_abs += f.abs_term(kk);
        }

        const double K = static_cast<double>(k_tail);
        double derivs[kMaxJ + 2];  // f^(1), f^(3), ..., f^(2 kMaxJ + 3)
        f.odd_derivatives(K, derivs, kMaxJ + 2);

        // Deepen corrections while the remainder enclosure keeps shrinking.
        double bound = std::abs(kBernOverFact[1] * derivs[0]);
        int J = 0;
        while (J < kMaxJ) {
            const double next = std::abs(kBernOverFact[J + 2] * derivs[J + 1]);
            if (next >= bound) break;
            bound = next;
            ++J;
            if (bound <= 0.25 * target_abs) break;
        }
        double corr = 0.0;
        for (int j = J; j >= 1; --j) corr -= kBernOverFact[j] * derivs[j - 1];

        const double tail = f.integral_from(K) + 0.5 * f.term(K) + corr;
        const double value = acc.total() + tail;
        const double rounding = 2.0 * kEps * (eval_abs + std::abs(tail) + std::abs(value));
        const double target = std::max(target_abs, target_rel * std::abs(value));

        if (bound + rounding <= target)
            return {value, bound + rounding, k_tail - k_begin};
        if (bound <= 0.5 * target && rounding > 0.5 * target)
            throw ConvergenceError("em_sum: target below binary64 rounding floor");
        if (2 * k_tail > kTermCap)
            throw ConvergenceError("em_sum: cannot reach target within term cap");
        k_tail *= 2;
    }
}

// pow-difference u1^p - u2^p without cancellation for p near 0
double pow_diff(double u1, double u2, double p) {
    return -std::pow(u1, p) * std::expm1(p * std::log(u2 / u1));
}

}  // namespace

double PowerTerm::term(double k) const { return std::pow(a * k + b, -s); }

double PowerTerm::integral_from(double k) const {
    const double u = a * k + b;
    return std::pow(u, 1.0 - s) / (a * (s - 1.0));
}

void PowerTerm::odd_derivatives(double k, double* out, int count) const {
    // f^(m)(t) = (-a)^m (s)_m (a t + b)^{-s-m}; successive orders differ by -a(s+m)/u.
    const double u = a * k + b;
    double d = std::pow(u, -s);
    int m = 0;
    for (int i = 0; i < count; ++i) {
        const int steps = (i == 0) ? 1 : 2;
        for (int t = 0; t < steps; ++t) {
            d *= -a * (s + m) / u;
            ++m;
        }
        out[i] = d;
    }
}

std::int64_t LogPowerTerm::min_tail_index() const {
    // a k + b >= 64 keeps every derivative used one-signed (log u must
    // dominate e_m/(s)_m <= H_27 ~ 3.9 < log 64).
    const double need = (64.0 - b) / a;
    return need > 4.0 ? static_cast<std::int64_t>(need) + 1 : 4;
}

double LogPowerTerm::term(double k) const {
    const double u = a * k + b;
    return std::log(u) * std::pow(u, -s);
}

double LogPowerTerm::integral_from(double k) const {
    const double u = a * k + b;
    const double sm1 = s - 1.0;
    return std::pow(u, -sm1) * (std::log(u) / sm1 + 1.0 / (sm1 * sm1)) / a;
}

void LogPowerTerm::odd_derivatives(double k, double* out, int count) const {
    // f^(m)(t) = (-a)^m u^{-s-m} [(s)_m log u - e_m], e_{m+1} = (s+m) e_m + (s)_m.
    const double u = a * k + b;
    const double lu = std::log(u);
    double upow = std::pow(u, -s);
    double apow = 1.0;
    double poch = 1.0, e = 0.0;
    int m = 0;
    int emitted = 0;
    while (emitted < count) {
        e = (s + m) * e + poch;
        poch *= (s + m);
        upow /= u;
        apow *= -a;
        ++m;
        if (m % 2 == 1) out[emitted++] = apow * upow * (poch * lu - e);
    }
}

template <class Base>
double PairTerm<Base>::term(double k) const {
    return hi.term(k) - lo.term(k);
}

template <class Base>
double PairTerm<Base>::abs_term(double k) const {
    return hi.abs_term(k) + lo.abs_term(k);
}

template <class Base>
std::int64_t PairTerm<Base>::min_tail_index() const {
    return std::max(hi.min_tail_index(), lo.min_tail_index());
}

template <>
double PairTerm<PowerTerm>::integral_from(double k) const {
    const double s = hi.s;
    const double u1 = hi.a * k + hi.b, u2 = lo.a * k + lo.b;
    if (s == 1.0) return std::log(u2 / u1) / hi.a;
    return pow_diff(u1, u2, 1.0 - s) / (hi.a * (s - 1.0));
}

template <>
double PairTerm<LogPowerTerm>::integral_from(double k) const {
    const double s = hi.s;
    const double u1 = hi.a * k + hi.b, u2 = lo.a * k + lo.b;
    if (s == 1.0) {
        const double l1 = std::log(u1), l2 = std::log(u2);
        return 0.5 * (l2 * l2 - l1 * l1) / hi.a;
    }
    return hi.integral_from(k) - lo.integral_from(k);
}

template <class Base>
void PairTerm<Base>::odd_derivatives(double k, double* out, int count) const {
    double dh[16], dl[16];
    hi.odd_derivatives(k, dh, count);
    lo.odd_derivatives(k, dl, count);
    for (int i = 0; i < count; ++i) out[i] = dh[i] - dl[i];
}

template struct PairTerm<PowerTerm>;
template struct PairTerm<LogPowerTerm>;

SeriesValue em_sum(const PowerTerm& f, double target_abs, std::int64_t k_begin,
                   double target_rel) {
    return em_sum_impl(f, target_abs, k_begin, target_rel);
}
SeriesValue em_sum(const LogPowerTerm& f, double target_abs, std::int64_t k_begin,
                   double target_rel) {
    return em_sum_impl(f, target_abs, k_begin, target_rel);
}
SeriesValue em_sum(const PowerPairTerm& f, double target_abs, std::int64_t k_begin,
                   double target_rel) {
    return em_sum_impl(f, target_abs, k_begin, target_rel);
}
SeriesValue em_sum(const LogPowerPairTerm& f, double target_abs, std::int64_t k_begin,
                   double target_rel) {
    return em_sum_impl(f, target_abs, k_begin, target_rel);
}

}  // namespace rfunc::detail
