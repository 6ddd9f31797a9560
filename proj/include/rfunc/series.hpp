#ifndef RFUNC_SERIES_HPP
#define RFUNC_SERIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rfunc {

/// A truncated series sum together with a rigorous absolute bound on the
/// omitted tail (including an allowance for accumulated rounding).
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms_used = 0;
};

/// Thrown when a summation cannot meet its error target within the term cap.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::int64_t kTermCap = 10'000'000;

namespace detail {

// Neumaier compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if ((sum < 0 ? -sum : sum) >= (x < 0 ? -x : x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double total() const { return sum + comp; }
};

// Monotone term families for Euler-Maclaurin summation.
//
// sum_{k=K}^inf f(k) = int_K^inf f + f(K)/2 - sum_j B_{2j}/(2j)! f^(2j-1)(K) + R_J,
// where R_J is enclosed by the first omitted correction term whenever the
// derivatives of f are one-signed on [K, inf) (cf. DLMF 2.10(i)); that holds
// for all the families below, for log-weighted ones beyond a start threshold.

// f(t) = (a t + b)^-s.
struct PowerTerm {
    double a, b, s;

    double term(double k) const;
    double abs_term(double k) const { return term(k); }
    double integral_from(double k) const;
    // f^(1), f^(3), ..., f^(2*count-1) at t = k.
    void odd_derivatives(double k, double* out, int count) const;
    std::int64_t min_tail_index() const { return 4; }
};

// f(t) = log(a t + b) * (a t + b)^-s.
struct LogPowerTerm {
    double a, b, s;

    double term(double k) const;
    double abs_term(double k) const { return term(k); }
    double integral_from(double k) const;
    void odd_derivatives(double k, double* out, int count) const;
    std::int64_t min_tail_index() const;
};

// Paired difference g(k) = base(at k, offset c1) - base(at k, offset c2),
// c1 < c2: positive and completely monotone wherever the base family is.
// This is how the alternating sums (eta, beta, beta') are summed; the pair
// integral handles s = 1, where each half alone diverges.
template <class Base>
struct PairTerm {
    Base hi, lo;  // hi carries offset c1 (the larger term), lo offset c2

    double term(double k) const;
    double abs_term(double k) const;
    double integral_from(double k) const;
    void odd_derivatives(double k, double* out, int count) const;
    std::int64_t min_tail_index() const;
};

using PowerPairTerm = PairTerm<PowerTerm>;
using LogPowerPairTerm = PairTerm<LogPowerTerm>;

// sum_{k=k_begin}^inf f(k). Accepts once the enclosure plus rounding drops
// under max(target_abs_err, target_rel_err * |value|).
SeriesValue em_sum(const PowerTerm& f, double target_abs_err, std::int64_t k_begin = 0,
                   double target_rel_err = 0.0);
SeriesValue em_sum(const LogPowerTerm& f, double target_abs_err, std::int64_t k_begin = 0,
                   double target_rel_err = 0.0);
SeriesValue em_sum(const PowerPairTerm& f, double target_abs_err, std::int64_t k_begin = 0,
                   double target_rel_err = 0.0);
SeriesValue em_sum(const LogPowerPairTerm& f, double target_abs_err, std::int64_t k_begin = 0,
                   double target_rel_err = 0.0);

}  // namespace detail
}  // namespace rfunc

#endif
