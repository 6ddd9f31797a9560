#include "rfunc/coefficients.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rfunc/dirichlet.hpp"

namespace rfunc {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kPad = 70;  // extra indices so tail forms and shifted series stay exact

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("build_table: invariant violated: " + what);
}

double a_coeff(int n) {
    // Parity closed forms, arranged cancellation-free:
    //   a_{2m}   = 2[(zeta(2m+1)-1) - (zeta(2m-1)-1)],  m >= 2
    //   a_{2m+1} = 2[(zeta(2m+1)-1) - (eta(2m+2)-1)],   m >= 1
    // (eta-1 < 0, so the odd form has no cancellation at all; the even form
    // loses ~2 bits.)
    if (n == 0) return 1.0;
    if (n == 1) return -1.0 - M_PI * M_PI / 6.0;
    if (n == 2) return 2.0 * zeta(3).value;
    const double nn = n;
    if (n % 2 == 1) return 2.0 * (zeta_m1(nn).value - eta_m1(nn + 1.0).value);
    return 2.0 * (zeta_m1(nn + 1.0).value - zeta_m1(nn - 1.0).value);
}

double b_coeff(int n) {
    if (n == 0) return 5.0 * std::log(2.0) - M_PI;
    if (n == 1) return -std::log(2.0) + (35.0 * zeta(3).value - M_PI * M_PI * M_PI) / 8.0;
    return phi3_series(2.0 * n);
}

}  // namespace

CoefficientTable build_table(int N, double target_abs_err) {
    if (N < 40) throw std::domain_error("build_table: requires N >= 40");
    if (!(target_abs_err > 0.0)) throw std::invalid_argument("build_table: bad target");

    CoefficientTable t;
    t.N = N;
    const int M = N + kPad;
    t.a_ext.resize(M + 1);
    t.b_ext.resize(M + 1);
    for (int n = 0; n <= M; ++n) {
        t.a_ext[n] = a_coeff(n);
        t.b_ext[n] = b_coeff(n);
    }
    t.a.assign(t.a_ext.begin(), t.a_ext.begin() + N + 1);
    t.b.assign(t.b_ext.begin(), t.b_ext.begin() + N + 1);

    // Forward recurrences; Eq-exact on the stored arrays by construction.
    t.c.resize(N + 1);
    t.A.resize(N + 1);
    t.c[0] = 1.0 - t.b[0];
    t.A[0] = 2.0 * (t.b[0] - 1.0);
    for (int n = 0; n < N; ++n) {
        t.c[n + 1] = t.c[n] - t.b[n + 1];
        t.A[n + 1] = 2.0 * (t.A[n] - t.a[n + 1]);
    }

    t.lambda_even.resize(N + 2);
    for (int j = 1; j <= N + 1; ++j) t.lambda_even[j] = lambda_fn(2.0 * j).value;

    t.d.resize(N + 1);
    t.D.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        detail::Accumulator acc;
        for (int k = 0; k <= n; ++k) acc.add(t.b_ext[k] * t.lambda_even[n - k + 1]);
        acc.add(-(n + 1.0) * t.b_ext[n + 1]);
        t.d[n] = acc.total();
    }
    t.D[0] = 5.0 * t.d[0] - t.b[0];
    for (int n = 1; n <= N; ++n) t.D[n] = 5.0 * t.d[n] - t.d[n - 1] - t.b[n];

    // Decay ratios backing the series tail bounds.
    for (int n = 2; n < M; ++n)
        t.ratio_a = std::max(t.ratio_a, std::abs(t.a_ext[n + 1] / t.a_ext[n]));
    for (int n = 1; n < M; ++n)
        t.ratio_b = std::max(t.ratio_b, std::abs(t.b_ext[n + 1] / t.b_ext[n]));
    if (!(t.ratio_a < 0.8)) fail("a-coefficient decay ratio");
    if (!(t.ratio_b < 0.06)) fail("b-coefficient decay ratio");

    // Noise floors of the recurrence-built arrays.
    t.reliable_c = N;
    for (int n = 1; n <= N; ++n)
        if (!(std::abs(t.c[n]) > 64.0 * kEps)) { t.reliable_c = n - 1; break; }
    t.reliable_A = N;
    for (int n = 0; n <= N; ++n)
        if (!(std::abs(t.A[n]) > 8.0 * kEps * std::ldexp(1.0, n + 1))) {
            t.reliable_A = n - 1;
            break;
        }
    if (t.reliable_c < 8) fail("c noise floor too low");
    if (t.reliable_A < 12) fail("A noise floor too low");

    // Sign structure (Eq. (1.12) holds from a_3 up; a_1 < 0 and a_2 > 0 are
    // the special leading values).
    for (int m = 1; 2 * m + 2 <= M; ++m) {
        if (!(t.a_ext[2 * m + 1] > 0.0)) fail("a_{2m+1} > 0");
        if (!(t.a_ext[2 * m + 2] < 0.0)) fail("a_{2m+2} < 0");
    }
    for (int n = 2; n < M; ++n) {
        if (!(t.b_ext[n] < 0.0)) fail("b_n < 0 for n >= 2");
        if (!(t.b_ext[n] < t.b_ext[n + 1])) fail("b_n increasing for n >= 2");
    }
    // a_{2n+2} < A_{2n+1} < 0 < A_{2n} < a_{2n+1} within the reliable range.
    for (int n = 1; 2 * n + 2 <= std::min(N, t.reliable_A); ++n) {
        if (!(t.a[2 * n + 2] < t.A[2 * n + 1] && t.A[2 * n + 1] < 0.0))
            fail("a_{2n+2} < A_{2n+1} < 0");
        if (!(0.0 < t.A[2 * n] && t.A[2 * n] < t.a[2 * n + 1]))
            fail("0 < A_{2n} < a_{2n+1}");
    }
    // c_n < b_{n+1} within the reliable range.
    for (int n = 0; n <= std::min(N - 1, t.reliable_c); ++n)
        if (!(t.c[n] < t.b[n + 1])) fail("c_n < b_{n+1}");
    // d_n and D_n windows.
    const double lam2 = t.lambda_even[1];
    const double d_lower = (1.0 - lam2) * (t.b[0] + t.b[1]) + lam2;
    const double d_tilde =
        t.d[3] - (t.lambda_even[2] - 1.0) * t.b[2] - (lam2 - 1.0) * t.b[3];
    for (int n = 3; n <= N; ++n)
        if (!(d_lower < t.d[n] && t.d[n] < d_tilde)) fail("d < d_n < d~ for n >= 3");
    for (int n = 4; n <= N; ++n)
        if (!(t.D[n] > 5.0 * d_lower - d_tilde)) fail("D_n > 5d - d~ for n >= 4");

    // Per-entry accuracy: the a, b, d, D entries and the reliable span of c, A
    // are good to a few 1e-15; verify the caller's budget is not tighter than
    // the binary64 floor we can honor.
    if (target_abs_err < 32.0 * kEps)
        throw ConvergenceError("build_table: target below binary64 floor");
    return t;
}

const CoefficientTable& default_table() {
    static const CoefficientTable t = build_table(60, 1e-13);
    return t;
}

double coeff(const CoefficientTable& t, Coeff kind, int n) {
    if (n < 0 || n > t.N) throw std::out_of_range("coeff: index beyond table");
    switch (kind) {
        case Coeff::a: return t.a[n];
        case Coeff::b: return t.b[n];
        case Coeff::c: return t.c[n];
        case Coeff::A: return t.A[n];
        case Coeff::d: return t.d[n];
        case Coeff::D: return t.D[n];
    }
    throw std::invalid_argument("coeff: bad kind");
}

double coeff(Coeff kind, int n) { return coeff(default_table(), kind, n); }

IdentityResiduals identity_residuals(const CoefficientTable& t) {
    detail::Accumulator sa, sb, sd;
    for (int k = 0; k <= t.N; ++k) {
        sa.add(t.a[k]);
        sb.add(t.b[k]);
        sd.add(std::ldexp(t.a[k], -k));
    }
    return {std::abs(sa.total() - 1.0), std::abs(sb.total() - 1.0),
            std::abs(sd.total() - t.b[0])};
}

double A_tail_form(const CoefficientTable& t, int n) {
    if (n < 0 || n > t.N) throw std::out_of_range("A_tail_form: index beyond table");
    const int M = static_cast<int>(t.a_ext.size()) - 1;
    detail::Accumulator acc;
    for (int j = M - n - 1; j >= 0; --j) acc.add(std::ldexp(t.a_ext[n + 1 + j], -j));
    return acc.total();
}

double c_tail_form(const CoefficientTable& t, int n) {
    if (n < 0 || n > t.N) throw std::out_of_range("c_tail_form: index beyond table");
    const int M = static_cast<int>(t.b_ext.size()) - 1;
    detail::Accumulator acc;
    for (int k = M; k > n; --k) acc.add(t.b_ext[k]);
    return acc.total();
}

}  // namespace rfunc
