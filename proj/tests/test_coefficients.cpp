#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rfunc/coefficients.hpp"
#include "rfunc/dirichlet.hpp"
#include "oracles.hpp"

using namespace rfunc;

TEST_CASE("leading coefficients against references") {
    const auto& t = default_table();
    CHECK(t.a[0] == 1.0);
    CHECK(t.a[1] == doctest::Approx(-1.0 - M_PI * M_PI / 6.0).epsilon(1e-15));
    CHECK(t.a[2] == doctest::Approx(2.0 * fixture::zeta3).epsilon(1e-15));
    CHECK(std::abs(t.a[3] - fixture::a3) < 1e-14);
    CHECK(std::abs(t.a[4] - fixture::a4) < 1e-14);
    CHECK(t.b[0] == doctest::Approx(5.0 * std::log(2.0) - M_PI).epsilon(1e-15));
    CHECK(t.b[1] == doctest::Approx(0.690067).epsilon(1e-6));
    CHECK(std::abs(t.b[2] - fixture::b2) < 1e-15);
    CHECK(std::abs(t.b[3] - fixture::b3) < 1e-16);
    CHECK(2.0 * t.b[2] == doctest::Approx(-0.027624).epsilon(1e-4));
    CHECK(t.c[1] == doctest::Approx(-0.014210).epsilon(1e-4));
    CHECK(std::abs(t.c[2] - fixture::c2) < 1e-13);
    CHECK(t.d[0] == doctest::Approx(-0.290171).epsilon(1e-5));
    CHECK(std::abs(t.d[1] - fixture::d1) < 1e-13);
    CHECK(t.d[2] == doctest::Approx(1.008920).epsilon(1e-6));
    CHECK(t.d[3] == doctest::Approx(1.000824).epsilon(1e-6));
    CHECK(t.D[0] == doctest::Approx(-1.7750006).epsilon(1e-6));
    CHECK(std::abs(t.D[1] - fixture::D1) < 1e-12);
    CHECK(t.D[2] == doctest::Approx(3.850551).epsilon(1e-6));
    CHECK(t.D[3] == doctest::Approx(3.995587).epsilon(1e-6));
    // D0 closed form: [(5 pi^2/8) - 1] b0 - 5 b1
    CHECK(t.D[0] ==
          doctest::Approx((5.0 * M_PI * M_PI / 8.0 - 1.0) * t.b[0] - 5.0 * t.b[1])
              .epsilon(1e-13));
}

TEST_CASE("both a-forms agree at n = 3, 4") {
    // generic bracket form of the definition vs the parity closed form stored
    const auto& t = default_table();
    for (int n : {3, 4}) {
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        const double generic = (1.0 + sgn) * (zeta(n + 1.0).value - zeta(n - 1.0).value) +
                               (1.0 - sgn) * (zeta(n).value - eta(n + 1.0));
        CHECK(std::abs(t.a[n] - generic) < 1e-13);
    }
}

TEST_CASE("recurrences hold bitwise as computed") {
    const auto& t = default_table();
    for (int n = 0; n + 1 <= t.N; ++n) {
        CHECK(t.c[n + 1] == t.c[n] - t.b[n + 1]);
        CHECK(t.A[n + 1] == 2.0 * (t.A[n] - t.a[n + 1]));
    }
}

TEST_CASE("identity residuals") {
    const auto res = identity_residuals(default_table());
    CHECK(res.sum_a_minus_1 <= 1e-11);
    CHECK(res.sum_b_minus_1 <= 1e-12);
    CHECK(res.dyadic_a_minus_b0 <= 1e-11);
}

TEST_CASE("A: forward recurrence vs tail form") {
    const auto& t = default_table();
    for (int n = 0; n <= 8; ++n) {
        CHECK(std::abs(A_tail_form(t, n) - fixture::A_vals[n]) < 1e-13);
        CHECK(std::abs(t.A[n] - fixture::A_vals[n]) < 1e-12);
    }
    // within the noise floor the two constructions agree
    for (int n = 0; n <= t.reliable_A; ++n) {
        const double noise = 16.0 * std::ldexp(2.220446049250313e-16, n + 1);
        CHECK(std::abs(t.A[n] - A_tail_form(t, n)) <= noise);
    }
    CHECK(t.reliable_A >= 18);
}

TEST_CASE("c: forward recurrence vs tail form") {
    const auto& t = default_table();
    for (int n = 0; n <= t.reliable_c; ++n)
        CHECK(std::abs(t.c[n] - c_tail_form(t, n)) <= 1e-14);
    CHECK(t.reliable_c >= 8);
}

TEST_CASE("sign chain a_{2n+2} < A_{2n+1} < 0 < A_{2n} < a_{2n+1}") {
    const auto& t = default_table();
    // stored values inside the noise floor
    for (int n = 1; 2 * n + 2 <= t.reliable_A; ++n) {
        CHECK(t.a[2 * n + 2] < t.A[2 * n + 1]);
        CHECK(t.A[2 * n + 1] < 0.0);
        CHECK(0.0 < t.A[2 * n]);
        CHECK(t.A[2 * n] < t.a[2 * n + 1]);
    }
    // tail form carries the chain to every stored index
    for (int n = 1; 2 * n + 2 <= t.N; ++n) {
        CHECK(t.a[2 * n + 2] < A_tail_form(t, 2 * n + 1));
        CHECK(A_tail_form(t, 2 * n + 1) < 0.0);
        CHECK(0.0 < A_tail_form(t, 2 * n));
        CHECK(A_tail_form(t, 2 * n) < t.a[2 * n + 1]);
    }
}

TEST_CASE("A_{2n+1} increases toward 0, A_{2n} decreases toward 0") {
    const auto& t = default_table();
    for (int n = 1; 2 * n + 3 <= t.N; ++n)
        CHECK(A_tail_form(t, 2 * n + 1) < A_tail_form(t, 2 * n + 3));
    for (int n = 1; 2 * n + 2 <= t.N; ++n)
        CHECK(A_tail_form(t, 2 * n) > A_tail_form(t, 2 * n + 2));
}

TEST_CASE("|a_n| strictly decreasing from n = 2; alternating chain") {
    const auto& t = default_table();
    for (int n = 2; n + 1 <= t.N; ++n) CHECK(std::abs(t.a[n + 1]) < std::abs(t.a[n]));
    for (int n = 1; 2 * n + 2 <= t.N; ++n) {
        CHECK(0.0 < -t.a[2 * n + 2]);
        CHECK(-t.a[2 * n + 2] < t.a[2 * n + 1]);
        CHECK(t.a[2 * n + 1] < -t.a[2 * n]);
    }
}

TEST_CASE("c_n strictly increasing, negative, to 0; c_n < b_{n+1}") {
    const auto& t = default_table();
    for (int n = 1; n <= t.reliable_c; ++n) {
        CHECK(t.c[n] < 0.0);
        if (n > 1) CHECK(t.c[n] > t.c[n - 1]);
        CHECK(t.c[n] < t.b[n + 1]);
    }
    // tail form: the full stored range
    for (int n = 1; n + 1 <= t.N; ++n) {
        const double cn = c_tail_form(t, n);
        CHECK(cn < 0.0);
        CHECK(cn < t.b[n + 1]);
        if (n > 1) CHECK(cn > c_tail_form(t, n - 1));
    }
    CHECK(std::abs(c_tail_form(t, t.N)) < 1e-14);  // -> 0
}

TEST_CASE("b-sequence facts of the lemma layer") {
    const auto& t = default_table();
    // b_{n+1} = phi3(2n+2), (n+1) b_{n+1} = phi5(2n+2)/2,
    // (n+2) b_{n+2} - (n+1) b_{n+1} = phi6(2n+2)/2
    for (int n = 1; n <= 10; ++n) {
        CHECK(std::abs(t.b[n + 1] - phi(3, 2.0 * n + 2.0)) < 1e-15);
        CHECK(std::abs((n + 1.0) * t.b[n + 1] - 0.5 * phi(5, 2.0 * n + 2.0)) < 1e-15);
        CHECK(std::abs((n + 2.0) * t.b[n + 2] - (n + 1.0) * t.b[n + 1] -
                       0.5 * phi(6, 2.0 * n + 2.0)) < 1e-15);
    }
    // 2b_2 <= n b_n < (n+1) b_{n+1} <= min{0, n b_n + 3 b_3 - 2 b_2}
    for (int n = 2; n + 2 <= t.N; ++n) {
        const double lhs = n * t.b[n], rhs = (n + 1.0) * t.b[n + 1];
        CHECK(2.0 * t.b[2] <= lhs);
        CHECK(lhs < rhs);
        CHECK(rhs <= std::min(0.0, lhs + 3.0 * t.b[3] - 2.0 * t.b[2]) + 1e-18);
        // (n+2) b_{n+2} - (n+1) b_{n+1} strictly decreasing
        const double d1 = (n + 1.0) * t.b[n + 1] - n * t.b[n];
        const double d2 = (n + 2.0) * t.b[n + 2] - (n + 1.0) * t.b[n + 1];
        CHECK(d2 < d1);
    }
}

TEST_CASE("d_n and D_n windows") {
    const auto& t = default_table();
    const double lam2 = M_PI * M_PI / 8.0;
    const double d_lower = (1.0 - lam2) * (t.b[0] + t.b[1]) + lam2;
    const double d_tilde =
        t.d[3] - (std::pow(M_PI, 4) / 96.0 - 1.0) * t.b[2] - (lam2 - 1.0) * t.b[3];
    CHECK(d_lower == doctest::Approx(0.996679).epsilon(1e-6));
    CHECK(d_tilde == doctest::Approx(1.001117).epsilon(1e-6));
    CHECK(d_tilde < t.d[2]);
    for (int n = 3; n <= t.N; ++n) {
        CHECK(t.d[n] > d_lower);
        CHECK(t.d[n] < d_tilde);
    }
    for (int n = 4; n <= t.N; ++n) CHECK(t.D[n] > 3.982277);
}

TEST_CASE("lookup and errors") {
    const auto& t = default_table();
    CHECK(coeff(Coeff::a, 2) == t.a[2]);
    CHECK(coeff(t, Coeff::D, 0) == t.D[0]);
    CHECK_THROWS_AS(coeff(Coeff::b, t.N + 1), std::out_of_range);
    CHECK_THROWS_AS(coeff(Coeff::b, -1), std::out_of_range);
    CHECK_THROWS_AS(build_table(39), std::domain_error);
    CHECK_THROWS_AS(build_table(60, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_table(60, 1e-18), ConvergenceError);
}

TEST_CASE("a custom table size builds and verifies") {
    const CoefficientTable t = build_table(45, 1e-13);
    CHECK(t.N == 45);
    CHECK(std::abs(t.a[3] - fixture::a3) < 1e-14);
    CHECK(identity_residuals(t).sum_b_minus_1 <= 1e-12);
}
