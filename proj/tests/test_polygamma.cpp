#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rfunc/dirichlet.hpp"
#include "rfunc/polygamma.hpp"
#include "oracles.hpp"

using namespace rfunc;

namespace {
constexpr double kPi = M_PI;
constexpr double kGamma = 0.57721566490153286060651209008240243;
}

TEST_CASE("psi closed-form anchors") {
    CHECK(psi(0.5) == doctest::Approx(-kGamma - std::log(4.0)).epsilon(1e-15));
    CHECK(psi(1.0) == doctest::Approx(-kGamma).epsilon(1e-15));
    CHECK(psi(0.25) + psi(0.75) ==
          doctest::Approx(-2.0 * kGamma - 6.0 * std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(psi(0.0), std::domain_error);
    CHECK_THROWS_AS(psi(-1.5), std::domain_error);
}

TEST_CASE("psi reference table") {
    for (const auto& row : fixture::psi_table) {
        const double err = std::abs(psi(row[0]) - row[1]);
        CHECK(err <= 4e-15 * std::max(1.0, std::abs(row[1])));
    }
}

TEST_CASE("psi recurrence within a couple ulp") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> xu(1e-3, 40.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = xu(gen);
        const double lhs = psi(x + 1.0) - psi(x) - 1.0 / x;
        const double scale = std::max({std::abs(psi(x + 1.0)), std::abs(psi(x)), 1.0 / x});
        CHECK(std::abs(lhs) <= 2.0 * scale * 2.220446049250313e-16);
    }
}

TEST_CASE("psi duplication identity (test-only property)") {
    // psi(2x) = psi(x)/2 + psi(x+1/2)/2 + log 2
    for (int i = 1; i < 500; ++i) {
        const double x = 0.5 * i / 500.0;
        const double r = psi(2.0 * x) - 0.5 * psi(x) - 0.5 * psi(x + 0.5) - std::log(2.0);
        CHECK(std::abs(r) <= 1e-12);
    }
}

TEST_CASE("reflection consistency against H1") {
    for (int i = 0; i < 1000; ++i) {
        const double x = 0.01 + 0.98 * i / 999.0;
        CHECK(std::abs(psi(1.0 - x) - psi(x) - H1(x)) <= 1e-11);
    }
}

TEST_CASE("polygamma values") {
    CHECK(polygamma(1, 1.0).value == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
    // R'(1/4) anchor: psi'(3/4) - psi'(1/4) = -16 beta(2)
    const double d = polygamma(1, 0.75).value - polygamma(1, 0.25).value;
    CHECK(d == doctest::Approx(-16.0 * beta_fn(2).value).epsilon(1e-14));
    CHECK(d == doctest::Approx(-14.655449).epsilon(1e-7));
    // psi'(1/2) = pi^2/2 = 4 lambda(2)
    CHECK(polygamma(1, 0.5).value == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
    CHECK(polygamma(1, 0.5).value ==
          doctest::Approx(4.0 * lambda_fn(2).value).epsilon(1e-14));
    CHECK(std::abs(polygamma(1, 0.25).value - fixture::psi1_quarter) < 1e-12);
    CHECK(std::abs(polygamma(1, 0.75).value - fixture::psi1_three_quarter) < 1e-13);
    CHECK(std::abs(polygamma(2, 0.3).value - fixture::psi2_03) < 1e-11);
    CHECK(std::abs(polygamma(3, 1.2).value - fixture::psi3_12) < 1e-13);
    CHECK(std::abs(polygamma(4, 0.7).value - fixture::psi4_07) < 1e-11);
    CHECK_THROWS_AS(polygamma(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(polygamma(1, 0.0), std::domain_error);
}

TEST_CASE("polygamma tail bounds are honest") {
    CHECK(std::abs(polygamma(1, 0.25).value - fixture::psi1_quarter) <=
          polygamma(1, 0.25).tail_bound);
    CHECK(std::abs(polygamma(3, 1.2).value - fixture::psi3_12) <=
          polygamma(3, 1.2).tail_bound);
}

TEST_CASE("B function") {
    CHECK(B_fn(0.5) == doctest::Approx(kPi).epsilon(1e-16));
    CHECK(B_fn(0.25) == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(B_fn(0.3) - fixture::B_03) < 1e-14);
    // against the central series 4 sum beta(2n+1) (1-2x)^{2n}
    const double y2 = 0.4 * 0.4;
    double series = 0.0, yp = 1.0;
    for (int n = 0; n <= 40; ++n) {
        series += 4.0 * beta_fn(2.0 * n + 1.0).value * yp;
        yp *= y2;
    }
    CHECK(std::abs(B_fn(0.3) - series) <= 1e-12);
    CHECK_THROWS_AS(B_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(B_fn(1.0), std::domain_error);
}

TEST_CASE("B symmetry is bitwise on exactly representable complements") {
    // pairs (1-u, u) with u in (0.5, 1): both complements are exact by
    // Sterbenz, so bit equality is well posed
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> uu(0.5000001, 0.9999999);
    for (int i = 0; i < 1000; ++i) {
        const double u = uu(gen);
        const double x = 1.0 - u;
        CHECK(B_fn(x) == B_fn(u));
    }
}

TEST_CASE("H1 cotangent form") {
    CHECK(H1(0.5) == 0.0);  // exactly
    CHECK(H1(0.25) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(std::abs(H1(0.4) - fixture::H1_04) < 1e-14);
    // against the central series 4 sum lambda(2k) (1-2x)^{2k-1}
    const double y = 1.0 - 2.0 * 0.4;
    double series = 0.0, yp = y;
    for (int k = 1; k <= 40; ++k) {
        series += 4.0 * lambda_fn(2.0 * k).value * yp;
        yp *= y * y;
    }
    CHECK(std::abs(H1(0.4) - series) <= 1e-12);
    // antisymmetry about 1/2 on exact complements
    CHECK(H1(0.75) == doctest::Approx(-kPi).epsilon(1e-15));
    CHECK_THROWS_AS(H1(0.0), std::domain_error);
    CHECK_THROWS_AS(H1(1.0), std::domain_error);
}

TEST_CASE("reflection point") {
    const ReflectionPoint p(0.7);
    CHECK(p.one_minus_x == doctest::Approx(0.3).epsilon(1e-16));
    CHECK_THROWS_AS(ReflectionPoint(0.0), std::domain_error);
    CHECK_THROWS_AS(ReflectionPoint(1.0), std::domain_error);
}
