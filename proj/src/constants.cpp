#include "rfunc/constants.hpp"

#include <cmath>

#include "rfunc/dirichlet.hpp"

namespace rfunc {
namespace {

constexpr double kGamma = 0.57721566490153286060651209008240243;

double b_coeff_small(int n) {
    // b0, b1 in closed form; b_n = phi3(2n) beyond
    if (n == 0) return 5.0 * std::log(2.0) - M_PI;
    if (n == 1) return -std::log(2.0) + (35.0 * zeta(3).value - M_PI * M_PI * M_PI) / 8.0;
    return phi3_series(2.0 * n);
}

PaperConstants build() {
    PaperConstants c{};
    const double pi2 = M_PI * M_PI;
    c.gamma = kGamma;
    c.b0 = b_coeff_small(0);
    c.rho = 4.0 * c.b0 / 5.0;
    c.mu1 = phi3_series(3.0);
    c.mu2 = c.mu1 / std::log(5.0);
    c.mu3 = 3.0 * c.mu1;
    c.mu4 = 5.0 * phi3_series(5.0) - c.mu3;
    c.C1 = std::log(pi2 / 8.0) / std::log(3.0);

    const double b1 = b_coeff_small(1);
    const double b2 = b_coeff_small(2);
    const double b3 = b_coeff_small(3);
    const double b4 = b_coeff_small(4);
    c.d_lower = (1.0 - pi2 / 8.0) * (c.b0 + b1) + pi2 / 8.0;
    // d3 = b0 l(8) + b1 l(6) + b2 l(4) + b3 l(2) - 4 b4
    const double d3 = c.b0 * lambda_fn(8).value + b1 * lambda_fn(6).value +
                      b2 * lambda_fn(4).value + b3 * lambda_fn(2).value - 4.0 * b4;
    c.d_tilde = d3 - (lambda_fn(4).value - 1.0) * b2 - (lambda_fn(2).value - 1.0) * b3;
    c.delta_lo = 19.0 * std::sqrt(2.0) * std::log(8.0) / (16.0 * M_PI);
    c.delta_hi = 1.112146;
    return c;
}

}  // namespace

double PaperConstants::C2(double c) const { return 8.0 * lambda_fn(2.0 + c).value / (M_PI * M_PI); }

const PaperConstants& paper_constants() {
    static const PaperConstants c = build();
    return c;
}

}  // namespace rfunc
