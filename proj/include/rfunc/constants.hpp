#ifndef RFUNC_CONSTANTS_HPP
#define RFUNC_CONSTANTS_HPP

namespace rfunc {

/// The named scalar constants of the approximation family, computed once from
/// the Dirichlet layer. (omega = 6305/2187 and the mu = 65/108 companion of
/// the zeta inequality are proof-internal and intentionally not stored here;
/// the inequality check carries its own literal.)
struct PaperConstants {
    double gamma;      // Euler-Mascheroni
    double b0;         // 5 log 2 - pi
    double rho;        // 4 b0 / 5 = log 16 - 4 pi / 5
    double mu1;        // phi_3(3) = 5 pi^4/96 - pi^2/8 - 4 beta(4)
    double mu2;        // mu1 / log 5
    double mu3;        // 3 mu1
    double mu4;        // phi_5(5) - mu3
    double C1;         // log(pi^2/8) / log 3
    double d_lower;    // (1 - pi^2/8)(b0 + b1) + pi^2/8
    double d_tilde;    // d3 - (pi^4/96 - 1) b2 - (pi^2/8 - 1) b3
    double delta_lo;   // 19 sqrt(2) log 8 / (16 pi)
    double delta_hi;   // 1.112146

    /// C2(c) = 8 lambda(2+c) / pi^2, the image endpoint of phi_2; a function
    /// of c rather than a stored scalar.
    double C2(double c) const;
};

const PaperConstants& paper_constants();

}  // namespace rfunc

#endif
