#ifndef RFUNC_ANALYSIS_HPP
#define RFUNC_ANALYSIS_HPP

#include <string>
#include <vector>

namespace rfunc {

/// F1 = [1+x(1-x)] R/B, F2 = R/B - 1/(1+x(1-x)), F3 = R - B/(1+x(1-x)).
/// Below x = 0.05, F1 and F2 switch to their f-based forms (F1 = f/B + 1,
/// F2 = f/([1+x(1-x)]B)) where the direct quotients cancel; F3 is evaluated
/// through f everywhere for the same reason.
double F_eval(int kind, double x);

/// H(x) = (f'(x) + f(x) H1(x)) / (4(1-2x)); direct form for x <= 0.35, the
/// d_n central series beyond (removable singularity at 1/2, H(1/2-) = d_0).
double H_eval(double x);

/// H3(x) = 4[1+x(1-x)] H(x) - f(x) = [5-(1-2x)^2] H(x) - f(x) for x <= 0.35,
/// the D_n series beyond; H3(1/2-) = D_0.
double H3_eval(double x);

/// h8(x) = S2(x) sin(pi x)/pi; its derivative changes sign at the zero of h9.
double h8_eval(double x);

/// h9(x) = S2(x) - 4 h10(x) h11(x)/pi with h10 = b1 + 2 b2 (1-2x)^2 and
/// h11 = (1-2x) tan(pi x); strictly decreasing on (0,1/2).
double h9_eval(double x);

double h10_eval(double x);
double h11_eval(double x);

/// The sine-weighted comparison polynomials of the upper-bound analysis:
/// F5 = [b0+(1-b0)(1-2x)] sin(pi x), F6 = F5'/cos(pi x),
/// F7 = [b0+b1(1-2x)^2] sin(pi x),   F8 = F7'/cos(pi x).
double F5_eval(double x);
double F6_eval(double x);
double F7_eval(double x);
double F8_eval(double x);

/// F9 = (F3-1)/x (increasing), F10 = (F3-rho)/(1-2x) (decreasing); both
/// evaluated through shifted series so the endpoint 0/0 forms are tame.
double F9_F10_eval(int kind, double x);  // kind = 9 or 10

enum class RootTarget { H, H3, h9, F6_shift, F8_shift, F5_level, F7_level };

/// An interval with verified sign change for `target` (minus `level` for the
/// *_level targets).
struct RootBracket {
    double lo = 0.0, hi = 0.0;
    double f_lo = 0.0, f_hi = 0.0;
    RootTarget target = RootTarget::H;
    double level = 0.0;
};

/// Evaluates the target function (minus level where applicable).
double root_target_eval(RootTarget t, double x, double level = 0.0);

/// Verifies the sign change and packages the bracket.
RootBracket make_bracket(RootTarget t, double lo, double hi, double level = 0.0);

/// Bracket-preserving bisection to width 1e-6, then bracketed secant; returns
/// the midpoint of an enclosing interval of width <= tol.
double find_root(const RootBracket& bracket, double tol = 1e-13);

struct DeltaEstimate {
    double x1 = 0.0;         // argmax of F1, the unique zero of H in (1/4,1/2)
    double delta = 0.0;      // F1(x1)
    double residual_H = 0.0; // |H(x1)|
};

DeltaEstimate delta_estimate(double tol = 1e-13);

/// Complete-monotonicity finite-difference probe. For each order m it reports
/// min over a grid of sign_m * forward-difference^m with spacing h chosen so
/// h^m >= 1e-10; evidence, not a certificate.
struct CmTarget {
    enum Kind { F_cm, F3, g, H3 } kind = F_cm;
    int n = 0;  // for kind == g
};

struct CmOrderResult {
    int order = 0;
    double spacing = 0.0;
    double min_value = 0.0;
};

struct CmReport {
    std::string target;
    std::vector<CmOrderResult> orders;
};

CmReport cm_probe(CmTarget target, int max_order, int grid_size);

/// The dominance-crossing abscissas of the upper-bound comparison:
/// x5 = zero of F6 (critical point of F5), x6 < x7 solving F5 = pi(delta-1),
/// x8 = zero of F8, x9 < x10 solving F7 = pi(delta-1).
struct Crossings {
    double x5, x6, x7, x8, x9, x10;
};

Crossings crossings(double delta);

}  // namespace rfunc

#endif
