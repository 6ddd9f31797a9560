#ifndef RFUNC_BOUNDS_HPP
#define RFUNC_BOUNDS_HPP

namespace rfunc {

enum class BoundMethod {
    sine_poly,       // b0 + (1-2x)P(x) resp. Q(x), over 1 + x(1-x)
    origin_poly,     // Taylor partial sums R_m with A_m correction
    center_poly,     // central partial sums S_m with c_m correction
    multiplicative,  // B(x)/(1+x(1-x)) scaled by 1 resp. delta
    additive,        // rho + ... + B(x)/(1+x(1-x))
    envelope,        // max/min over the polynomial bounds and (delta-1)B
};

/// Two-sided bound for R at one point. The multiplicative lower bound is
/// strict (approached as x -> 0+, never attained); every other method attains
/// equality exactly at x = 1/2.
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    BoundMethod method = BoundMethod::sine_poly;
    int n = 0;  // family index for the polynomial methods
};

/// Safe default for the multiplicative coefficient: the proven upper endpoint
/// of the delta bracket.
inline constexpr double kDeltaSafeUpper = 1.112146;

BoundPair bound_sine_poly(double x);
BoundPair bound_origin_poly(int n, double x);   // n >= 1
BoundPair bound_center_poly(int n, double x);   // n >= 0
BoundPair bound_multiplicative(double x, double delta = kDeltaSafeUpper);
BoundPair bound_additive(double x);
BoundPair bound_envelope(int n, double x, double delta = kDeltaSafeUpper);  // n >= 1

}  // namespace rfunc

#endif
