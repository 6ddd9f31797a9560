#ifndef RFUNC_COEFFICIENTS_HPP
#define RFUNC_COEFFICIENTS_HPP

#include <vector>

#include "rfunc/series.hpp"

namespace rfunc {

/// The coefficient sequences of the two f-expansions and their companions:
///   a_n, b_n       Taylor / central coefficients of f
///   c_n = 1 - sum_{k<=n} b_k,   A_n = 2^{n+1} (b0 - sum_{k<=n} 2^-k a_k)
///   d_n = sum_{k<=n} b_k lambda(2n-2k+2) - (n+1) b_{n+1}
///   D_0 = 5 d_0 - b_0,   D_n = 5 d_n - d_{n-1} - b_n
///
/// c and A are built by their forward recurrences (c_{n+1} = c_n - b_{n+1},
/// A_{n+1} = 2(A_n - a_{n+1})), so those identities hold bitwise on the stored
/// arrays. The price is noise growth ~2^n eps in A_n, which the sign-structure
/// checks respect via reliable_* limits below; the tail forms
/// A_n = sum_j 2^-j a_{n+1+j} and c_n = sum_{k>n} b_k stay relative-accurate
/// at every index and are what the unit tests compare against.
struct CoefficientTable {
    int N = 0;  // exposed max index
    std::vector<double> a, b, c, A, d, D;  // size N+1
    std::vector<double> a_ext, b_ext;      // padded, size N+pad+1, for series use
    std::vector<double> lambda_even;       // lambda(2j), j = 1..N+1 (index 0 unused)
    double ratio_a = 0.0;  // max |a_{n+1}/a_n| over n >= 2 (tail-bound factor)
    double ratio_b = 0.0;  // max |b_{n+1}/b_n| over n >= 1
    int reliable_c = 0;    // largest n whose stored c_n exceeds the noise floor
    int reliable_A = 0;    // largest n whose stored A_n exceeds the noise floor
};

/// Builds the table from the Dirichlet layer with per-entry absolute error
/// <= target_abs_err, verifying the construction invariants.
CoefficientTable build_table(int N = 60, double target_abs_err = 1e-13);

/// The process-wide default table (N = 60), built once.
const CoefficientTable& default_table();

enum class Coeff { a, b, c, A, d, D };

/// Lookup in an explicit table.
double coeff(const CoefficientTable& t, Coeff kind, int n);

/// Lookup in the default table.
double coeff(Coeff kind, int n);

struct IdentityResiduals {
    double sum_a_minus_1;    // |sum_{k<=N} a_k - 1|
    double sum_b_minus_1;    // |sum_{k<=N} b_k - 1|
    double dyadic_a_minus_b0;  // |sum_{k<=N} 2^-k a_k - b0|
};

IdentityResiduals identity_residuals(const CoefficientTable& t);

/// Tail-form recomputations (relative-accurate at every index).
double A_tail_form(const CoefficientTable& t, int n);
double c_tail_form(const CoefficientTable& t, int n);

}  // namespace rfunc

#endif
