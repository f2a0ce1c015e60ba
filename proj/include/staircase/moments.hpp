#pragma once

#include "staircase/asep.hpp"
#include "staircase/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace staircase {

// Askey-Wilson parameters. Orthogonality with a positive weight needs
// |a|, |b|, |c|, |d|, |q| < 1; outside that the identities below are still
// checked wherever every denominator is nonzero.
struct AwParams {
    BigRational a;
    BigRational b;
    BigRational c;
    BigRational d;
    BigRational q;

    bool in_orthogonality_regime() const;
};

// alpha = (1-q)/(1+ac+a+c), gamma = -(1-q)ac/(1+ac+a+c), and likewise beta,
// delta from b, d. q carries over, u = 1.
AsepParams forward_params(const AwParams& aw);

// Inverse of forward_params on the branch a >= c, b >= d. Exact when both
// discriminants are squares of rationals; otherwise each square root is
// rounded to the nearest multiple of 2^-precision_bits / den.
struct BackwardParams {
    std::array<BigRational, 4> abcd;
    bool exact = true;
    unsigned precision_bits = 0;
};
BackwardParams backward_params(const AsepParams& rates, unsigned precision_bits = 128);

// Coefficients of 2x P_n = A_n P_{n+1} + B_n P_n + C_n P_{n-1}.
struct RecurrenceCoeffs {
    BigRational A;
    BigRational B;
    BigRational C;
};
RecurrenceCoeffs recurrence_coeffs(unsigned n, const AwParams& aw);

// Monic form x p_n = p_{n+1} + b_n p_n + lambda_n p_{n-1}:
// b_n = B_n / 2 and lambda_n = A_{n-1} C_n / 4 (lambda_0 unused, stored as 0).
struct JacobiCoeffs {
    std::vector<BigRational> diagonal;
    std::vector<BigRational> lambda;
};
JacobiCoeffs jacobi_coeffs(unsigned levels, const AwParams& aw);

// nu_k = mu_k / mu_0 for k = 0..K.
using MomentVector = std::vector<BigRational>;

// Weighted Motzkin paths: nu_k is the (0, 0) entry of the k-th power of the
// tridiagonal Jacobi operator.
MomentVector moments_motzkin(unsigned max_k, const AwParams& aw);

// Z_0 .. Z_K at u = 1 (cached across calls).
const std::vector<GfPoly>& partition_functions_u1(unsigned max_n);

// nu_k = sum_l (-1)^(k-l) C(k,l) ((1-q)/2)^l Z_l / prod_{i<l} (ab - gd q^i),
// with Z_l evaluated at forward_params(aw).
MomentVector moments_staircase(unsigned max_k, const AwParams& aw);

struct MomentComparison {
    MomentVector staircase;
    MomentVector motzkin;
    std::optional<unsigned> first_mismatch;
    // ((1-q)/2)^n Z_n / prod lambda_i = sum_k C(n,k) nu_k, checked with the
    // Motzkin moments for n = 0..K.
    std::optional<unsigned> bridge_mismatch;

    bool equal() const noexcept { return !first_mismatch && !bridge_mismatch; }
};
MomentComparison compare_moments(unsigned max_k, const AwParams& aw);

// det [nu_{i+j}]_{0 <= i, j < order}
BigRational hankel_determinant(const MomentVector& moments, unsigned order);

} // namespace staircase
