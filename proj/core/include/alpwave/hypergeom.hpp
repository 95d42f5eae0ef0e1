#ifndef ALPWAVE_HYPERGEOM_HPP
#define ALPWAVE_HYPERGEOM_HPP

#include "alpwave/exact.hpp"

#include <vector>

namespace alpwave {

/// Parameters of a pFq series: sum over k of
/// prod (a_j)_k / (prod (b_j)_k * k!) * argument^k.
struct HypergeomParams {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator;
    Rational argument = 1;
};

/// Index into numerator of the parameter that terminates the series (the
/// nonpositive integer of smallest absolute value); -1 if none.
long termination_index(const HypergeomParams& p);

/// True for a terminating 4F3 at argument 1 with sum(den) = sum(num) + 1.
bool is_balanced_4f3(const HypergeomParams& p);

/// Exact sum of a terminating series.  Throws if no numerator parameter is a
/// nonpositive integer, or if a denominator parameter reaches zero before the
/// series terminates.
Rational eval_pfq_terminating(const HypergeomParams& p);

struct TruncatedSum {
    double value = 0;
    long terms_used = 0;
};

/// Adaptive partial sum of a convergent series in double precision.  Stops
/// once three consecutive terms fall below tol * |partial sum|; throws after
/// 10^6 terms without meeting the criterion.
TruncatedSum eval_pfq_truncated(const std::vector<double>& numerator,
                                const std::vector<double>& denominator,
                                double argument, double tol);

struct WhippleResult {
    HypergeomParams params;
    Rational prefactor;  // value(input) = prefactor * value(params)
};

/// Whipple transformation of a terminating balanced 4F3 at 1.  Roles: the
/// numerator at n_index is -N, the numerator at z_index plays z, the
/// denominator at u_index plays u; the remaining parameters are x, y and v, w.
WhippleResult whipple_transform(const HypergeomParams& p, std::size_t n_index,
                                std::size_t z_index, std::size_t u_index);
/// Default roles: terminating parameter as -N, last other numerator as z,
/// first denominator as u.
WhippleResult whipple_transform(const HypergeomParams& p);

/// LHS - RHS of the partial-fraction identity
///   sum_{k=0..n} (-n)_k/k! C(n-i+k, n-i) / (x+k)
///     = n! (1-x)_{n-i} / ((n-i)! (x)_{n+1});
/// exactly zero away from the poles x in {0, -1, ..., -n}.
Rational lagrange_identity_residual(long n, long i, const Rational& x);

/// sum_{k=0..n} (-n)_k (n-i+1)_k / ((1)_k (l+2)_k) * k^r;
/// vanishes whenever i + l < n, l >= -1, r <= i + l.
Rational vanishing_sum(long n, long i, long l, long r);

}  // namespace alpwave

#endif
