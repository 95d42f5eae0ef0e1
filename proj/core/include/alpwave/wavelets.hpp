#ifndef ALPWAVE_WAVELETS_HPP
#define ALPWAVE_WAVELETS_HPP

#include "alpwave/poly.hpp"
#include "alpwave/report.hpp"

namespace alpwave {

/// Coefficients d^i_{n,k}, k = 0..n, of the [0,1) piece of h^n_{n-i}.
/// Defined for i = 0 or i odd; each value is rational * sqrt(2n-2i+1).
std::vector<ExactScalar> wavelet_coefficients(long n, long i);

/// h^n_m on [-1,1): the [0,1) piece from the coefficient table (index
/// i = n - m; even positive i delegates to the (n-1, i-1) table), the
/// [-1,0) piece is the reflection h(-t) = (-1)^{m+1} h(t).
PiecewisePoly wavelet_polynomial(long n, long m);

struct WaveletFamily {
    long n = 0;
    std::vector<PiecewisePoly> members;  // indexed by subscript m = 0..n
};

WaveletFamily wavelet_family(long n);

/// Exact check of the five defining conditions for the whole family, plus the
/// i = 0 closed form h^n_n(t) = (-1)^n sqrt(2) p-hat_n(1-2t) on [0,1).
Report verify_conditions(long n);

struct DiffopResult {
    Polynomial<ExactScalar> lowered;   // L_i h^n_{n-i} on (0,1)
    Polynomial<ExactScalar> residual;  // second-order operator applied to lowered
    bool lowered_matches_2f1 = false;  // lowered proportional to 2F1(-n+i-1, n+2; 1; t)
};

/// Applies the index-lowering operator L_i (a product of D - n + 2m and
/// D + n - i + 1 + 2m factors, D = t d/dt) and then the hypergeometric
/// second-order operator; the residual is identically zero.  Requires i odd.
DiffopResult diffop_residual(long n, long i);

}  // namespace alpwave

#endif
