#ifndef ALPWAVE_FILTERBANK_HPP
#define ALPWAVE_FILTERBANK_HPP

#include "alpwave/legendre.hpp"
#include "alpwave/matrix.hpp"
#include "alpwave/report.hpp"

namespace alpwave {

/// Wavelet refinement matrices: on [-1,1),
/// Psi_n((t+1)/2) = D_{-1} P_n(2t+1) chi_[-1,0) + D_1 P_n(2t-1) chi_[0,1).
/// D_1 is upper triangular with positive diagonal.
struct FilterMatrices {
    long n = 0;
    Matrix<ExactScalar> d_plus1;
    Matrix<ExactScalar> d_minus1;
    RefinementPair refinement;
};

enum class D1Method { closed, alternate, recurrence, integral };

/// (D^n_1)_{n-i, n-j} by the balanced 4F3 closed form.  Requires j <= i;
/// i = 0 gives sqrt(2) on the diagonal, even positive i delegates to the
/// (n-1) family (zero for j = 0, since that column lies outside it).
ExactScalar d1_entry_closed(long n, long i, long j);

/// Same entry via the Whipple-transformed series; requires i odd and j < i.
ExactScalar d1_entry_alt(long n, long i, long j);

/// Full filter matrices; all four methods agree entrywise.  `integral` is the
/// direct 2 * int_0^1 h^n_r(t) phat_c(2t-1) dt oracle; D_{-1} is filled from
/// the parity rule (D_{-1})_{r,c} = (-1)^{r+c+1} (D_1)_{r,c}.
FilterMatrices d1_matrix(long n, D1Method method);

/// Three-term recurrence in i: from (D^n_1)_{n-i,n-j} and (D^n_1)_{n-i-2,n-j}
/// computes (D^n_1)_{n-i+2,n-j}.  Requires i odd, j < i-2, i+2 <= n.
ExactScalar recurrence_in_i(long n, long i, long j, const ExactScalar& entry_i,
                            const ExactScalar& entry_i_plus2);

/// Three-term recurrence in n: from (D^n_1)_{n-i,n-j} and
/// (D^{n-1}_1)_{n-i-1,n-j-1} computes (D^{n+1}_1)_{n-i+1,n-j+1}.
/// Requires i odd, j < i < n.
ExactScalar recurrence_in_n(long n, long i, long j, const ExactScalar& entry_n,
                            const ExactScalar& entry_n_minus1);

/// Exact checks of the filter-bank identities: 4I = D-1 D-1^T + D1 D1^T,
/// 2I = C-1 C-1^T + C1 C1^T, C-1 D-1^T + C1 D1^T = 0, the parity rule, row
/// normalization, same-parity row orthogonality, the interleaved unitary
/// matrices, and the refinement identities as polynomial identities per piece.
Report validate_filterbank(long n);

}  // namespace alpwave

#endif
