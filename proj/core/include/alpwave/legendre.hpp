#ifndef ALPWAVE_LEGENDRE_HPP
#define ALPWAVE_LEGENDRE_HPP

#include "alpwave/matrix.hpp"
#include "alpwave/poly.hpp"

namespace alpwave {

/// Monomial coefficients of the Legendre polynomial of the given degree,
/// orthonormal on [-1,1] with positive leading coefficient.
Polynomial<ExactScalar> legendre_orthonormal(long degree);

/// p-hat_0 .. p-hat_n.
std::vector<Polynomial<ExactScalar>> legendre_family(long n);

/// Scaling function phi_j(t) = p-hat_j(2t-1) on [0,1), zero elsewhere.
double scaling_eval(long n, long j, double t);
ExactScalar scaling_eval_exact(long n, long j, const Rational& t);

/// Refinement matrices of the scaling vector: on [-1,1),
/// P_n(t) = C_{-1} P_n(2t+1) chi_[-1,0) + C_1 P_n(2t-1) chi_[0,1).
struct RefinementPair {
    long n = 0;
    Matrix<ExactScalar> c_minus1;
    Matrix<ExactScalar> c_plus1;
};

RefinementPair refinement_matrices(long n);

}  // namespace alpwave

#endif
