#ifndef ALPWAVE_FOURIER_HPP
#define ALPWAVE_FOURIER_HPP

#include "alpwave/exact.hpp"

#include <complex>
#include <vector>

namespace alpwave {

/// Closed 2F3 form of the transform h-hat^n_m(theta) = int_{-1}^{1} h^n_m(t)
/// e^{-i theta t} dt:
///   prefactor * (-i theta)^theta_power * 2F3(num; den; -theta^2/4).
struct FourierSeriesForm {
    long n = 0;
    long m = 0;
    long theta_power = 0;              // n+2 for odd j = n-m, n+1 for j = 0
    ExactScalar prefactor;             // rational * sqrt(2n-2j+1)
    std::vector<Rational> series_num;  // 2F3 numerator parameters
    std::vector<Rational> series_den;  // 2F3 denominator parameters
};

/// Resolves the even-j reduction down to an odd-j (or j = 0) series.
FourierSeriesForm h_hat_series(long n, long m);

/// h-hat^n_m(theta) via the 2F3 closed form (truncated series evaluation).
std::complex<double> h_hat(long n, long m, double theta, double tol = 1e-14);

/// psi-hat^n_m(theta) = e^{-i theta/2}/2 * h-hat^n_m(theta/2).
std::complex<double> psi_hat(long n, long m, double theta, double tol = 1e-14);

/// Independent evaluation from the piecewise polynomial itself: high-order
/// Gauss-Legendre quadrature for |theta| >= 1, exact moment power series
/// below (quadrature of the oscillating product cancels badly near zero).
std::complex<double> h_hat_oracle(long n, long m, double theta);

/// Exact Taylor data: coefficient of (-i theta)^s in h-hat^n_m, s = 0..smax,
/// computed from exact moments of h^n_m.
std::vector<ExactScalar> h_hat_taylor(long n, long m, long smax);

/// Applies the fourth-order operator in D = (theta/2) d/d theta that
/// annihilates h-hat^n_m to the exact Taylor series; all returned residual
/// coefficients (orders 0 .. order-4) are zero.  Even j = n-m uses the
/// (n-1, j-1) substitution.
std::vector<ExactScalar> fourier_ode_residual(long n, long m, long order);

}  // namespace alpwave

#endif
