#include "alpwave/fourier.hpp"

#include "alpwave/hypergeom.hpp"
#include "alpwave/poly.hpp"
#include "alpwave/transform.hpp"
#include "alpwave/wavelets.hpp"

#include <cmath>

namespace alpwave {

namespace {

int parity_sign(long p) { return (p % 2) ? -1 : 1; }

std::complex<double> neg_i_theta_pow(double theta, long p) {
    std::complex<double> base(0.0, -theta), acc(1.0, 0.0);
    for (long k = 0; k < p; ++k) acc *= base;
    return acc;
}

}  // namespace

FourierSeriesForm h_hat_series(long n, long m) {
    if (n < 0 || m < 0 || m > n) throw std::invalid_argument("h_hat_series: need 0 <= m <= n");
    const long j = n - m;
    if (j > 0 && j % 2 == 0) return h_hat_series(n - 1, m);

    FourierSeriesForm f;
    f.n = n;
    f.m = m;
    if (j == 0) {
        // from the s = n+1+2r moment substitution
        f.theta_power = n + 1;
        f.prefactor = ExactScalar(Rational(2 * Int(factorial(n + 1)), Int(factorial(2 * n + 2)))) *
                      ExactScalar::sqrt_of(Rational(2 * n + 1));
        f.series_num = {Rational(n + 2, 2), Rational(n + 3, 2)};
        f.series_den = {Rational(3, 2), Rational(2 * n + 3, 2), Rational(n + 2)};
        return f;
    }

    f.theta_power = n + 2;
    Rational pref(Int(1) << (j + 1), 1);
    pref *= Rational(Int(factorial((j + 1) / 2)) * Int(factorial(n + 1)) * Int(factorial(n + 2)));
    pref /= Rational(Int(factorial(j + 2)) * Int(factorial(2 * n + 3)) *
                     Int(factorial(n + (3 - j) / 2)));
    if (parity_sign((j + 1) / 2) < 0) pref = -pref;
    f.prefactor = ExactScalar(pref) * ExactScalar::sqrt_of(Rational(2 * n - 2 * j + 1));
    f.series_num = {Rational(n + 3, 2), Rational(n + 4, 2)};
    f.series_den = {Rational(j + 4, 2), Rational(2 * n + 5, 2), Rational(2 * n + 5 - j, 2)};
    return f;
}

std::complex<double> h_hat(long n, long m, double theta, double tol) {
    if (theta == 0.0) return {0.0, 0.0};
    const FourierSeriesForm f = h_hat_series(n, m);
    std::vector<double> num, den;
    for (const auto& a : f.series_num) num.push_back(to_double(a));
    for (const auto& b : f.series_den) den.push_back(to_double(b));
    const double series = eval_pfq_truncated(num, den, -theta * theta / 4, tol).value;
    return f.prefactor.to_double() * series * neg_i_theta_pow(theta, f.theta_power);
}

std::complex<double> psi_hat(long n, long m, double theta, double tol) {
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -theta / 2));
    return 0.5 * phase * h_hat(n, m, theta / 2, tol);
}

std::complex<double> h_hat_oracle(long n, long m, double theta) {
    const PiecewisePoly h = wavelet_polynomial(n, m);

    if (std::abs(theta) < 1.0) {
        // exact moment power series; safe from cancellation near zero
        std::complex<double> sum = 0;
        int small_streak = 0;
        for (long s = 0; s <= 200; ++s) {
            const double es = (h.moment(s) / ExactScalar(Rational(factorial(s)))).to_double();
            const std::complex<double> term = es * neg_i_theta_pow(theta, s);
            sum += term;
            if (s <= n + 2) continue;  // moments vanish through s = n+1
            if (std::abs(term) <= 1e-18 * (1.0 + std::abs(sum))) {
                if (++small_streak == 3) break;
            } else {
                small_streak = 0;
            }
        }
        return sum;
    }

    // J = int_0^1 h(t) e^{-i theta t} dt by Gauss-Legendre quadrature; the
    // node count is far beyond exactness for the polynomial factor and the
    // remaining e^{-i theta t} error decays super-exponentially for |theta|
    // up to the tested range
    const auto& right = h.pieces()[1];
    std::vector<double> u, w;
    gauss_legendre(48, u, w);
    std::complex<double> j_sum = 0;
    for (std::size_t q = 0; q < u.size(); ++q) {
        const double t = (u[q] + 1) / 2;
        j_sum += w[q] / 2 * right.eval_double(t) *
                 std::exp(std::complex<double>(0.0, -theta * t));
    }
    const double sign = (m % 2) ? 1.0 : -1.0;  // (-1)^{m+1}
    return sign * std::conj(j_sum) + j_sum;
}

std::vector<ExactScalar> h_hat_taylor(long n, long m, long smax) {
    const PiecewisePoly h = wavelet_polynomial(n, m);
    std::vector<ExactScalar> e(smax + 1);
    for (long s = 0; s <= smax; ++s)
        e[s] = h.moment(s) / ExactScalar(Rational(factorial(s)));
    return e;
}

std::vector<ExactScalar> fourier_ode_residual(long n, long m, long order) {
    if (order < 4) throw std::invalid_argument("fourier_ode_residual: order too small");
    long nn = n, j = n - m;
    if (j % 2 == 0) {  // includes j = 0, which becomes (n-1, -1)
        nn -= 1;
        j -= 1;
    }
    const std::vector<ExactScalar> e = h_hat_taylor(n, m, order);

    std::vector<ExactScalar> residual(order + 1);
    for (long s = 0; s <= order; ++s) {
        const Rational half_s(s, 2);
        const Rational p4 = (half_s - Rational(nn + 2, 2)) * (half_s + Rational(nn + 1, 2)) *
                            (half_s + Rational(j - nn, 2)) * (half_s + Rational(nn + 1 - j, 2));
        residual[s] = e[s] * ExactScalar(p4);
        if (s >= 2) {
            const Rational u(s - 2, 2);
            const Rational p2 = (u + Rational(1, 2)) * (u + 1);
            residual[s] -= e[s - 2] * ExactScalar(p2 / 4);
        }
    }
    return residual;
}

}  // namespace alpwave
