#include "alpwave/fourier.hpp"

#include "alpwave/transform.hpp"
#include "alpwave/wavelets.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

using namespace alpwave;

TEST_CASE("series form") {
    // n=1, m=0: after the 5/2 cancellation the series is 1F2(2; 7/2, 3) with
    // prefactor -(i theta)^3 / 30
    const FourierSeriesForm f = h_hat_series(1, 0);
    CHECK(f.theta_power == 3);
    CHECK(f.prefactor == ExactScalar(Rational(-1, 30)));
    CHECK(f.series_num == std::vector<Rational>{Rational(2), Rational(5, 2)});
    CHECK(f.series_den ==
          std::vector<Rational>{Rational(5, 2), Rational(7, 2), Rational(3)});

    // even j delegates to the smaller family
    const FourierSeriesForm g = h_hat_series(4, 2);
    CHECK(g.n == 3);
    CHECK(g.m == 2);

    // j=0 series starts at theta^{n+1}
    CHECK(h_hat_series(3, 3).theta_power == 4);
}

TEST_CASE("spot values") {
    const std::complex<double> i(0, 1);
    CHECK(std::abs(h_hat(0, 0, M_PI) - (-4.0 * i / M_PI)) <= 1e-14);
    CHECK(std::abs(h_hat_oracle(0, 0, M_PI) - (-4.0 * i / M_PI)) <= 1e-14);
    CHECK(h_hat(5, 2, 0.0) == std::complex<double>(0, 0));
    CHECK(std::abs(psi_hat(0, 0, 2 * M_PI) - 2.0 * i / M_PI) <= 1e-14);
    CHECK(psi_hat(3, 1, 0.0) == std::complex<double>(0, 0));
    // |psi_hat| = |h_hat(theta/2)| / 2
    CHECK(std::abs(psi_hat(4, 2, 3.7)) ==
          doctest::Approx(std::abs(h_hat(4, 2, 1.85)) / 2).epsilon(1e-13));
}

TEST_CASE("closed form against the oracle") {
    for (long n = 0; n <= 8; ++n)
        for (long m = 0; m <= n; ++m)
            for (double th : {0.5, 1.0, M_PI, 10.0})
                CHECK(std::abs(h_hat(n, m, th) - h_hat_oracle(n, m, th)) <= 1e-10);
}

TEST_CASE("parity of the transform") {
    for (long n = 1; n <= 5; ++n)
        for (long m = 0; m <= n; ++m) {
            const std::complex<double> plus = h_hat(n, m, 1.3);
            CHECK(std::abs(h_hat(n, m, -1.3) - std::conj(plus)) <= 1e-13);
            // h even (m odd) gives a real transform, h odd gives imaginary
            if (m % 2)
                CHECK(std::abs(plus.imag()) <= 1e-13);
            else
                CHECK(std::abs(plus.real()) <= 1e-13);
        }
    // h^1_1 is even, so the oracle value is purely real
    CHECK(std::abs(h_hat_oracle(1, 1, 2.0).imag()) <= 1e-14);
}

TEST_CASE("decay at large arguments") {
    // composite quadrature resolves the oscillation where the series cannot
    const auto hat = [](long n, long m, double theta) {
        const PiecewisePoly h = wavelet_polynomial(n, m);
        const auto& right = h.pieces()[1];
        std::vector<double> u, w;
        gauss_legendre(16, u, w);
        const long segs = 8 + static_cast<long>(theta / 4);
        std::complex<double> j{};
        for (long s = 0; s < segs; ++s) {
            const double mid = (s + 0.5) / segs, half = 0.5 / segs;
            for (std::size_t q = 0; q < u.size(); ++q) {
                const double t = mid + half * u[q];
                j += w[q] * half * right.eval_double(t) *
                     std::exp(std::complex<double>(0.0, -theta * t));
            }
        }
        return ((m % 2) ? 1.0 : -1.0) * std::conj(j) + j;
    };
    // the modulus oscillates, so compare envelopes over one period
    const auto peak = [&](long n, double theta) {
        double best = 0;
        for (int q = 0; q < 32; ++q)
            best = std::max(best, std::abs(hat(n, n, theta + 2 * M_PI * q / 32)));
        return best;
    };
    for (long n = 0; n <= 4; ++n) {
        const double v2 = peak(n, 1e2);
        const double v3 = peak(n, 1e3);
        CHECK(v2 < 0.5);
        CHECK(v3 < v2);
    }
    // the composite rule agrees with the closed form where both apply
    CHECK(std::abs(hat(3, 1, 10.0) - h_hat(3, 1, 10.0)) <= 1e-10);
}

TEST_CASE("exact Taylor data") {
    // int_{-1}^1 t^3 h^1_0 dt = -1/5, so the s=3 coefficient is -1/(5*3!)
    const auto e = h_hat_taylor(1, 0, 5);
    CHECK(e[0].is_zero());
    CHECK(e[1].is_zero());
    CHECK(e[2].is_zero());
    CHECK(e[3] == ExactScalar(Rational(-1, 30)));
}

TEST_CASE("even-moment product formula") {
    // the r-th even moment of h^n_{n-j} in closed form, j odd
    auto rhs = [](long n, long j, long r) {
        Rational v(Int(1) << (j + 1));
        v *= Rational(Int(factorial((j + 1) / 2)) * Int(factorial(n + 1)) *
                      Int(factorial(n + 2)));
        v /= Rational(Int(factorial(j + 2)) * Int(factorial(2 * n + 3)) *
                      Int(factorial(n + (3 - j) / 2)));
        if (((j + 1) / 2) % 2) v = -v;
        v *= pochhammer(Rational(n + 3, 2), r) * pochhammer(Rational(n + 4, 2), r);
        v /= Rational(factorial(r)) * pochhammer(Rational(j + 4, 2), r) *
             pochhammer(Rational(2 * n + 5, 2), r) *
             pochhammer(Rational(2 * n + 5 - j, 2), r);
        v /= Rational(Int(1) << (2 * r));
        return ExactScalar(v) * ExactScalar::sqrt_of(Rational(2 * n - 2 * j + 1));
    };
    for (auto [n, j, r] : {std::tuple<long, long, long>{3, 1, 0}, {3, 1, 1}, {5, 3, 2}}) {
        const long s = n + 2 + 2 * r;
        const ExactScalar lhs =
            wavelet_polynomial(n, n - j).moment(s) / ExactScalar(Rational(factorial(s)));
        CHECK(lhs == rhs(n, j, r));
    }
}

TEST_CASE("fourth-order ODE annihilates the series") {
    for (auto [n, m] : {std::pair<long, long>{1, 0}, {5, 2}, {4, 4}, {6, 1}}) {
        for (const auto& c : fourier_ode_residual(n, m, 40)) CHECK(c.is_zero());
    }
    CHECK_THROWS(fourier_ode_residual(2, 0, 2));
}
