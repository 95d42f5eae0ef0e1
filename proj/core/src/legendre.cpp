#include "alpwave/legendre.hpp"

#include "alpwave/hypergeom.hpp"

namespace alpwave {

Polynomial<ExactScalar> legendre_orthonormal(long degree) {
    if (degree < 0) throw std::invalid_argument("legendre_orthonormal: negative degree");
    // 2F1(-n, n+1; 1; u) as a polynomial in u, then u = (1-t)/2.
    std::vector<ExactScalar> cu(degree + 1);
    Rational term = 1;
    cu[0] = ExactScalar(term);
    for (long k = 1; k <= degree; ++k) {
        term *= Rational(-degree + (k - 1)) * Rational(degree + 1 + (k - 1));
        term /= Rational(k) * Rational(k);
        cu[k] = ExactScalar(term);
    }
    Polynomial<ExactScalar> in_u(std::move(cu));
    Polynomial<ExactScalar> in_t = in_u.compose_affine(Rational(-1, 2), Rational(1, 2));
    // sqrt((2n+1)/2)
    return in_t * ExactScalar::sqrt_of(Rational(2 * degree + 1, 2));
}

std::vector<Polynomial<ExactScalar>> legendre_family(long n) {
    std::vector<Polynomial<ExactScalar>> fam;
    fam.reserve(n + 1);
    for (long j = 0; j <= n; ++j) fam.push_back(legendre_orthonormal(j));
    return fam;
}

double scaling_eval(long n, long j, double t) {
    if (j < 0 || j > n) throw std::invalid_argument("scaling_eval: need 0 <= j <= n");
    if (t < 0.0 || t >= 1.0) return 0.0;
    return legendre_orthonormal(j).eval_double(2 * t - 1);
}

ExactScalar scaling_eval_exact(long n, long j, const Rational& t) {
    if (j < 0 || j > n) throw std::invalid_argument("scaling_eval: need 0 <= j <= n");
    if (t < 0 || t >= 1) return ExactScalar();
    return legendre_orthonormal(j).eval(ExactScalar(2 * t - 1));
}

RefinementPair refinement_matrices(long n) {
    const auto fam = legendre_family(n);
    RefinementPair pair;
    pair.n = n;
    pair.c_minus1 = Matrix<ExactScalar>(n + 1, n + 1);
    pair.c_plus1 = Matrix<ExactScalar>(n + 1, n + 1);
    const ExactScalar two(2);
    for (long j = 0; j <= n; ++j) {
        for (long k = 0; k <= n; ++k) {
            const auto right = fam[k].compose_affine(Rational(2), Rational(-1));
            const auto left = fam[k].compose_affine(Rational(2), Rational(1));
            pair.c_plus1.at(j, k) = two * (fam[j] * right).integral(Rational(0), Rational(1));
            pair.c_minus1.at(j, k) = two * (fam[j] * left).integral(Rational(-1), Rational(0));
        }
    }
    return pair;
}

}  // namespace alpwave
