#include "alpwave/hypergeom.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace alpwave;

namespace {

HypergeomParams make(std::vector<Rational> num, std::vector<Rational> den, Rational arg = 1) {
    HypergeomParams p;
    p.numerator = std::move(num);
    p.denominator = std::move(den);
    p.argument = std::move(arg);
    return p;
}

// fixed-length reference summation, no adaptivity
double fixed_sum(const std::vector<double>& num, const std::vector<double>& den, double arg,
                 long terms) {
    double sum = 0, term = 1;
    for (long k = 0; k < terms; ++k) {
        sum += term;
        double ratio = arg / (k + 1);
        for (double a : num) ratio *= a + k;
        for (double b : den) ratio /= b + k;
        term *= ratio;
    }
    return sum;
}

}  // namespace

TEST_CASE("terminating series") {
    CHECK(eval_pfq_terminating(make({-2, 1}, {2})) == Rational(1, 3));
    CHECK(eval_pfq_terminating(make({0, Rational(22, 7)}, {Rational(1, 2)})) == 1);
    // Chu-Vandermonde vanishing case from the n=3, i=1, l=0, r=0 sum
    CHECK(eval_pfq_terminating(make({-3, 3}, {2})) == 0);
    CHECK_THROWS(eval_pfq_terminating(make({1, 2}, {3})));
    // denominator hits zero at k=2 before the series terminates at k=4
    CHECK_THROWS(eval_pfq_terminating(make({-4, 1}, {-2})));
    // but termination before the bad denominator index is fine
    CHECK(eval_pfq_terminating(make({-1, 1}, {-2})) == Rational(3, 2));
}

TEST_CASE("terminating series is invariant under parameter permutations") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(1, 6);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> num = {Rational(-small(rng)), Rational(small(rng), 2),
                                     Rational(small(rng))};
        std::vector<Rational> den = {Rational(small(rng)), Rational(small(rng), 3)};
        const Rational ref = eval_pfq_terminating(make(num, den, Rational(2, 3)));
        std::shuffle(num.begin(), num.end(), rng);
        std::shuffle(den.begin(), den.end(), rng);
        CHECK(eval_pfq_terminating(make(num, den, Rational(2, 3))) == ref);
    }
}

TEST_CASE("truncated series against fixed-length summation") {
    const std::vector<double> num = {2.0, 2.5};
    const std::vector<double> den = {2.5, 3.5, 3.0};
    const TruncatedSum r = eval_pfq_truncated(num, den, -0.25, 1e-14);
    CHECK(r.value == doctest::Approx(fixed_sum(num, den, -0.25, 50)).epsilon(1e-14));
    CHECK(r.terms_used > 0);

    // transform-series parameters at n=4, j=1, theta=10
    const std::vector<double> num2 = {3.5, 4.0};
    const std::vector<double> den2 = {2.5, 6.5, 6.0};
    const TruncatedSum r2 = eval_pfq_truncated(num2, den2, -25.0, 1e-12);
    CHECK(r2.value == doctest::Approx(fixed_sum(num2, den2, -25.0, 200)).epsilon(1e-10));

    CHECK(eval_pfq_truncated(num2, den2, 0.0, 1e-14).value == 1.0);
}

TEST_CASE("balanced 4F3 detection") {
    // the filter-matrix series at n=5, i=3, j=0
    const HypergeomParams p = make(
        {Rational(-3, 2), Rational(-1), Rational(4), Rational(9, 2)},
        {Rational(5), Rational(-3, 2), Rational(7, 2)});
    CHECK(is_balanced_4f3(p));
    CHECK(termination_index(p) == 1);
    CHECK_FALSE(is_balanced_4f3(make({-2, 1}, {2})));
}

TEST_CASE("Whipple transformation") {
    // n=5, i=3, j=0 instance of the filter-matrix series
    const HypergeomParams p = make(
        {Rational(-3, 2), Rational(-1), Rational(4), Rational(9, 2)},
        {Rational(5), Rational(-3, 2), Rational(7, 2)});
    const WhippleResult w = whipple_transform(p);
    CHECK(is_balanced_4f3(w.params));
    CHECK(eval_pfq_terminating(p) == w.prefactor * eval_pfq_terminating(w.params));

    // zero-length series: both sides are the empty sum
    const HypergeomParams q = make({Rational(0), Rational(1, 2), Rational(3), Rational(1, 2)},
                                   {Rational(1), Rational(2), Rational(2)});
    const WhippleResult wq = whipple_transform(q, 0, 1, 0);
    CHECK(wq.prefactor == 1);
    CHECK(eval_pfq_terminating(wq.params) == 1);

    // double application returns to the original value
    const WhippleResult w2 = whipple_transform(w.params);
    CHECK(eval_pfq_terminating(p) ==
          w.prefactor * w2.prefactor * eval_pfq_terminating(w2.params));
}

TEST_CASE("partial-fraction identity") {
    CHECK(lagrange_identity_residual(0, 0, Rational(2)) == 0);
    CHECK(lagrange_identity_residual(1, 0, Rational(2)) == 0);
    CHECK(lagrange_identity_residual(6, 3, Rational(4)) == 0);
    CHECK_THROWS(lagrange_identity_residual(3, 1, Rational(-2)));

    // at x = n-i+1 the common value is the (ee) closed form
    const long n = 6, i = 3;
    Rational lhs = 0;
    for (long k = 0; k <= n; ++k)
        lhs += pochhammer(Rational(-n), k) / Rational(factorial(k)) *
               Rational(binomial(n - i + k, n - i)) / Rational(n - i + 1 + k);
    Rational closed = Rational(factorial(n)) * Rational(factorial(n - i)) /
                      Rational(factorial(2 * n - i + 1));
    if ((n + i) % 2) closed = -closed;
    CHECK(lhs == closed);
}

TEST_CASE("vanishing sums") {
    CHECK(vanishing_sum(3, 1, 0, 0) == 0);
    CHECK(vanishing_sum(8, 2, 3, 5) == 0);
    // outside the hypothesis i + l < n the sum need not vanish
    CHECK(vanishing_sum(2, 2, 0, 1) != 0);
}
