#include "alpwave/hypergeom.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace alpwave {

namespace {

bool is_nonpositive_integer(const Rational& r) {
    return denominator(r) == 1 && r <= 0;
}

}  // namespace

long termination_index(const HypergeomParams& p) {
    long best = -1;
    Int best_abs = 0;
    for (std::size_t j = 0; j < p.numerator.size(); ++j) {
        const Rational& a = p.numerator[j];
        if (!is_nonpositive_integer(a)) continue;
        const Int k = -numerator(a);
        if (best < 0 || k < best_abs) {
            best = static_cast<long>(j);
            best_abs = k;
        }
    }
    return best;
}

bool is_balanced_4f3(const HypergeomParams& p) {
    if (p.numerator.size() != 4 || p.denominator.size() != 3 || p.argument != 1) return false;
    if (termination_index(p) < 0) return false;
    Rational sn = 0, sd = 0;
    for (const auto& a : p.numerator) sn += a;
    for (const auto& b : p.denominator) sd += b;
    return sd == sn + 1;
}

Rational eval_pfq_terminating(const HypergeomParams& p) {
    const long ti = termination_index(p);
    if (ti < 0)
        throw std::domain_error("eval_pfq_terminating: no nonpositive integer numerator parameter");
    const long kmax = -numerator(p.numerator[ti]).convert_to<long>();

    Rational sum = 0, term = 1;
    for (long k = 0; k <= kmax; ++k) {
        if (k > 0) {
            for (const auto& a : p.numerator) term *= (a + (k - 1));
            for (const auto& b : p.denominator) {
                const Rational bk = b + (k - 1);
                if (bk == 0)
                    throw std::domain_error(
                        "eval_pfq_terminating: denominator parameter hits zero before termination");
                term /= bk;
            }
            term /= k;
            term *= p.argument;
        }
        sum += term;
    }
    return sum;
}

TruncatedSum eval_pfq_truncated(const std::vector<double>& numerator,
                                const std::vector<double>& denominator,
                                double argument, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("eval_pfq_truncated: tol must be positive");
    if (!std::isfinite(argument))
        throw std::invalid_argument("eval_pfq_truncated: argument must be finite");

    constexpr long kMaxTerms = 1000000;
    double sum = 0, term = 1;
    int small_streak = 0;
    for (long k = 0; k < kMaxTerms; ++k) {
        if (k > 0) {
            for (double a : numerator) term *= (a + (k - 1));
            for (double b : denominator) term /= (b + (k - 1));
            term *= argument / k;
        }
        sum += term;
        if (std::abs(term) < tol * std::abs(sum)) {
            if (++small_streak == 3) return {sum, k + 1};
        } else {
            small_streak = 0;
        }
    }
    throw std::runtime_error("eval_pfq_truncated: no convergence within 10^6 terms");
}

WhippleResult whipple_transform(const HypergeomParams& p, std::size_t n_index,
                                std::size_t z_index, std::size_t u_index) {
    if (!is_balanced_4f3(p))
        throw std::domain_error("whipple_transform: input is not a terminating balanced 4F3 at 1");
    if (n_index >= 4 || z_index >= 4 || u_index >= 3 || n_index == z_index)
        throw std::invalid_argument("whipple_transform: bad role indices");
    if (!is_nonpositive_integer(p.numerator[n_index]))
        throw std::domain_error("whipple_transform: selected parameter does not terminate the series");

    const long n = -numerator(p.numerator[n_index]).convert_to<long>();
    const Rational z = p.numerator[z_index];
    std::vector<Rational> xy;
    for (std::size_t j = 0; j < 4; ++j)
        if (j != n_index && j != z_index) xy.push_back(p.numerator[j]);
    const Rational u = p.denominator[u_index];
    std::vector<Rational> vw;
    for (std::size_t j = 0; j < 3; ++j)
        if (j != u_index) vw.push_back(p.denominator[j]);
    const Rational v = vw[0], w = vw[1];

    const Rational pv = pochhammer(v, n), pw = pochhammer(w, n);
    if (pv == 0 || pw == 0)
        throw std::domain_error("whipple_transform: vanishing Pochhammer in prefactor");

    WhippleResult out;
    out.prefactor = pochhammer(1 - v + z - n, n) * pochhammer(1 - w + z - n, n) / (pv * pw);
    out.params.numerator = {Rational(-n), u - xy[0], u - xy[1], z};
    out.params.denominator = {u, 1 - v + z - n, 1 - w + z - n};
    out.params.argument = 1;
    return out;
}

WhippleResult whipple_transform(const HypergeomParams& p) {
    const long ti = termination_index(p);
    if (ti < 0)
        throw std::domain_error("whipple_transform: series does not terminate");
    std::size_t z_index = 3;
    if (z_index == static_cast<std::size_t>(ti)) z_index = 2;
    return whipple_transform(p, static_cast<std::size_t>(ti), z_index, 0);
}

Rational lagrange_identity_residual(long n, long i, const Rational& x) {
    if (n < 0 || i < 0 || i > n)
        throw std::invalid_argument("lagrange_identity_residual: need 0 <= i <= n");
    for (long k = 0; k <= n; ++k)
        if (x + k == 0)
            throw std::domain_error("lagrange_identity_residual: x at a pole");

    Rational lhs = 0;
    for (long k = 0; k <= n; ++k) {
        const Rational num = pochhammer(Rational(-n), k) * binomial(n - i + k, n - i);
        lhs += num / (Rational(factorial(k)) * (x + k));
    }
    const Rational rhs = Rational(factorial(n)) * pochhammer(1 - x, n - i) /
                         (Rational(factorial(n - i)) * pochhammer(x, n + 1));
    return lhs - rhs;
}

Rational vanishing_sum(long n, long i, long l, long r) {
    if (n < 0 || l < -1 || r < 0) throw std::invalid_argument("vanishing_sum: bad arguments");
    Rational sum = 0;
    for (long k = 0; k <= n; ++k) {
        Rational kr = 1;
        for (long j = 0; j < r; ++j) kr *= k;
        sum += pochhammer(Rational(-n), k) * pochhammer(Rational(n - i + 1), k) * kr /
               (pochhammer(Rational(1), k) * pochhammer(Rational(l + 2), k));
    }
    return sum;
}

}  // namespace alpwave
