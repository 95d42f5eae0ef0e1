#include "alpwave/wavelets.hpp"

#include "alpwave/legendre.hpp"

#include <sstream>

namespace alpwave {

namespace {

Polynomial<ExactScalar> reflected(const Polynomial<ExactScalar>& p, int sign) {
    // sign * p(-t)
    std::vector<ExactScalar> c(p.coeffs());
    for (std::size_t k = 0; k < c.size(); ++k) {
        int s = sign;
        if (k % 2) s = -s;
        if (s < 0) c[k] = -c[k];
    }
    return Polynomial<ExactScalar>(std::move(c));
}

Polynomial<ExactScalar> from_rational(const Polynomial<Rational>& p) {
    std::vector<ExactScalar> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) c.emplace_back(r);
    return Polynomial<ExactScalar>(std::move(c));
}

}  // namespace

std::vector<ExactScalar> wavelet_coefficients(long n, long i) {
    if (n < 0 || i < 0 || i > n) throw std::invalid_argument("wavelet_coefficients: need 0 <= i <= n");
    if (i > 0 && i % 2 == 0)
        throw std::invalid_argument(
            "wavelet_coefficients: table covers i = 0 or i odd; even i comes from the (n-1, i-1) table");

    const Int surd = 2 * n - 2 * i + 1;
    Rational pref = Rational((n % 2) ? -1 : 1) / pochhammer(Rational(-n), i);

    std::vector<ExactScalar> d(n + 1);
    for (long k = 0; k <= n; ++k) {
        Rational v = pochhammer(Rational(-n), k) * pochhammer(Rational(n - i + 1), k);
        const Rational kf(factorial(k));
        v /= kf * kf;
        for (long m = 0; 2 * m <= i - 1; ++m) v *= (n + k + 1 - 2 * m);
        for (long m = 0; 2 * m <= i - 3; ++m) v *= (n - k - 1 - 2 * m);
        d[k] = ExactScalar(pref * v, surd);
    }
    return d;
}

PiecewisePoly wavelet_polynomial(long n, long m) {
    if (n < 0 || m < 0 || m > n) throw std::invalid_argument("wavelet_polynomial: need 0 <= m <= n");
    const long i = n - m;
    std::vector<ExactScalar> d =
        (i == 0 || i % 2) ? wavelet_coefficients(n, i) : wavelet_coefficients(n - 1, i - 1);
    Polynomial<ExactScalar> right(std::move(d));
    // condition (iv): h(-t) = (-1)^{m+1} h(t)
    Polynomial<ExactScalar> left = reflected(right, (m % 2) ? 1 : -1);
    return PiecewisePoly({Rational(-1), Rational(0), Rational(1)}, {std::move(left), std::move(right)});
}

WaveletFamily wavelet_family(long n) {
    WaveletFamily fam;
    fam.n = n;
    fam.members.reserve(n + 1);
    for (long m = 0; m <= n; ++m) fam.members.push_back(wavelet_polynomial(n, m));
    return fam;
}

Report verify_conditions(long n) {
    Report rep;
    rep.title = "wavelet conditions n=" + std::to_string(n);
    const WaveletFamily fam = wavelet_family(n);

    bool pass = true;
    std::ostringstream witness;
    for (long m = 0; m <= n; ++m)
        for (const auto& piece : fam.members[m].pieces())
            if (piece.degree() > n) {
                pass = false;
                witness << " m=" << m;
            }
    rep.add("(i) piecewise degree <= n", pass, witness.str());

    pass = true;
    witness.str("");
    for (long m = 0; m <= n; ++m)
        for (long s = 0; s <= n; ++s)
            if (!fam.members[m].moment(s).is_zero()) {
                pass = false;
                witness << " (m=" << m << ",s=" << s << ")";
            }
    rep.add("(ii) vanishing moments on [-1,1]", pass, witness.str());

    pass = true;
    witness.str("");
    for (long a = 0; a <= n; ++a)
        for (long b = a; b <= n; ++b) {
            const ExactScalar ip = fam.members[a].inner_product(fam.members[b]);
            const ExactScalar want = (a == b) ? ExactScalar(2) : ExactScalar();
            if (ip != want) {
                pass = false;
                witness << " (" << a << "," << b << ")";
            }
        }
    rep.add("(iii) Gram matrix = 2I", pass, witness.str());

    pass = true;
    witness.str("");
    for (long m = 0; m <= n; ++m) {
        const auto& left = fam.members[m].pieces()[0];
        const auto& right = fam.members[m].pieces()[1];
        if (left != reflected(right, (m % 2) ? 1 : -1)) {
            pass = false;
            witness << " m=" << m;
        }
    }
    rep.add("(iv) parity h(-t) = (-1)^{m+1} h(t)", pass, witness.str());

    pass = true;
    witness.str("");
    for (long m = 0; m <= n; ++m)
        for (long s = 0; s < m; ++s)
            if (!fam.members[m].moment_over(s, Rational(0), Rational(1)).is_zero()) {
                pass = false;
                witness << " (m=" << m << ",s=" << s << ")";
            }
    rep.add("(v) one-sided moments vanish for s < m", pass, witness.str());

    // i = 0 member in closed form
    Polynomial<ExactScalar> want =
        legendre_orthonormal(n).compose_affine(Rational(-2), Rational(1)) *
        ExactScalar(Rational((n % 2) ? -1 : 1), 2);
    rep.add("h^n_n = (-1)^n sqrt(2) phat_n(1-2t) on [0,1)",
            fam.members[n].pieces()[1] == want);

    return rep;
}

DiffopResult diffop_residual(long n, long i) {
    if (i < 1 || i > n || i % 2 == 0)
        throw std::invalid_argument("diffop_residual: need i odd, 1 <= i <= n");

    const std::vector<ExactScalar> d = wavelet_coefficients(n, i);
    std::vector<ExactScalar> lowered(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        Rational f = 1;
        for (long m = 0; 2 * m <= i - 3; ++m) f *= (static_cast<long>(k) - n + 2 * m);
        for (long m = 0; 2 * m <= i - 1; ++m) f *= (static_cast<long>(k) + n - i + 1 + 2 * m);
        lowered[k] = d[k] * ExactScalar(f);
    }

    DiffopResult out;
    out.lowered = Polynomial<ExactScalar>(std::move(lowered));

    const auto g1 = out.lowered.derivative();
    const auto g2 = g1.derivative();
    const Polynomial<ExactScalar> t_1mt(
        std::vector<ExactScalar>{ExactScalar(0), ExactScalar(1), ExactScalar(-1)});
    const Polynomial<ExactScalar> lin(
        std::vector<ExactScalar>{ExactScalar(1), ExactScalar(-(i + 2))});
    out.residual = t_1mt * g2 + lin * g1 + out.lowered * ExactScalar((n - i + 1) * (n + 2));

    // 2F1(-n+i-1, n+2; 1; t), a polynomial of degree n-i+1
    std::vector<Rational> f2(n - i + 2);
    for (long k = 0; k <= n - i + 1; ++k) {
        const Rational kf(factorial(k));
        f2[k] = pochhammer(Rational(-n + i - 1), k) * pochhammer(Rational(n + 2), k) / (kf * kf);
    }
    const auto f2poly = from_rational(Polynomial<Rational>(std::move(f2)));
    out.lowered_matches_2f1 = false;
    if (!out.lowered.is_zero() && out.lowered.degree() == f2poly.degree()) {
        const ExactScalar ratio =
            out.lowered.coeff(out.lowered.degree()) / f2poly.coeff(f2poly.degree());
        out.lowered_matches_2f1 = !ratio.is_zero() && (f2poly * ratio == out.lowered);
    }
    return out;
}

}  // namespace alpwave
