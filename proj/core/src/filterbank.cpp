#include "alpwave/filterbank.hpp"

#include "alpwave/hypergeom.hpp"
#include "alpwave/wavelets.hpp"

#include <sstream>

namespace alpwave {

namespace {

// Parameter block a..g plus the prefactors h, l of a three-term contiguous
// relation for balanced 4F3 series.
struct RecurrenceBlock {
    Rational a, b, c, d, e, f, g;
    ExactScalar h, l;
};

std::pair<ExactScalar, ExactScalar> k_coefficients(const RecurrenceBlock& blk) {
    const Rational &a = blk.a, &b = blk.b, &c = blk.c, &d = blk.d, &e = blk.e, &f = blk.f,
                   &g = blk.g;
    const Rational denom = a * (e - b) * (f - b) * (g - b);
    if (denom == 0 || a - b - 1 == 0)
        throw std::domain_error("recurrence: degenerate parameter block");
    const Rational t1 = c * d * (a - b) - b * (e - a) * (f - a) * (g - a) / (a - b - 1);
    const ExactScalar k1 = blk.h * ExactScalar(t1 * (1 + a - b) / denom - 1);
    const ExactScalar k2 =
        blk.l * ExactScalar(b * (e - a) * (f - a) * (g - a) * (1 + a - b) / ((a - b - 1) * denom));
    return {k1, k2};
}

RecurrenceBlock block_in_i_even_j(long n, long i, long j) {
    RecurrenceBlock blk;
    blk.a = Rational(j - i + 1, 2);
    blk.b = Rational(-2 * n + i + j, 2);
    blk.c = Rational(-j, 2);
    blk.d = Rational(2 * n + 3 - j, 2);
    blk.e = 1;
    blk.f = Rational(1, 2);
    blk.g = Rational(3, 2);
    blk.h = ExactScalar::sqrt_of(Rational(2 * (n - i) + 5, 2 * (n - i) + 1)) *
            ExactScalar(Rational(-2 * n + i + j - 1, i - j - 2));
    blk.l = ExactScalar::sqrt_of(Rational(2 * (n - i) + 5, 2 * (n - i) - 3)) *
            ExactScalar(Rational((2 * n - i - j - 1) * (2 * n - i - j + 1), (i - j) * (i - j - 2)));
    return blk;
}

RecurrenceBlock block_in_i_odd_j(long n, long i, long j) {
    RecurrenceBlock blk;
    blk.a = Rational(j - i + 2, 2);
    blk.b = Rational(-2 * n + i + j + 1, 2);
    blk.c = Rational(-(j - 1), 2);
    blk.d = Rational(2 * n + 4 - j, 2);
    blk.e = 2;
    blk.f = Rational(3, 2);
    blk.g = Rational(3, 2);
    blk.h = ExactScalar::sqrt_of(Rational(2 * (n - i) + 5, 2 * (n - i) + 1)) *
            ExactScalar(Rational(-2 * n + i + j - 2, i - j - 1));
    blk.l = ExactScalar::sqrt_of(Rational(2 * (n - i) + 5, 2 * (n - i) - 3)) *
            ExactScalar(Rational((2 * n - i - j) * (2 * n - i - j + 2), (i - j + 1) * (i - j - 1)));
    return blk;
}

RecurrenceBlock block_in_n(long n, long i, long j) {
    RecurrenceBlock blk;
    blk.a = Rational(2 * n + 3 - j, 2);
    blk.b = Rational(-2 * n + i + j, 2);
    blk.c = Rational(-j, 2);
    blk.d = Rational(j - i + 1, 2);
    blk.e = 1;
    blk.f = Rational(1, 2);
    blk.g = Rational(3, 2);
    blk.h = ExactScalar::sqrt_of(
                Rational((2 * (n - i) + 3) * (2 * (n - j) + 3),
                         (2 * (n - i) + 1) * (2 * (n - j) + 1))) *
            ExactScalar(Rational(2 * n - i - j + 1, 2 * n - j + 2));
    blk.l = ExactScalar::sqrt_of(
                Rational((2 * (n - i) + 3) * (2 * (n - j) + 3),
                         (2 * (n - i) - 1) * (2 * (n - j) - 1))) *
            ExactScalar(Rational((2 * n - i - j - 1) * (2 * n - i - j + 1),
                                 (2 * n - j) * (2 * n - j + 2)));
    return blk;
}

int parity_sign(long p) { return (p % 2) ? -1 : 1; }

}  // namespace

ExactScalar d1_entry_closed(long n, long i, long j) {
    if (n < 0 || i < 0 || i > n || j < 0)
        throw std::invalid_argument("d1_entry_closed: index out of range");
    if (j > i)
        throw std::invalid_argument("d1_entry_closed: entries with j > i are zero by triangularity");
    if (i == 0) return ExactScalar(Rational(1), 2);  // sqrt(2) on the diagonal
    if (i % 2 == 0) {
        // (D^n_1)_{n-i,n-j} = (D^{n-1}_1)_{n-i,n-j}; the j = 0 column lies
        // outside the smaller family (h has degree n-1 there), so it vanishes.
        if (j == 0) return ExactScalar();
        return d1_entry_closed(n - 1, i - 1, j - 1);
    }

    HypergeomParams p;
    p.numerator = {Rational(j - i, 2), Rational(j - i + 1, 2), Rational(2 * n - i - j + 1, 2),
                   Rational(2 * n - i - j + 2, 2)};
    p.denominator = {Rational(2 * n - i + 3, 2), Rational(-i, 2), Rational(2 * n - 2 * i + 3, 2)};
    p.argument = 1;
    if (!is_balanced_4f3(p)) throw std::logic_error("d1_entry_closed: series is not balanced");

    const Rational series = eval_pfq_terminating(p);
    Rational c = Rational(Int(double_factorial(i))) *
                 pochhammer(Rational(2 * (n - i) + 3, 2), (i - 1) / 2) *
                 pochhammer(Rational(j - n), n - i) * pochhammer(Rational(n - j + 1), n - i) /
                 Rational(factorial(2 * n - i + 1));
    ExactScalar out = ExactScalar::pow2_half(i) * ExactScalar(c);
    out *= ExactScalar(Rational(parity_sign(n + j)));
    out *= ExactScalar::sqrt_of(Rational((2 * (n - i) + 1) * (2 * (n - j) + 1)));
    out *= ExactScalar(series);
    return out;
}

ExactScalar d1_entry_alt(long n, long i, long j) {
    if (n < 0 || i < 1 || i > n || i % 2 == 0 || j < 0 || j >= i)
        throw std::invalid_argument("d1_entry_alt: need i odd and j < i");

    HypergeomParams p;
    ExactScalar pref;
    if (j % 2 == 0) {
        p.numerator = {Rational(-j, 2), Rational(j - i + 1, 2), Rational(2 * n + 3 - j, 2),
                       Rational(-2 * n + i + j, 2)};
        p.denominator = {Rational(1), Rational(1, 2), Rational(3, 2)};
        const Rational num =
            Rational(Int(double_factorial(j + 1)) * Int(double_factorial(i - j - 2)));
        pref = ExactScalar(Rational(parity_sign((i - j + 1) / 2)) * num /
                           pochhammer(Rational(2 * n - i - j + 1, 2), (i + 1) / 2)) /
               ExactScalar::pow2_half(i);
    } else {
        p.numerator = {Rational(-(j - 1), 2), Rational(j - i + 2, 2), Rational(2 * n - j + 4, 2),
                       Rational(-2 * n + i + j + 1, 2)};
        p.denominator = {Rational(2), Rational(3, 2), Rational(3, 2)};
        const Rational num = Rational(Int(double_factorial(j)) * Int(double_factorial(i - j - 1)) *
                                      (2 * n - j + 2) * (j + 1));
        pref = ExactScalar(Rational(parity_sign((i - j) / 2 + 1)) * num /
                           pochhammer(Rational(2 * n - i - j + 2, 2), (i + 1) / 2)) /
               ExactScalar::pow2_half(i + 2);
    }
    p.argument = 1;
    if (!is_balanced_4f3(p)) throw std::logic_error("d1_entry_alt: series is not balanced");
    return pref * ExactScalar::sqrt_of(Rational((2 * (n - i) + 1) * (2 * (n - j) + 1))) *
           ExactScalar(eval_pfq_terminating(p));
}

ExactScalar recurrence_in_i(long n, long i, long j, const ExactScalar& entry_i,
                            const ExactScalar& entry_i_plus2) {
    if (i % 2 == 0 || i < 1 || j < 0 || i + 2 > n)
        throw std::invalid_argument("recurrence_in_i: need i odd with i + 2 <= n");
    if (j >= i - 2) throw std::invalid_argument("recurrence_in_i: need j < i - 2");

    const auto [k1, k2] = k_coefficients(block_in_i_even_j(n, i, j));
    const auto [k1o, k2o] = k_coefficients(block_in_i_odd_j(n, i, j));
    if (k1 != k1o || k2 != k2o)
        throw std::logic_error("recurrence_in_i: j-even and j-odd parameter blocks disagree");
    return -(k1 * entry_i) - (k2 * entry_i_plus2);
}

ExactScalar recurrence_in_n(long n, long i, long j, const ExactScalar& entry_n,
                            const ExactScalar& entry_n_minus1) {
    if (i % 2 == 0 || i < 1 || j < 0 || j >= i || i >= n)
        throw std::invalid_argument("recurrence_in_n: need i odd and j < i < n");
    const auto [k1, k2] = k_coefficients(block_in_n(n, i, j));
    return -(k1 * entry_n) - (k2 * entry_n_minus1);
}

namespace {

ExactScalar alt_entry(long n, long i, long j) {
    if (i == 0) return ExactScalar(Rational(1), 2);
    if (i % 2 == 0) return (j == 0) ? ExactScalar() : alt_entry(n - 1, i - 1, j - 1);
    if (j == i) return d1_entry_closed(n, i, j);
    return d1_entry_alt(n, i, j);
}

Matrix<ExactScalar> build_d1(long n, D1Method method);

Matrix<ExactScalar> build_d1_recurrence(long n) {
    Matrix<ExactScalar> d(n + 1, n + 1);
    d.at(n, n) = ExactScalar(Rational(1), 2);
    if (n == 0) return d;

    // even-i rows are rows of the (n-1) family with a zero appended
    const Matrix<ExactScalar> prev = build_d1_recurrence(n - 1);
    for (long i = 2; i <= n; i += 2) {
        const long r = n - i;
        for (long c = r; c <= n - 1; ++c) d.at(r, c) = prev.at(r, c);
    }

    std::vector<long> odd;
    for (long i = (n % 2) ? n : n - 1; i >= 1; i -= 2) odd.push_back(i);
    for (std::size_t idx = 0; idx < odd.size(); ++idx) {
        const long i = odd[idx];
        const long r = n - i;
        if (idx < 2) {  // seed rows from the closed form
            for (long j = 0; j <= i; ++j) d.at(r, n - j) = d1_entry_closed(n, i, j);
            continue;
        }
        d.at(r, r) = d1_entry_closed(n, i, i);
        for (long j = 0; j < i; ++j)
            d.at(r, n - j) =
                recurrence_in_i(n, i + 2, j, d.at(n - i - 2, n - j), d.at(n - i - 4, n - j));
    }
    return d;
}

Matrix<ExactScalar> build_d1(long n, D1Method method) {
    Matrix<ExactScalar> d(n + 1, n + 1);
    switch (method) {
        case D1Method::closed:
            for (long r = 0; r <= n; ++r)
                for (long c = r; c <= n; ++c) d.at(r, c) = d1_entry_closed(n, n - r, n - c);
            return d;
        case D1Method::alternate:
            for (long r = 0; r <= n; ++r)
                for (long c = r; c <= n; ++c) d.at(r, c) = alt_entry(n, n - r, n - c);
            return d;
        case D1Method::recurrence:
            return build_d1_recurrence(n);
        case D1Method::integral: {
            const auto phat = legendre_family(n);
            const ExactScalar two(2);
            for (long r = 0; r <= n; ++r) {
                const PiecewisePoly h = wavelet_polynomial(n, r);
                const auto& right = h.pieces()[1];  // [0,1) piece
                for (long c = 0; c <= n; ++c) {
                    const auto p = phat[c].compose_affine(Rational(2), Rational(-1));
                    d.at(r, c) = two * (right * p).integral(Rational(0), Rational(1));
                }
            }
            return d;
        }
    }
    throw std::logic_error("build_d1: unknown method");
}

}  // namespace

FilterMatrices d1_matrix(long n, D1Method method) {
    FilterMatrices fm;
    fm.n = n;
    fm.d_plus1 = build_d1(n, method);
    fm.d_minus1 = Matrix<ExactScalar>(n + 1, n + 1);
    for (long r = 0; r <= n; ++r)
        for (long c = 0; c <= n; ++c) {
            const ExactScalar& v = fm.d_plus1.at(r, c);
            fm.d_minus1.at(r, c) = (parity_sign(r + c + 1) < 0) ? -v : v;
        }
    fm.refinement = refinement_matrices(n);
    return fm;
}

Report validate_filterbank(long n) {
    Report rep;
    rep.title = "filter bank identities n=" + std::to_string(n);

    const FilterMatrices fm = d1_matrix(n, D1Method::closed);
    const Matrix<ExactScalar>& d1 = fm.d_plus1;
    const Matrix<ExactScalar>& dm1 = fm.d_minus1;
    const Matrix<ExactScalar>& c1 = fm.refinement.c_plus1;
    const Matrix<ExactScalar>& cm1 = fm.refinement.c_minus1;
    const std::size_t sz = n + 1;

    bool pass = true;
    for (long r = 0; r <= n; ++r) {
        if (d1.at(r, r).sign() <= 0) pass = false;
        for (long c = 0; c < r; ++c)
            if (!d1.at(r, c).is_zero()) pass = false;
    }
    rep.add("D1 upper triangular with positive diagonal", pass);

    rep.add("4I = D-1 D-1^T + D1 D1^T",
            dm1 * dm1.transpose() + d1 * d1.transpose() ==
                Matrix<ExactScalar>::scaled_identity(sz, ExactScalar(4)));
    rep.add("2I = C-1 C-1^T + C1 C1^T",
            cm1 * cm1.transpose() + c1 * c1.transpose() ==
                Matrix<ExactScalar>::scaled_identity(sz, ExactScalar(2)));
    rep.add("C-1 D-1^T + C1 D1^T = 0",
            cm1 * dm1.transpose() + c1 * d1.transpose() == Matrix<ExactScalar>(sz, sz));

    pass = true;
    for (long r = 0; r <= n; ++r) {
        ExactScalar sum;
        for (long c = r; c <= n; ++c) sum += d1.at(r, c) * d1.at(r, c);
        if (sum != ExactScalar(2)) pass = false;
    }
    rep.add("row normalization sum_j (D1)_{i,j}^2 = 2", pass);

    pass = true;
    for (long r = 0; r <= n; ++r)
        for (long k = 0; k < r; ++k) {
            if ((r + k) % 2) continue;  // vacuous for odd r+k
            ExactScalar sum;
            for (long c = 0; c <= n; ++c) sum += d1.at(r, c) * d1.at(k, c);
            if (!sum.is_zero()) pass = false;
        }
    rep.add("same-parity rows of D1 orthogonal", pass);

    // interleaved unitary matrices: even rows of C1 with odd rows of D1/sqrt(2),
    // and vice versa
    const ExactScalar inv_sqrt2(Rational(1, 2), 2);
    for (int flavor = 0; flavor < 2; ++flavor) {
        Matrix<ExactScalar> a(sz, sz);
        for (long r = 0; r <= n; ++r)
            for (long c = 0; c <= n; ++c)
                a.at(r, c) = (r % 2 == flavor) ? c1.at(r, c) : d1.at(r, c) * inv_sqrt2;
        rep.add(flavor == 0 ? "interleaved matrix (even C1 / odd D1) unitary"
                            : "interleaved matrix (odd C1 / even D1) unitary",
                a * a.transpose() ==
                    Matrix<ExactScalar>::scaled_identity(sz, ExactScalar(1)));
    }

    // refinement identities as polynomial identities per half-interval
    const auto phat = legendre_family(n);
    std::vector<Polynomial<ExactScalar>> right(sz), left(sz);
    for (long c = 0; c <= n; ++c) {
        right[c] = phat[c].compose_affine(Rational(2), Rational(-1));
        left[c] = phat[c].compose_affine(Rational(2), Rational(1));
    }
    pass = true;
    bool pass_c = true;
    for (long r = 0; r <= n; ++r) {
        Polynomial<ExactScalar> dr, dl, cr, cl;
        for (long c = 0; c <= n; ++c) {
            dr = dr + right[c] * d1.at(r, c);
            dl = dl + left[c] * dm1.at(r, c);
            cr = cr + right[c] * c1.at(r, c);
            cl = cl + left[c] * cm1.at(r, c);
        }
        const PiecewisePoly h = wavelet_polynomial(n, r);
        if (dl != h.pieces()[0] || dr != h.pieces()[1]) pass = false;
        if (cl != phat[r] || cr != phat[r]) pass_c = false;
    }
    rep.add("wavelet refinement Psi((t+1)/2) = D-1 P(2t+1) | D1 P(2t-1)", pass);
    rep.add("scaling refinement P(t) = C-1 P(2t+1) | C1 P(2t-1)", pass_c);

    return rep;
}

}  // namespace alpwave
