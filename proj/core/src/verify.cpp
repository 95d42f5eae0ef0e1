#include "alpwave/verify.hpp"

#include "alpwave/filterbank.hpp"
#include "alpwave/fourier.hpp"
#include "alpwave/hypergeom.hpp"
#include "alpwave/io.hpp"
#include "alpwave/legendre.hpp"
#include "alpwave/transform.hpp"
#include "alpwave/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace alpwave {

namespace {

long cap(long n_max, long limit) { return std::min(n_max, limit); }

Polynomial<SurdSum> lift(const Polynomial<ExactScalar>& p) {
    std::vector<SurdSum> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return Polynomial<SurdSum>(std::move(c));
}

HypergeomParams dd_params(long n, long i, long j) {
    HypergeomParams p;
    p.numerator = {Rational(j - i, 2), Rational(j - i + 1, 2), Rational(2 * n - i - j + 1, 2),
                   Rational(2 * n - i - j + 2, 2)};
    p.denominator = {Rational(2 * n - i + 3, 2), Rational(-i, 2), Rational(2 * n - 2 * i + 3, 2)};
    p.argument = 1;
    return p;
}

}  // namespace

Report verify_hypergeom(long n_max) {
    Report rep;
    rep.title = "hypergeom";

    bool pass = true;
    std::ostringstream witness;
    const std::vector<Rational> xs = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                      Rational(7, 3)};
    for (long n = 0; n <= cap(n_max, 12); ++n)
        for (long i = 0; i <= n; ++i)
            for (const auto& x : xs)
                if (lagrange_identity_residual(n, i, x) != 0) {
                    pass = false;
                    witness << " (n=" << n << ",i=" << i << ")";
                }
    rep.add("partial-fraction identity residual = 0", pass, witness.str());

    pass = true;
    witness.str("");
    for (long n = 1; n <= cap(n_max, 12); ++n)
        for (long l = -1; l < n; ++l)
            for (long i = 0; i + l < n && i <= n; ++i)
                for (long r = 0; r <= i + l; ++r)
                    if (vanishing_sum(n, i, l, r) != 0) {
                        pass = false;
                        witness << " (n=" << n << ",i=" << i << ",l=" << l << ",r=" << r << ")";
                    }
    rep.add("vanishing-sum lemma = 0", pass, witness.str());

    pass = true;
    witness.str("");
    for (long n = 1; n <= cap(n_max, 10); ++n)
        for (long i = 1; i <= n; i += 2)
            for (long j = 0; j < i; ++j) {
                const HypergeomParams p = dd_params(n, i, j);
                const WhippleResult w = whipple_transform(p);
                const bool ok = is_balanced_4f3(w.params) &&
                                eval_pfq_terminating(p) ==
                                    w.prefactor * eval_pfq_terminating(w.params);
                if (!ok) {
                    pass = false;
                    witness << " (n=" << n << ",i=" << i << ",j=" << j << ")";
                }
            }
    rep.add("Whipple transform value-preserving and balanced", pass, witness.str());

    return rep;
}

Report verify_legendre(long n_max) {
    Report rep;
    rep.title = "legendre";
    const long nm = std::max(n_max, 0L);
    const auto fam = legendre_family(nm);

    bool pass = true;
    std::ostringstream witness;
    for (long a = 0; a <= nm; ++a)
        for (long b = a; b <= nm; ++b) {
            const ExactScalar ip = (fam[a] * fam[b]).integral(Rational(-1), Rational(1));
            if (ip != (a == b ? ExactScalar(1) : ExactScalar())) {
                pass = false;
                witness << " (" << a << "," << b << ")";
            }
        }
    rep.add("Gram matrix on [-1,1] = I", pass, witness.str());

    pass = true;
    for (long a = 0; a <= nm; ++a)
        if (fam[a].coeff(a).sign() <= 0) pass = false;
    rep.add("positive leading coefficients", pass);

    // refinement: phat_j(t) = sum_k C_{+-1}[j][k] phat_k(2t -+ 1) per half
    pass = true;
    witness.str("");
    const RefinementPair rp = refinement_matrices(nm);
    for (long j = 0; j <= nm; ++j) {
        Polynomial<SurdSum> right, left;
        for (long k = 0; k <= nm; ++k) {
            right = right + lift(fam[k].compose_affine(Rational(2), Rational(-1))) *
                                SurdSum(rp.c_plus1.at(j, k));
            left = left + lift(fam[k].compose_affine(Rational(2), Rational(1))) *
                              SurdSum(rp.c_minus1.at(j, k));
        }
        if (!(right == lift(fam[j])) || !(left == lift(fam[j]))) {
            pass = false;
            witness << " j=" << j;
        }
    }
    rep.add("two-scale refinement identity", pass, witness.str());

    pass = true;
    for (long j = 0; j <= nm; ++j)
        for (long k = 0; k <= nm; ++k) {
            const ExactScalar& p1 = rp.c_plus1.at(j, k);
            const ExactScalar& m1 = rp.c_minus1.at(j, k);
            if (k > j && !p1.is_zero()) pass = false;
            if (k == j && p1.sign() <= 0) pass = false;
            const ExactScalar want = ((j + k) % 2) ? -p1 : p1;
            if (m1 != want) pass = false;
        }
    rep.add("C_1 lower triangular, positive diagonal, parity rule", pass);

    return rep;
}

Report verify_wavelets(long n_max) {
    Report rep;
    rep.title = "wavelets";
    for (long n = 0; n <= cap(n_max, 12); ++n) {
        const Report sub = verify_conditions(n);
        bool pass = true;
        std::ostringstream witness;
        for (const auto& c : sub.checks)
            if (!c.pass) {
                pass = false;
                witness << " [" << c.name << c.detail << "]";
            }
        rep.add("conditions (i)-(v) at n=" + std::to_string(n), pass, witness.str());
    }

    bool pass = true;
    std::ostringstream witness;
    for (long n = 1; n <= cap(n_max, 10); ++n)
        for (long i = 1; i <= n; i += 2) {
            const DiffopResult r = diffop_residual(n, i);
            if (!r.residual.is_zero() || !r.lowered_matches_2f1) {
                pass = false;
                witness << " (n=" << n << ",i=" << i << ")";
            }
        }
    rep.add("index-lowering ODE residual = 0, lowered form hypergeometric", pass, witness.str());

    pass = true;
    witness.str("");
    for (long n = 0; n <= cap(n_max, 12); ++n)
        for (long m = 0; m <= n; ++m) {
            const long i = n - m;
            const Rational scale = (i == 0 || i % 2)
                                       ? pochhammer(Rational(-n), i)
                                       : pochhammer(Rational(-n + 1), i - 1);
            const PiecewisePoly h = wavelet_polynomial(n, m);
            const auto& right = h.pieces()[1];
            const long want_deg = (i == 0 || i % 2) ? n : n - 1;
            if (right.degree() != want_deg) {
                pass = false;
                witness << " (deg n=" << n << ",m=" << m << ")";
            }
            for (const auto& c : right.coeffs()) {
                const Rational v = c.rational_part() * scale;
                if (boost::multiprecision::denominator(v) != 1) {
                    pass = false;
                    witness << " (n=" << n << ",m=" << m << ")";
                    break;
                }
            }
        }
    rep.add("integer coefficients after Pochhammer rescaling; exact degree", pass, witness.str());

    pass = true;
    witness.str("");
    for (long i = 1; i <= cap(n_max, 10); i += 2) {
        // Jacobi weight (1-t)^i of the (0, i) family mapped to [0,1)
        Polynomial<SurdSum> weight(std::vector<SurdSum>{SurdSum(1)});
        const Polynomial<SurdSum> one_minus_t(
            std::vector<SurdSum>{SurdSum(1), SurdSum(Rational(-1))});
        for (long p = 0; p < i; ++p) weight = weight * one_minus_t;
        for (long a = i; a <= cap(n_max, 10); ++a)
            for (long b = a + 1; b <= cap(n_max, 10); ++b) {
                const auto ga = lift(diffop_residual(a, i).lowered);
                const auto gb = lift(diffop_residual(b, i).lowered);
                if (!(ga * gb * weight).integral(Rational(0), Rational(1)).is_zero()) {
                    pass = false;
                    witness << " (i=" << i << ",n=" << a << "," << b << ")";
                }
            }
    }
    rep.add("lowered polynomials Jacobi-orthogonal on [0,1) across orders", pass, witness.str());
    return rep;
}

Report verify_filterbank(long n_max) {
    Report rep;
    rep.title = "filterbank";
    for (long n = 0; n <= cap(n_max, 12); ++n) {
        const Report sub = validate_filterbank(n);
        bool pass = true;
        std::ostringstream witness;
        for (const auto& c : sub.checks)
            if (!c.pass) {
                pass = false;
                witness << " [" << c.name << c.detail << "]";
            }
        rep.add("orthogonality identities at n=" + std::to_string(n), pass, witness.str());
    }

    bool pass = true;
    std::ostringstream witness;
    for (long n = 0; n <= cap(n_max, 10); ++n) {
        const FilterMatrices closed = d1_matrix(n, D1Method::closed);
        for (D1Method m :
             {D1Method::alternate, D1Method::recurrence, D1Method::integral}) {
            if (!(d1_matrix(n, m).d_plus1 == closed.d_plus1)) {
                pass = false;
                witness << " (n=" << n << ",method=" << static_cast<int>(m) << ")";
            }
        }
    }
    rep.add("four-way construction agreement", pass, witness.str());

    pass = true;
    witness.str("");
    for (long n = 2; n + 1 <= cap(n_max, 10); ++n)
        for (long i = 1; i < n; i += 2)
            for (long j = 0; j < i; ++j) {
                const ExactScalar got = recurrence_in_n(n, i, j, d1_entry_closed(n, i, j),
                                                        d1_entry_closed(n - 1, i, j));
                if (got != d1_entry_closed(n + 1, i, j)) {
                    pass = false;
                    witness << " (n=" << n << ",i=" << i << ",j=" << j << ")";
                }
            }
    rep.add("order-raising recurrence matches closed form", pass, witness.str());
    return rep;
}

Report verify_fourier(long n_max) {
    Report rep;
    rep.title = "fourier";

    bool pass = true;
    std::ostringstream witness;
    const double thetas[] = {0.5, 1.0, M_PI, 10.0};
    for (long n = 0; n <= cap(n_max, 8); ++n)
        for (long m = 0; m <= n; ++m) {
            if (h_hat(n, m, 0.0) != std::complex<double>(0, 0)) pass = false;
            for (double th : thetas) {
                const double err = std::abs(h_hat(n, m, th) - h_hat_oracle(n, m, th));
                if (err > 1e-10) {
                    pass = false;
                    witness << " (n=" << n << ",m=" << m << ",theta=" << th << ",err=" << err
                            << ")";
                }
            }
        }
    rep.add("closed 2F3 form matches integral oracle", pass, witness.str());

    const std::complex<double> spot = h_hat(0, 0, M_PI);
    const std::complex<double> want(0.0, -4.0 / M_PI);
    rep.add("spot value at (n,m) = (0,0), theta = pi", std::abs(spot - want) <= 1e-14);

    pass = true;
    witness.str("");
    for (long n = 0; n <= cap(n_max, 6); ++n)
        for (long m = 0; m <= n; ++m) {
            const auto res = fourier_ode_residual(n, m, 36);
            for (const auto& r : res)
                if (!r.is_zero()) {
                    pass = false;
                    witness << " (n=" << n << ",m=" << m << ")";
                    break;
                }
        }
    rep.add("fourth-order ODE annihilates the transform through order 36", pass, witness.str());
    return rep;
}

Report verify_transform(long n_max) {
    Report rep;
    rep.title = "transform";
    std::mt19937 rng(20260823);
    auto rand_value = [&rng]() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9), surd_pick(0, 3);
        const int surds[] = {1, 2, 3, 5};
        int v = num(rng);
        if (v == 0) v = 1;
        return SurdSum(ExactScalar(Rational(v, den(rng)), surds[surd_pick(rng)]));
    };

    bool pass = true;
    std::ostringstream witness;
    for (int trial = 0; trial < 20; ++trial) {
        const long n = trial % (cap(n_max, 6) + 1);
        const long levels = 1 + trial % 6;
        Signal sig;
        sig.n = n;
        sig.levels = levels;
        sig.cells.resize(1L << levels);
        for (auto& cell : sig.cells) {
            cell.resize(n + 1);
            for (auto& v : cell) v = rand_value();
        }
        const Coeffs co = analyze(sig);
        const Signal back = synthesize(co);
        bool ok = back.cells == sig.cells && back.n == sig.n && back.levels == sig.levels;
        ok = ok && coeffs_energy(co) == signal_energy(sig);
        if (!ok) {
            pass = false;
            witness << " (n=" << n << ",K=" << levels << ")";
        }
    }
    rep.add("perfect reconstruction and Parseval, exact", pass, witness.str());

    pass = true;
    witness.str("");
    for (long n = 0; n <= cap(n_max, 6); ++n) {
        std::uniform_int_distribution<int> num(-5, 5);
        std::vector<Rational> pc(n + 1);
        for (auto& c : pc) c = Rational(num(rng), 3);
        const Signal sig = project_exact(Polynomial<Rational>(std::move(pc)), n, 4);
        const Coeffs co = analyze(sig);
        for (const auto& level : co.detail)
            for (const auto& shift : level)
                for (const auto& v : shift)
                    if (!v.is_zero()) {
                        pass = false;
                        witness << " n=" << n;
                    }
    }
    rep.add("details vanish for polynomial input of degree <= n", pass, witness.str());

    {
        // handwritten Haar cascade on the cell values
        Signal sig;
        sig.n = 0;
        sig.levels = 3;
        sig.cells.resize(8);
        for (auto& cell : sig.cells) cell = {rand_value()};
        const Coeffs co = analyze(sig);
        const ExactScalar inv_sqrt2(Rational(1, 2), 2);
        std::vector<SurdSum> cur;
        for (const auto& cell : sig.cells) cur.push_back(cell[0]);
        bool ok = true;
        for (long k = 2; k >= 0; --k) {
            std::vector<SurdSum> next(cur.size() / 2);
            for (std::size_t i = 0; i < next.size(); ++i) {
                next[i] = (cur[2 * i] + cur[2 * i + 1]) * inv_sqrt2;
                const SurdSum d = (cur[2 * i + 1] - cur[2 * i]) * inv_sqrt2;
                if (d != co.detail[k][i][0]) ok = false;
            }
            cur.swap(next);
        }
        if (cur[0] != co.scaling0[0]) ok = false;
        rep.add("n = 0 cascade equals the Haar transform", ok);
    }

    {
        SignalF sig;
        sig.n = 4;
        sig.levels = 5;
        sig.cells.resize(32);
        std::uniform_real_distribution<double> real(-1.0, 1.0);
        for (auto& cell : sig.cells) {
            cell.resize(5);
            for (auto& v : cell) v = real(rng);
        }
        const SignalF back = synthesize(analyze(sig));
        double err = 0;
        for (std::size_t l = 0; l < sig.cells.size(); ++l)
            for (std::size_t j = 0; j < sig.cells[l].size(); ++j)
                err = std::max(err, std::abs(back.cells[l][j] - sig.cells[l][j]));
        rep.add("float round trip max error <= 1e-12", err <= 1e-12);
    }

    return rep;
}

std::vector<Report> verify_all(long n_max, const std::string& module) {
    struct Entry {
        const char* name;
        Report (*fn)(long);
    };
    static const Entry entries[] = {
        {"hypergeom", verify_hypergeom},   {"legendre", verify_legendre},
        {"wavelets", verify_wavelets},     {"filterbank", verify_filterbank},
        {"fourier", verify_fourier},       {"transform", verify_transform},
    };
    std::vector<Report> out;
    for (const auto& e : entries)
        if (module.empty() || module == e.name) out.push_back(e.fn(n_max));
    if (out.empty()) throw std::invalid_argument("unknown module: " + module);
    return out;
}

}  // namespace alpwave
