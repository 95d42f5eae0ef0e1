#include "alpwave/wavelets.hpp"

#include "alpwave/hypergeom.hpp"
#include "alpwave/legendre.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace alpwave;

namespace {

// One-dimensional nullspace of a rational constraint system; REQUIREs that the
// rank is exactly dim-1.
std::vector<Rational> solve_unique(std::vector<std::vector<Rational>> a, long dim) {
    std::size_t lead = 0;
    std::vector<long> pivots;
    for (std::size_t r = 0; r < a.size() && lead < static_cast<std::size_t>(dim); ++r) {
        std::size_t p = r;
        while (p < a.size() && a[p][lead] == 0) ++p;
        if (p == a.size()) {
            --r;
            ++lead;
            continue;
        }
        std::swap(a[p], a[r]);
        const Rational inv = a[r][lead];
        for (auto& v : a[r]) v /= inv;
        for (std::size_t q = 0; q < a.size(); ++q)
            if (q != r && a[q][lead] != 0) {
                const Rational f = a[q][lead];
                for (long k = 0; k < dim; ++k) a[q][k] -= f * a[r][k];
            }
        pivots.push_back(lead);
        ++lead;
    }
    REQUIRE(pivots.size() == static_cast<std::size_t>(dim - 1));

    long free_col = 0;
    while (free_col < dim &&
           std::find(pivots.begin(), pivots.end(), free_col) != pivots.end())
        ++free_col;
    std::vector<Rational> null(dim, Rational(0));
    null[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) null[pivots[r]] = -a[r][free_col];
    return null;
}

// Independent construction of the [0,1) pieces, up to scale per member.  The
// defining conditions reduce to one-sided moment constraints (full moments via
// the parity rule, plus the extra one-sided ones below the member index) and
// orthogonality within each parity class; solving the classes from the top
// member down pins every piece to a one-dimensional nullspace.
std::vector<std::vector<Rational>> piece_oracle(long n) {
    std::vector<std::vector<Rational>> out(n + 1);
    for (long parity = 0; parity < 2; ++parity) {
        std::vector<const std::vector<Rational>*> built;
        for (long m = n - (n % 2 == parity ? 0 : 1); m >= 0; m -= 2) {
            std::vector<std::vector<Rational>> rows;
            for (long s = 0; s <= n; ++s) {
                if ((s + m) % 2 == 0 && !(s < m)) continue;
                std::vector<Rational> row(n + 1);
                for (long k = 0; k <= n; ++k) row[k] = Rational(1, s + k + 1);
                rows.push_back(std::move(row));
            }
            for (const auto* w : built) {
                std::vector<Rational> row(n + 1);
                for (long k = 0; k <= n; ++k)
                    for (long j = 0; j <= n; ++j) row[k] += (*w)[j] / Rational(k + j + 1);
                rows.push_back(std::move(row));
            }
            out[m] = solve_unique(std::move(rows), n + 1);
            built.push_back(&out[m]);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("coefficient tables") {
    CHECK(wavelet_coefficients(0, 0) == std::vector<ExactScalar>{ExactScalar(1)});
    CHECK(wavelet_coefficients(1, 1) ==
          std::vector<ExactScalar>{ExactScalar(2), ExactScalar(-3)});
    CHECK_THROWS(wavelet_coefficients(4, 2));
    CHECK_THROWS(wavelet_coefficients(3, 4));
    // every entry is rational times the common square root
    for (const auto& c : wavelet_coefficients(6, 5))
        CHECK((c.surd() == 3 || c.is_zero()));
}

TEST_CASE("wavelet polynomials match the constrained-moment oracle") {
    for (long n = 0; n <= 8; ++n) {
        const auto oracle = piece_oracle(n);
        for (long m = 0; m <= n; ++m) {
            const auto& null = oracle[m];
            const PiecewisePoly h = wavelet_polynomial(n, m);
            const auto& right = h.pieces()[1];
            // proportionality by cross-multiplication
            long ref = 0;
            while (null[ref] == 0) ++ref;
            const ExactScalar wref = right.coeff(ref);
            CHECK_FALSE(wref.is_zero());
            for (long k = 0; k <= n; ++k)
                CHECK(right.coeff(k) * ExactScalar(null[ref]) ==
                      wref * ExactScalar(null[k]));
        }
    }
}

TEST_CASE("explicit small members") {
    const PiecewisePoly haar = wavelet_polynomial(0, 0);
    CHECK(haar.eval_exact(Rational(1, 2)) == ExactScalar(1));
    CHECK(haar.eval_exact(Rational(-1, 2)) == ExactScalar(-1));
    CHECK(haar.eval_exact(Rational(0)) == ExactScalar(1));  // right-continuous
    CHECK(haar.eval_double(1.0) == 0.0);                    // outside support

    // (1,0) -> 2 - 3t on [0,1) with h(-t) = -h(t)
    const PiecewisePoly h1 = wavelet_polynomial(1, 0);
    CHECK(h1.pieces()[1] == Polynomial<ExactScalar>({ExactScalar(2), ExactScalar(-3)}));
    CHECK(h1.eval_exact(Rational(-1, 2)) == ExactScalar(Rational(-1, 2)));

    // even-index delegation: (2,0) matches (1,0) on [0,1)
    const PiecewisePoly h2 = wavelet_polynomial(2, 0);
    CHECK(h2.pieces()[1] == h1.pieces()[1]);
}

TEST_CASE("defining conditions for a high-order family") {
    CHECK(verify_conditions(8).all_pass());
}

TEST_CASE("index-lowering differential identities") {
    SUBCASE("residuals vanish") {
        for (auto [n, i] : {std::pair<long, long>{1, 1}, {5, 3}, {7, 5}}) {
            const DiffopResult r = diffop_residual(n, i);
            CHECK(r.residual.is_zero());
            CHECK(r.lowered_matches_2f1);
        }
        CHECK_THROWS(diffop_residual(4, 2));
    }
    SUBCASE("lowered form of the n=1 member") {
        // L_1 = D + 1 applied to 2 - 3t gives 2 - 6t
        const DiffopResult r = diffop_residual(1, 1);
        CHECK(r.lowered ==
              Polynomial<ExactScalar>({ExactScalar(2), ExactScalar(-6)}));
    }
}
