#ifndef ALPWAVE_TRANSFORM_HPP
#define ALPWAVE_TRANSFORM_HPP

#include "alpwave/filterbank.hpp"
#include "alpwave/matrix.hpp"
#include "alpwave/poly.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <vector>

namespace alpwave {

template <class S>
inline S scalar_from_exact(const ExactScalar& e) { return S(e); }
template <>
inline double scalar_from_exact<double>(const ExactScalar& e) { return e.to_double(); }

/// Piecewise polynomial on [0,1) at resolution `levels`: 2^levels cells, each
/// carrying n+1 coefficients against the orthonormal cell basis
/// sqrt(2^(K+1)) * phat_j(2^(K+1) t - 2l - 1), K = levels.
template <class S>
struct BasicSignal {
    long n = 0;
    long levels = 0;
    std::vector<std::vector<S>> cells;
};

/// Multiresolution coefficients: scaling0 against sqrt(2)*phi_j on the root
/// cell, detail[k][i] against 2^(k/2) * psi^n_j(2^k t - i).
template <class S>
struct BasicCoeffs {
    long n = 0;
    long levels = 0;
    std::vector<S> scaling0;
    std::vector<std::vector<std::vector<S>>> detail;  // [level][shift][degree]
};

using Signal = BasicSignal<SurdSum>;
using SignalF = BasicSignal<double>;
using Coeffs = BasicCoeffs<SurdSum>;
using CoeffsF = BasicCoeffs<double>;

template <class S>
struct StepMatrices {
    long n = 0;
    Matrix<S> c_m1, c_p1, d_m1, d_p1;
    S inv_sqrt2, half;
};

template <class S>
StepMatrices<S> step_matrices(long n) {
    const FilterMatrices fm = d1_matrix(n, D1Method::closed);
    const auto conv = [](const Matrix<ExactScalar>& m) {
        Matrix<S> r(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = scalar_from_exact<S>(m.at(i, j));
        return r;
    };
    StepMatrices<S> s;
    s.n = n;
    s.c_m1 = conv(fm.refinement.c_minus1);
    s.c_p1 = conv(fm.refinement.c_plus1);
    s.d_m1 = conv(fm.d_minus1);
    s.d_p1 = conv(fm.d_plus1);
    s.inv_sqrt2 = scalar_from_exact<S>(ExactScalar(Rational(1, 2), 2));
    s.half = scalar_from_exact<S>(ExactScalar(Rational(1, 2)));
    return s;
}

/// One cascade step on a sibling cell pair: scaling coefficients of the parent
/// cell and the wavelet coefficients it absorbs.
template <class S>
void analyze_step(const StepMatrices<S>& sm, const std::vector<S>& a0, const std::vector<S>& a1,
                  std::vector<S>& scaling, std::vector<S>& detail) {
    const std::size_t m = sm.c_m1.rows();
    scaling.assign(m, S{});
    detail.assign(m, S{});
    for (std::size_t r = 0; r < m; ++r) {
        S sv{}, dv{};
        for (std::size_t c = 0; c < m; ++c) {
            sv += sm.c_m1.at(r, c) * a0[c] + sm.c_p1.at(r, c) * a1[c];
            dv += sm.d_m1.at(r, c) * a0[c] + sm.d_p1.at(r, c) * a1[c];
        }
        scaling[r] = sv * sm.inv_sqrt2;
        detail[r] = dv * sm.half;
    }
}

template <class S>
void synthesize_step(const StepMatrices<S>& sm, const std::vector<S>& scaling,
                     const std::vector<S>& detail, std::vector<S>& a0, std::vector<S>& a1) {
    const std::size_t m = sm.c_m1.rows();
    a0.assign(m, S{});
    a1.assign(m, S{});
    for (std::size_t c = 0; c < m; ++c) {
        S v0{}, v1{};
        for (std::size_t r = 0; r < m; ++r) {
            v0 += sm.c_m1.at(r, c) * scaling[r] * sm.inv_sqrt2 + sm.d_m1.at(r, c) * detail[r] * sm.half;
            v1 += sm.c_p1.at(r, c) * scaling[r] * sm.inv_sqrt2 + sm.d_p1.at(r, c) * detail[r] * sm.half;
        }
        a0[c] = v0;
        a1[c] = v1;
    }
}

template <class S>
BasicCoeffs<S> analyze(const BasicSignal<S>& sig) {
    const StepMatrices<S> sm = step_matrices<S>(sig.n);
    BasicCoeffs<S> out;
    out.n = sig.n;
    out.levels = sig.levels;
    out.detail.resize(sig.levels);

    std::vector<std::vector<S>> cur = sig.cells;
    for (long k = sig.levels - 1; k >= 0; --k) {
        const std::size_t pairs = cur.size() / 2;
        std::vector<std::vector<S>> next(pairs);
        out.detail[k].resize(pairs);
        for (std::size_t i = 0; i < pairs; ++i)
            analyze_step(sm, cur[2 * i], cur[2 * i + 1], next[i], out.detail[k][i]);
        cur.swap(next);
    }
    out.scaling0 = cur[0];
    return out;
}

template <class S>
BasicSignal<S> synthesize(const BasicCoeffs<S>& co) {
    const StepMatrices<S> sm = step_matrices<S>(co.n);
    BasicSignal<S> out;
    out.n = co.n;
    out.levels = co.levels;

    std::vector<std::vector<S>> cur{co.scaling0};
    for (long k = 0; k < co.levels; ++k) {
        std::vector<std::vector<S>> next(2 * cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i)
            synthesize_step(sm, cur[i], co.detail[k][i], next[2 * i], next[2 * i + 1]);
        cur.swap(next);
    }
    out.cells = std::move(cur);
    return out;
}

struct CompressStats {
    long kept = 0;
    long dropped = 0;
    double error2 = 0;
};

template <class S>
BasicCoeffs<S> compress(BasicCoeffs<S> co, double threshold, CompressStats& stats) {
    stats = CompressStats{};
    for (auto& level : co.detail)
        for (auto& shift : level)
            for (auto& v : shift) {
                const double x = scalar_to_double(v);
                if (std::abs(x) < threshold && !scalar_is_zero(v)) {
                    ++stats.dropped;
                    stats.error2 += x * x;
                    v = S{};
                } else {
                    ++stats.kept;
                }
            }
    return co;
}

template <class S>
S signal_energy(const BasicSignal<S>& sig) {
    S e{};
    for (const auto& cell : sig.cells)
        for (const auto& v : cell) e += v * v;
    return e;
}

template <class S>
S coeffs_energy(const BasicCoeffs<S>& co) {
    S e{};
    for (const auto& v : co.scaling0) e += v * v;
    for (const auto& level : co.detail)
        for (const auto& shift : level)
            for (const auto& v : shift) e += v * v;
    return e;
}

/// Exact projection of a polynomial (coefficients in the monomial basis) onto
/// the resolution-K space.
Signal project_exact(const Polynomial<SurdSum>& p, long n, long levels);
Signal project_exact(const Polynomial<Rational>& p, long n, long levels);

/// Quadrature projection (Gauss-Legendre, n+8 nodes per cell).
SignalF project(const std::function<double(double)>& fn, long n, long levels);

/// Pointwise signal evaluation.
double signal_eval(const SignalF& sig, double t);
double signal_eval(const Signal& sig, double t);
SurdSum signal_eval_exact(const Signal& sig, const Rational& t);

SignalF to_float(const Signal& sig);

/// Gauss-Legendre nodes/weights on [-1,1].
void gauss_legendre(long m, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace alpwave

#endif
