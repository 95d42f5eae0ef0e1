#include "alpwave/transform.hpp"

#include "alpwave/legendre.hpp"

#include <cmath>

namespace alpwave {

namespace {

Polynomial<SurdSum> lift(const Polynomial<ExactScalar>& p) {
    std::vector<SurdSum> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return Polynomial<SurdSum>(std::move(c));
}

}  // namespace

Signal project_exact(const Polynomial<SurdSum>& p, long n, long levels) {
    if (n < 0 || levels < 0) throw std::invalid_argument("project_exact: bad sizes");
    const long cells = 1L << levels;
    const Rational scale(1, Int(1) << (levels + 1));
    const SurdSum norm = scalar_from_exact<SurdSum>(ExactScalar::pow2_half(-(levels + 1)));

    std::vector<Polynomial<SurdSum>> phat;
    for (long j = 0; j <= n; ++j) phat.push_back(lift(legendre_orthonormal(j)));

    Signal sig;
    sig.n = n;
    sig.levels = levels;
    sig.cells.resize(cells);
    for (long l = 0; l < cells; ++l) {
        // local variable u = 2^(K+1) t - 2l - 1
        const Polynomial<SurdSum> q = p.compose_affine(scale, Rational(2 * l + 1) * scale);
        auto& cell = sig.cells[l];
        cell.resize(n + 1);
        for (long j = 0; j <= n; ++j)
            cell[j] = (q * phat[j]).integral(Rational(-1), Rational(1)) * norm;
    }
    return sig;
}

Signal project_exact(const Polynomial<Rational>& p, long n, long levels) {
    std::vector<SurdSum> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) c.emplace_back(r);
    return project_exact(Polynomial<SurdSum>(std::move(c)), n, levels);
}

void gauss_legendre(long m, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(m, 0.0);
    weights.assign(m, 0.0);
    for (long i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (long k = 2; k <= m; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
}

SignalF project(const std::function<double(double)>& fn, long n, long levels) {
    const long cells = 1L << levels;
    const double h = std::ldexp(1.0, -(levels + 1));  // 2^-(K+1)
    const double norm = std::sqrt(h);

    std::vector<double> u, w;
    gauss_legendre(n + 8, u, w);
    std::vector<Polynomial<ExactScalar>> phat;
    for (long j = 0; j <= n; ++j) phat.push_back(legendre_orthonormal(j));

    SignalF sig;
    sig.n = n;
    sig.levels = levels;
    sig.cells.resize(cells);
    for (long l = 0; l < cells; ++l) {
        auto& cell = sig.cells[l];
        cell.assign(n + 1, 0.0);
        for (std::size_t q = 0; q < u.size(); ++q) {
            const double t = (u[q] + 2 * l + 1) * h;
            const double fv = w[q] * fn(t);
            for (long j = 0; j <= n; ++j) cell[j] += fv * phat[j].eval_double(u[q]);
        }
        for (long j = 0; j <= n; ++j) cell[j] *= norm;
    }
    return sig;
}

namespace {

template <class S>
double eval_impl(const BasicSignal<S>& sig, double t) {
    if (t < 0.0 || t >= 1.0) return 0.0;
    const long cells = 1L << sig.levels;
    long l = static_cast<long>(std::floor(t * cells));
    if (l >= cells) l = cells - 1;
    const double u = std::ldexp(t, sig.levels + 1) - 2 * l - 1;
    double v = 0;
    for (long j = 0; j <= sig.n; ++j)
        v += scalar_to_double(sig.cells[l][j]) * legendre_orthonormal(j).eval_double(u);
    return v * std::sqrt(std::ldexp(1.0, sig.levels + 1));
}

}  // namespace

double signal_eval(const SignalF& sig, double t) { return eval_impl(sig, t); }
double signal_eval(const Signal& sig, double t) { return eval_impl(sig, t); }

SurdSum signal_eval_exact(const Signal& sig, const Rational& t) {
    if (t < 0 || t >= 1) return SurdSum();
    const long cells = 1L << sig.levels;
    const Rational scaled = t * cells;
    long l = static_cast<long>(static_cast<Int>(boost::multiprecision::numerator(scaled) /
                                                boost::multiprecision::denominator(scaled)));
    if (l >= cells) l = cells - 1;
    const Rational u = t * (Int(1) << (sig.levels + 1)) - 2 * l - 1;
    SurdSum v;
    for (long j = 0; j <= sig.n; ++j)
        v += sig.cells[l][j] * legendre_orthonormal(j).eval(ExactScalar(u));
    return v * ExactScalar::pow2_half(sig.levels + 1);
}

SignalF to_float(const Signal& sig) {
    SignalF out;
    out.n = sig.n;
    out.levels = sig.levels;
    out.cells.resize(sig.cells.size());
    for (std::size_t l = 0; l < sig.cells.size(); ++l) {
        out.cells[l].resize(sig.cells[l].size());
        for (std::size_t j = 0; j < sig.cells[l].size(); ++j)
            out.cells[l][j] = sig.cells[l][j].to_double();
    }
    return out;
}

}  // namespace alpwave
