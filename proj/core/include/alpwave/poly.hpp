#ifndef ALPWAVE_POLY_HPP
#define ALPWAVE_POLY_HPP

#include "alpwave/exact.hpp"

#include <vector>

namespace alpwave {

/// Dense polynomial in one variable, monomial coefficients c[0] + c[1] t + ...
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(); }

    T eval(const T& x) const {
        T r{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    double eval_double(double x) const {
        double r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + scalar_to_double(*it);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T{});
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k < a.c_.size()) c[k] = c[k] + a.c_[k];
            if (k < b.c_.size()) c[k] = c[k] + b.c_[k];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const T& s) {
        Polynomial r = a;
        for (auto& v : r.c_) v = v * s;
        r.trim();
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<T> c(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            c[k - 1] = c_[k] * scalar_from_rational<T>(Rational(static_cast<long>(k)));
        return Polynomial(std::move(c));
    }
    Polynomial antiderivative() const {
        if (c_.empty()) return Polynomial();
        std::vector<T> c(c_.size() + 1, T{});
        for (std::size_t k = 0; k < c_.size(); ++k)
            c[k + 1] = c_[k] * scalar_from_rational<T>(Rational(1, static_cast<long>(k) + 1));
        return Polynomial(std::move(c));
    }
    /// Exact integral over [a, b].
    T integral(const Rational& a, const Rational& b) const {
        const Polynomial F = antiderivative();
        return F.eval(scalar_from_rational<T>(b)) - F.eval(scalar_from_rational<T>(a));
    }

    /// p(alpha*t + beta).
    Polynomial compose_affine(const Rational& alpha, const Rational& beta) const {
        Polynomial result;
        // powers of (alpha t + beta) built incrementally
        Polynomial lin(std::vector<T>{scalar_from_rational<T>(beta), scalar_from_rational<T>(alpha)});
        Polynomial pw(std::vector<T>{scalar_from_rational<T>(Rational(1))});
        for (std::size_t k = 0; k < c_.size(); ++k) {
            result = result + pw * c_[k];
            if (k + 1 < c_.size()) pw = pw * lin;
        }
        return result;
    }

    /// Multiply by t^s.
    Polynomial shifted(long s) const {
        if (is_zero()) return Polynomial();
        std::vector<T> c(c_.size() + s, T{});
        for (std::size_t k = 0; k < c_.size(); ++k) c[k + s] = c_[k];
        return Polynomial(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Piecewise polynomial on consecutive half-open intervals
/// [breakpoints[k], breakpoints[k+1]); zero outside the support.
class PiecewisePoly {
public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial<ExactScalar>> pieces);

    const std::vector<Rational>& breakpoints() const { return bp_; }
    const std::vector<Polynomial<ExactScalar>>& pieces() const { return pieces_; }
    long degree() const;

    double eval_double(double t) const;
    ExactScalar eval_exact(const Rational& t) const;

    /// Exact integral of t^s * this over the support.
    ExactScalar moment(long s) const;
    /// Exact integral of this * other; breakpoints must coincide.
    ExactScalar inner_product(const PiecewisePoly& other) const;
    /// Exact integral of t^s * this over [from, to) intersected with pieces.
    ExactScalar moment_over(long s, const Rational& from, const Rational& to) const;

private:
    std::vector<Rational> bp_;
    std::vector<Polynomial<ExactScalar>> pieces_;
};

}  // namespace alpwave

#endif
