#include "alpwave/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace alpwave {

Int squarefree_part(Int s, Int& root) {
    if (s <= 0) throw std::domain_error("squarefree_part: argument must be positive");
    root = 1;
    Int m = 1;
    for (Int p = 2; p * p <= s; ++p) {
        int e = 0;
        while (s % p == 0) { s /= p; ++e; }
        for (int j = 0; j < e / 2; ++j) root *= p;
        if (e % 2) m *= p;
    }
    return m * s;
}

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

Int double_factorial(long n) {
    if (n < -1) throw std::domain_error("double factorial below -1");
    Int r = 1;
    for (long k = n; k > 1; k -= 2) r *= k;
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long j = 0; j < k; ++j) { r *= (n - j); r /= (j + 1); }
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

ExactScalar::ExactScalar(Rational r, Int surd) : rat_(std::move(r)), surd_(std::move(surd)) {
    if (surd_ <= 0) throw std::domain_error("ExactScalar: surd must be positive");
    normalize();
}

void ExactScalar::normalize() {
    if (rat_ == 0) { surd_ = 1; return; }
    if (surd_ == 1) return;
    Int root;
    surd_ = squarefree_part(surd_, root);
    rat_ *= root;
}

ExactScalar ExactScalar::sqrt_of(const Rational& r) {
    if (r < 0) throw std::domain_error("sqrt_of: negative argument");
    if (r == 0) return ExactScalar();
    const Int num = numerator(r), den = denominator(r);
    return ExactScalar(Rational(1, den), num * den);
}

ExactScalar ExactScalar::pow2_half(long p) {
    const bool odd = (p % 2 != 0);
    const long q = odd ? (p - 1) / 2 : p / 2;  // exact for odd p of either sign
    Rational r = (q >= 0) ? Rational(Int(1) << q, 1) : Rational(1, Int(1) << -q);
    return odd ? ExactScalar(r, 2) : ExactScalar(r);
}

int ExactScalar::sign() const {
    if (rat_ == 0) return 0;
    return rat_ < 0 ? -1 : 1;
}

double ExactScalar::to_double() const {
    double v = alpwave::to_double(rat_);
    if (surd_ != 1) v *= std::sqrt(surd_.convert_to<double>());
    return v;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.rat_ = -r.rat_;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    if (o.rat_ == 0) return *this;
    if (rat_ == 0) { *this = o; return *this; }
    if (surd_ != o.surd_)
        throw std::domain_error("ExactScalar: addition of incompatible surds sqrt(" +
                                surd_.str() + ") and sqrt(" + o.surd_.str() + ")");
    rat_ += o.rat_;
    if (rat_ == 0) surd_ = 1;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    rat_ *= o.rat_;
    if (rat_ == 0) { surd_ = 1; return *this; }
    if (o.surd_ != 1 || surd_ != 1) {
        surd_ *= o.surd_;
        normalize();
    }
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.rat_ == 0) throw std::domain_error("ExactScalar: division by zero");
    // 1/(r*sqrt(s)) = (1/(r*s)) * sqrt(s)
    ExactScalar inv(Rational(1) / (o.rat_ * o.surd_), o.surd_);
    return *this *= inv;
}

double SurdSum::to_double() const {
    double v = 0;
    for (const auto& [s, r] : terms_) {
        double t = alpwave::to_double(r);
        if (s != 1) t *= std::sqrt(s.convert_to<double>());
        v += t;
    }
    return v;
}

ExactScalar SurdSum::as_scalar() const {
    if (terms_.empty()) return ExactScalar();
    if (terms_.size() > 1)
        throw std::domain_error("SurdSum: multi-term sum is not a single ExactScalar");
    const auto& [s, r] = *terms_.begin();
    return ExactScalar(r, s);
}

SurdSum SurdSum::operator-() const {
    SurdSum out;
    for (const auto& [s, r] : terms_) out.terms_.emplace(s, -r);
    return out;
}

SurdSum& SurdSum::operator+=(const ExactScalar& s) {
    if (s.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(s.surd(), s.rational_part());
    if (!inserted) {
        it->second += s.rational_part();
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [s, r] : o.terms_) *this += ExactScalar(r, s);
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    for (const auto& [s, r] : o.terms_) *this += ExactScalar(-r, s);
    return *this;
}

SurdSum& SurdSum::operator*=(const ExactScalar& s) {
    SurdSum out;
    for (const auto& [m, r] : terms_) out += ExactScalar(r, m) * s;
    terms_ = std::move(out.terms_);
    return *this;
}

SurdSum& SurdSum::operator*=(const SurdSum& o) {
    SurdSum out;
    for (const auto& [m, r] : terms_)
        for (const auto& [m2, r2] : o.terms_) out += ExactScalar(r, m) * ExactScalar(r2, m2);
    terms_ = std::move(out.terms_);
    return *this;
}

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::domain_error("pochhammer: negative order");
    Rational r = 1;
    for (long j = 0; j < k; ++j) r *= (a + j);
    return r;
}

double pochhammer(double a, long k) {
    double r = 1;
    for (long j = 0; j < k; ++j) r *= (a + j);
    return r;
}

}  // namespace alpwave
