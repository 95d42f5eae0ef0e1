#ifndef ALPWAVE_EXACT_HPP
#define ALPWAVE_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace alpwave {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Split s = r^2 * m with m squarefree; returns m and stores r in root.
Int squarefree_part(Int s, Int& root);

Int factorial(long n);
/// n!! with the usual conventions (-1)!! = 0!! = 1.
Int double_factorial(long n);
Int binomial(long n, long k);

double to_double(const Rational& r);

/// A number of the form (num/den) * sqrt(surd), surd a positive squarefree
/// integer.  This class is closed under multiplication and division; addition
/// is defined only when the surds agree (or one operand is zero).
class ExactScalar {
public:
    ExactScalar() : rat_(0), surd_(1) {}
    ExactScalar(long v) : rat_(v), surd_(1) {}
    ExactScalar(Rational r) : rat_(std::move(r)), surd_(1) {}
    ExactScalar(Rational r, Int surd);

    /// sqrt(r) for a nonnegative rational r, as (1/den)*sqrt(num*den).
    static ExactScalar sqrt_of(const Rational& r);
    /// 2^(p/2): integer power of two times sqrt(2) when p is odd.
    static ExactScalar pow2_half(long p);

    const Rational& rational_part() const { return rat_; }
    const Int& surd() const { return surd_; }
    bool is_zero() const { return rat_ == 0; }
    bool is_rational() const { return surd_ == 1; }
    int sign() const;
    double to_double() const;

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.rat_ == b.rat_ && a.surd_ == b.surd_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

private:
    void normalize();

    Rational rat_;
    Int surd_;
};

/// A finite sum of ExactScalar terms with pairwise distinct surds.  Closed
/// under +, -, *; this is what multiresolution cascades produce when filter
/// rows mix incommensurate square roots.
class SurdSum {
public:
    SurdSum() = default;
    SurdSum(long v) { *this += ExactScalar(v); }
    SurdSum(const Rational& r) { *this += ExactScalar(r); }
    SurdSum(const ExactScalar& s) { *this += s; }

    bool is_zero() const { return terms_.empty(); }
    double to_double() const;
    const std::map<Int, Rational>& terms() const { return terms_; }
    /// The value as a single ExactScalar; throws if more than one term.
    ExactScalar as_scalar() const;

    SurdSum operator-() const;
    SurdSum& operator+=(const ExactScalar& s);
    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    SurdSum& operator*=(const ExactScalar& s);
    SurdSum& operator*=(const SurdSum& o);

    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    friend SurdSum operator*(SurdSum a, const SurdSum& b) { return a *= b; }
    friend SurdSum operator*(SurdSum a, const ExactScalar& b) { return a *= b; }
    friend bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SurdSum& a, const SurdSum& b) { return !(a == b); }

private:
    std::map<Int, Rational> terms_;  // squarefree surd -> rational multiplier
};

/// Rising factorial (a)_k over exact rationals.
Rational pochhammer(const Rational& a, long k);
double pochhammer(double a, long k);

// Scalar-type shims shared by the polynomial and matrix templates.
template <class T>
inline bool scalar_is_zero(const T& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Rational& v) { return v == 0; }
inline bool scalar_is_zero(const double& v) { return v == 0.0; }

template <class T>
inline T scalar_from_rational(const Rational& r) { return T(r); }
template <>
inline double scalar_from_rational<double>(const Rational& r) { return to_double(r); }

template <class T>
inline double scalar_to_double(const T& v) { return v.to_double(); }
inline double scalar_to_double(const Rational& v) { return to_double(v); }
inline double scalar_to_double(const double& v) { return v; }

}  // namespace alpwave

#endif
