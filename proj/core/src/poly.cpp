#include "alpwave/poly.hpp"

namespace alpwave {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints,
                             std::vector<Polynomial<ExactScalar>> pieces)
    : bp_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (bp_.size() != pieces_.size() + 1)
        throw std::invalid_argument("PiecewisePoly: need one more breakpoint than pieces");
    for (std::size_t k = 0; k + 1 < bp_.size(); ++k)
        if (!(bp_[k] < bp_[k + 1]))
            throw std::invalid_argument("PiecewisePoly: breakpoints must be increasing");
}

long PiecewisePoly::degree() const {
    long d = -1;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

double PiecewisePoly::eval_double(double t) const {
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        if (t >= to_double(bp_[k]) && t < to_double(bp_[k + 1])) return pieces_[k].eval_double(t);
    }
    return 0.0;
}

ExactScalar PiecewisePoly::eval_exact(const Rational& t) const {
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        if (t >= bp_[k] && t < bp_[k + 1]) return pieces_[k].eval(ExactScalar(t));
    }
    return ExactScalar();
}

ExactScalar PiecewisePoly::moment(long s) const {
    ExactScalar sum;
    for (std::size_t k = 0; k < pieces_.size(); ++k)
        sum += pieces_[k].shifted(s).integral(bp_[k], bp_[k + 1]);
    return sum;
}

ExactScalar PiecewisePoly::inner_product(const PiecewisePoly& other) const {
    if (bp_ != other.bp_)
        throw std::invalid_argument("PiecewisePoly::inner_product: breakpoints differ");
    ExactScalar sum;
    for (std::size_t k = 0; k < pieces_.size(); ++k)
        sum += (pieces_[k] * other.pieces_[k]).integral(bp_[k], bp_[k + 1]);
    return sum;
}

ExactScalar PiecewisePoly::moment_over(long s, const Rational& from, const Rational& to) const {
    ExactScalar sum;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const Rational a = std::max(bp_[k], from), b = std::min(bp_[k + 1], to);
        if (a < b) sum += pieces_[k].shifted(s).integral(a, b);
    }
    return sum;
}

}  // namespace alpwave
