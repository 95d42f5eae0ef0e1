#ifndef ALPWAVE_MATRIX_HPP
#define ALPWAVE_MATRIX_HPP

#include "alpwave/exact.hpp"

#include <stdexcept>
#include <vector>

namespace alpwave {

/// Minimal dense row-major matrix; sizes here are (n+1) x (n+1) with n <= 30.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, T{}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& v = a.at(r, k);
                if (scalar_is_zero(v)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    p.at(r, c) = p.at(r, c) + v * b.at(k, c);
            }
        return p;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix s(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.d_.size(); ++k) s.d_[k] = a.d_[k] + b.d_[k];
        return s;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

    /// scale * identity.
    static Matrix scaled_identity(std::size_t n, const T& scale) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = scale;
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> d_;
};

}  // namespace alpwave

#endif
