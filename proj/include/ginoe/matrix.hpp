#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace ginoe {

/// Small dense row-major matrix over an arbitrary ring scalar.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        assert(x.cols_ == y.rows_);
        Matrix out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
            }
        }
        return out;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        for (std::size_t k = 0; k < x.data_.size(); ++k) x.data_[k] += y.data_[k];
        return x;
    }
    friend Matrix operator-(Matrix x, const Matrix& y) {
        for (std::size_t k = 0; k < x.data_.size(); ++k) x.data_[k] -= y.data_[k];
        return x;
    }
    friend Matrix operator*(const T& s, Matrix x) {
        for (auto& v : x.data_) v = s * v;
        return x;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    T trace() const {
        T acc(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) acc += (*this)(i, i);
        return acc;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// tr(M^1), ..., tr(M^count) by repeated multiplication.
template <class T>
std::vector<T> trace_powers(const Matrix<T>& m, unsigned count) {
    std::vector<T> out;
    out.reserve(count);
    if (count == 0) return out;
    Matrix<T> p = m;
    out.push_back(p.trace());
    for (unsigned j = 2; j <= count; ++j) {
        p = p * m;
        out.push_back(p.trace());
    }
    return out;
}

}  // namespace ginoe
