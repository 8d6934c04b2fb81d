// matrix.hpp - dense row-major matrix over an exact field

#ifndef DUALRANK_MATRIX_HPP
#define DUALRANK_MATRIX_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "dualrank/errors.hpp"
#include "dualrank/rational.hpp"

namespace dualrank {

// Exact field: every algorithm here compares against zero without tolerance.
template <typename T>
concept ExactField = std::regular<T> && requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    T{0};
    T{1};
};

template <ExactField T>
class Matrix {
public:
    using scalar_type = T;
    using size_type = std::size_t;

    Matrix() = default;

    Matrix(size_type rows, size_type cols, const T& fill = T{0}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    // Matrix<Rational>{{1, 2}, {3, 4}}
    Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()), cols_(0) {
        if (rows_ > 0) cols_ = init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) {
                throw dimension_error("ragged initializer for matrix");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(size_type n) {
        Matrix m(n, n);
        for (size_type i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    static Matrix zero(size_type rows, size_type cols) { return Matrix(rows, cols); }

    [[nodiscard]] size_type rows() const noexcept { return rows_; }
    [[nodiscard]] size_type cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] bool same_shape(const Matrix& o) const noexcept { return rows_ == o.rows_ && cols_ == o.cols_; }

    T& operator()(size_type i, size_type j) { return data_[i * cols_ + j]; }
    const T& operator()(size_type i, size_type j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T{0}; });
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_type i = 0; i < rows_; ++i)
            for (size_type j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Matrix column(size_type j) const {
        Matrix c(rows_, 1);
        for (size_type i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    // Columns listed in `cols`, in that order.
    [[nodiscard]] Matrix select_columns(const std::vector<size_type>& cols) const {
        Matrix out(rows_, cols.size());
        for (size_type i = 0; i < rows_; ++i)
            for (size_type k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
        return out;
    }

    [[nodiscard]] Matrix top_rows(size_type count) const {
        Matrix out(count, cols_);
        std::copy_n(data_.begin(), count * cols_, out.data_.begin());
        return out;
    }

    void swap_rows(size_type a, size_type b) {
        if (a == b) return;
        for (size_type j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "addition");
        for (size_type k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "subtraction");
        for (size_type k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw dimension_error("cannot multiply " + a.shape_string() + " by " + b.shape_string());
        }
        Matrix c(a.rows_, b.cols_);
        for (size_type i = 0; i < a.rows_; ++i) {
            for (size_type k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{0}) continue;
                for (size_type j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    [[nodiscard]] std::string shape_string() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (size_type i = 0; i < m.rows_; ++i) {
            if (i > 0) os << "; ";
            for (size_type j = 0; j < m.cols_; ++j) {
                if (j > 0) os << ", ";
                os << m(i, j);
            }
        }
        return os << ']';
    }

private:
    void require_same_shape(const Matrix& o, const char* what) const {
        if (!same_shape(o)) {
            throw dimension_error(std::string(what) + " of " + shape_string() + " and " + o.shape_string());
        }
    }

    size_type rows_ = 0;
    size_type cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<Rational>;

template <ExactField T>
Matrix<T> transpose(const Matrix<T>& a) {
    return a.transpose();
}

template <ExactField T>
Matrix<T> identity(std::size_t n) {
    return Matrix<T>::identity(n);
}

}  // namespace dualrank

#endif  // DUALRANK_MATRIX_HPP
