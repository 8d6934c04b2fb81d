// real_linalg.hpp - exact kernels on real (rational) matrices
//
// RREF, rank, the RREF-canonical full-rank factorization A = F G, the
// Moore-Penrose inverse A^+ = G^T (G G^T)^-1 (F^T F)^-1 F^T, and a
// parametrized family of {1}-inverses.

#ifndef DUALRANK_REAL_LINALG_HPP
#define DUALRANK_REAL_LINALG_HPP

#include <cstddef>
#include <vector>

#include "dualrank/errors.hpp"
#include "dualrank/matrix.hpp"

namespace dualrank {

template <ExactField T>
struct RrefResult {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_cols;

    [[nodiscard]] std::size_t rank() const noexcept { return pivot_cols.size(); }
};

// Gauss-Jordan elimination. Any nonzero entry is an acceptable pivot in exact
// arithmetic; we take the first one in the column.
template <ExactField T>
RrefResult<T> rref(Matrix<T> a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == T{0}) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(row, p);

        const T inv = T{1} / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;

        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == T{0}) continue;
            const T factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

template <ExactField T>
std::size_t rank(const Matrix<T>& a) {
    return rref(a).rank();
}

template <ExactField T>
bool has_full_column_rank(const Matrix<T>& a) {
    return rank(a) == a.cols();
}

template <ExactField T>
bool has_full_row_rank(const Matrix<T>& a) {
    return rank(a) == a.rows();
}

template <ExactField T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (!a.is_square()) {
        throw dimension_error("inverse of non-square " + a.shape_string() + " matrix");
    }
    const std::size_t n = a.rows();
    Matrix<T> work = a;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && work(p, col) == T{0}) ++p;
        if (p == n) {
            throw not_invertible_error("singular " + a.shape_string() + " matrix");
        }
        work.swap_rows(col, p);
        inv.swap_rows(col, p);

        const T scale = T{1} / work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work(i, col) == T{0}) continue;
            const T factor = work(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= factor * work(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

template <ExactField T>
struct FullRankFactors {
    Matrix<T> f;  // m x r, full column rank
    Matrix<T> g;  // r x n, full row rank

    [[nodiscard]] std::size_t rank() const noexcept { return f.cols(); }
};

// F = pivot columns of A, G = nonzero rows of rref(A).
template <ExactField T>
FullRankFactors<T> full_rank_decompose(const Matrix<T>& a) {
    auto r = rref(a);
    if (r.rank() == 0) {
        throw degenerate_rank_error("full-rank decomposition of a rank-0 matrix");
    }
    return {a.select_columns(r.pivot_cols), r.reduced.top_rows(r.rank())};
}

// F^+ = (F^T F)^-1 F^T for full column rank F.
template <ExactField T>
Matrix<T> left_inverse(const Matrix<T>& f) {
    const auto ft = f.transpose();
    return inverse(ft * f) * ft;
}

// G^+ = G^T (G G^T)^-1 for full row rank G.
template <ExactField T>
Matrix<T> right_inverse(const Matrix<T>& g) {
    const auto gt = g.transpose();
    return gt * inverse(g * gt);
}

template <ExactField T>
Matrix<T> pinv(const Matrix<T>& a) {
    if (a.is_zero()) {
        return Matrix<T>(a.cols(), a.rows());
    }
    const auto fg = full_rank_decompose(a);
    return right_inverse(fg.g) * left_inverse(fg.f);
}

// I - A A^+ and I - A^+ A, given A^+.
template <ExactField T>
Matrix<T> left_complement(const Matrix<T>& a, const Matrix<T>& a_pinv) {
    return Matrix<T>::identity(a.rows()) - a * a_pinv;
}

template <ExactField T>
Matrix<T> right_complement(const Matrix<T>& a, const Matrix<T>& a_pinv) {
    return Matrix<T>::identity(a.cols()) - a_pinv * a;
}

// X = A^+ + (I - A^+ A) V + W (I - A A^+). V, W are n x m for A m x n.
template <ExactField T>
Matrix<T> sample_one_inverse(const Matrix<T>& a, const Matrix<T>& v, const Matrix<T>& w) {
    const bool ok = v.rows() == a.cols() && v.cols() == a.rows() && w.rows() == a.cols() && w.cols() == a.rows();
    if (!ok) {
        throw dimension_error("{1}-inverse parameters must be " + a.transpose().shape_string());
    }
    const auto ap = pinv(a);
    return ap + right_complement(a, ap) * v + w * left_complement(a, ap);
}

}  // namespace dualrank

#endif  // DUALRANK_REAL_LINALG_HPP
