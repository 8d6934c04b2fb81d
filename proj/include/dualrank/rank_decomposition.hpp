// rank_decomposition.hpp - dual r-rank decomposition A^ = A^1 A^2
//
// With A0 = A2 A4 the canonical real full-rank factorization, the dual part
// must split as A1 = A2 A5 + A3 A4. That is a Sylvester equation in (A5, A3),
// so the decomposition exists iff (I - A2 A2^+) A1 (I - A4^+ A4) = 0, and all
// decompositions sharing (A2, A4) are
//   A3 = (I - A2 A2^+) A1 A4^+ - A2 P
//   A5 = A2^+ A1 + P A4
// for an arbitrary r x r matrix P.

#ifndef DUALRANK_RANK_DECOMPOSITION_HPP
#define DUALRANK_RANK_DECOMPOSITION_HPP

#include <optional>
#include <type_traits>
#include <sstream>

#include "dualrank/dual_matrix.hpp"
#include "dualrank/errors.hpp"
#include "dualrank/real_linalg.hpp"
#include "dualrank/sylvester.hpp"

namespace dualrank {

template <ExactField T>
struct DualRankFactors {
    DualMatrix<T> left;   // m x r, real part full column rank
    DualMatrix<T> right;  // r x n, real part full row rank

    [[nodiscard]] std::size_t rank() const noexcept { return left.cols(); }
    [[nodiscard]] DualMatrix<T> product() const { return left * right; }

    friend bool operator==(const DualRankFactors&, const DualRankFactors&) = default;
};

// Throws rank_error unless left is r-column and right is r-row full rank with a shared r >= 1.
template <ExactField T>
void require_valid_factors(const DualRankFactors<T>& f) {
    if (f.left.cols() != f.right.rows()) {
        throw dimension_error("factor inner dimensions differ: " + f.left.shape_string() + " and " +
                              f.right.shape_string());
    }
    if (f.rank() == 0) {
        throw degenerate_rank_error("dual rank factors with r = 0");
    }
    if (!has_full_column_rank(f.left.real())) {
        throw rank_error("left factor real part is not column full rank");
    }
    if (!has_full_row_rank(f.right.real())) {
        throw rank_error("right factor real part is not row full rank");
    }
}

template <ExactField T>
ResidualCheck<T> decomposition_exists(const DualMatrix<T>& a) {
    const auto fg = full_rank_decompose(a.real());
    return sylvester_consistent(fg.f, fg.g, a.dual());
}

template <ExactField T>
DualRankFactors<T> decompose(const DualMatrix<T>& a, std::optional<std::type_identity_t<Matrix<T>>> p = std::nullopt) {
    const auto fg = full_rank_decompose(a.real());
    const std::size_t r = fg.rank();
    const Matrix<T> param = p ? std::move(*p) : Matrix<T>(r, r);
    if (param.rows() != r || param.cols() != r) {
        throw dimension_error("parameter P must be " + std::to_string(r) + "x" + std::to_string(r) + ", got " +
                              param.shape_string());
    }

    const auto a2p = pinv(fg.f);
    const auto a4p = pinv(fg.g);
    const auto left_proj = left_complement(fg.f, a2p);
    const auto residual = left_proj * a.dual() * right_complement(fg.g, a4p);
    if (!residual.is_zero()) {
        std::ostringstream os;
        os << "dual r-rank decomposition does not exist; residual " << residual;
        throw existence_error(os.str());
    }

    auto a3 = left_proj * a.dual() * a4p - fg.f * param;
    auto a5 = a2p * a.dual() + param * fg.g;
    return {DualMatrix<T>(fg.f, std::move(a3)), DualMatrix<T>(fg.g, std::move(a5))};
}

// Accepts any factor pair, not only the canonical one.
template <ExactField T>
bool verify_decomposition(const DualMatrix<T>& a, const DualRankFactors<T>& f) {
    if (f.left.cols() != f.right.rows() || f.left.rows() != a.rows() || f.right.cols() != a.cols()) {
        return false;
    }
    if (f.rank() == 0 || !has_full_column_rank(f.left.real()) || !has_full_row_rank(f.right.real())) {
        return false;
    }
    return f.product() == a;
}

}  // namespace dualrank

#endif  // DUALRANK_RANK_DECOMPOSITION_HPP
