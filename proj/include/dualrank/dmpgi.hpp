// dmpgi.hpp - dual Moore-Penrose generalized inverse
//
// Three independent routes:
//   dmpgi_direct    closed form in A0, A1 (no factorization of A^)
//   dmpgi_factor    A^+ = (A^2)^+ (A^1)^+ from a dual r-rank decomposition
//   dmpgi_explicit  the same product expanded into real-part formulas
// They must agree exactly for every admissible parameter P.

#ifndef DUALRANK_DMPGI_HPP
#define DUALRANK_DMPGI_HPP

#include <sstream>

#include "dualrank/dual_matrix.hpp"
#include "dualrank/errors.hpp"
#include "dualrank/rank_decomposition.hpp"
#include "dualrank/real_linalg.hpp"
#include "dualrank/sylvester.hpp"

namespace dualrank {

// Q^S_{X,Y} = X^T Y + Y^T X
template <ExactField T>
Matrix<T> symmetrized_product(const Matrix<T>& x, const Matrix<T>& y) {
    return x.transpose() * y + y.transpose() * x;
}

template <ExactField T>
ResidualCheck<T> dmpgi_exists(const DualMatrix<T>& a) {
    const auto a0p = pinv(a.real());
    return residual_check(left_complement(a.real(), a0p) * a.dual() * right_complement(a.real(), a0p));
}

// A^+ = A0^+ - eps (A0^+ A1 A0^+ - (A0^T A0)^+ A1^T (I - A0 A0^+) - (I - A0^+ A0) A1^T (A0 A0^T)^+)
template <ExactField T>
DualMatrix<T> dmpgi_direct(const DualMatrix<T>& a) {
    const auto& a0 = a.real();
    const auto& a1 = a.dual();
    const auto a0p = pinv(a0);
    const auto left = left_complement(a0, a0p);
    const auto right = right_complement(a0, a0p);
    const auto residual = left * a1 * right;
    if (!residual.is_zero()) {
        std::ostringstream os;
        os << "DMPGI does not exist; residual " << residual;
        throw existence_error(os.str());
    }
    const auto a0t = a0.transpose();
    const auto a1t = a1.transpose();
    auto dual_part = -(a0p * a1 * a0p - pinv(a0t * a0) * a1t * left - right * a1t * pinv(a0 * a0t));
    return {a0p, std::move(dual_part)};
}

// (A^T A)^-1 A^T for an r-column full rank dual matrix. Computed twice, through
// dinverse and through the expanded real-part formula, and cross-checked.
template <ExactField T>
DualMatrix<T> pinv_col_full(const DualMatrix<T>& a) {
    if (a.cols() == 0 || !has_full_column_rank(a.real())) {
        throw rank_error("pinv_col_full: real part " + a.shape_string() + " is not column full rank");
    }
    const auto at = a.transpose();
    auto compact = dinverse(at * a) * at;

    const auto& a2 = a.real();
    const auto& a3 = a.dual();
    const auto gram_inv = inverse(a2.transpose() * a2);
    const auto q = symmetrized_product(a2, a3);
    const DualMatrix<T> expanded(gram_inv * a2.transpose(),
                                 gram_inv * a3.transpose() - gram_inv * q * gram_inv * a2.transpose());
    if (!(compact == expanded)) {
        throw consistency_error("pinv_col_full: compact and expanded forms disagree");
    }
    return compact;
}

// A^T (A A^T)^-1 for an r-row full rank dual matrix, cross-checked the same way.
template <ExactField T>
DualMatrix<T> pinv_row_full(const DualMatrix<T>& a) {
    if (a.rows() == 0 || !has_full_row_rank(a.real())) {
        throw rank_error("pinv_row_full: real part " + a.shape_string() + " is not row full rank");
    }
    const auto at = a.transpose();
    auto compact = at * dinverse(a * at);

    const auto& a4 = a.real();
    const auto& a5 = a.dual();
    const auto gram_inv = inverse(a4 * a4.transpose());
    const auto q = symmetrized_product(a4.transpose(), a5.transpose());
    const DualMatrix<T> expanded(a4.transpose() * gram_inv,
                                 a5.transpose() * gram_inv - a4.transpose() * gram_inv * q * gram_inv);
    if (!(compact == expanded)) {
        throw consistency_error("pinv_row_full: compact and expanded forms disagree");
    }
    return compact;
}

template <ExactField T>
DualMatrix<T> dmpgi_factor(const DualRankFactors<T>& f) {
    require_valid_factors(f);
    return pinv_row_full(f.right) * pinv_col_full(f.left);
}

// A4^+ A2^+ + eps (A4^+ (A2^T A2)^-1 (A3^T - Q^S_{A2,A3} A2^+)
//                 + (A5^T - A4^+ Q^S_{A4^T,A5^T}) (A4 A4^T)^-1 A2^+)
template <ExactField T>
DualMatrix<T> dmpgi_explicit(const DualRankFactors<T>& f) {
    require_valid_factors(f);
    const auto& a2 = f.left.real();
    const auto& a3 = f.left.dual();
    const auto& a4 = f.right.real();
    const auto& a5 = f.right.dual();

    const auto a2p = left_inverse(a2);
    const auto a4p = right_inverse(a4);
    const auto q_left = symmetrized_product(a2, a3);
    const auto q_right = symmetrized_product(a4.transpose(), a5.transpose());

    auto dual_part = a4p * inverse(a2.transpose() * a2) * (a3.transpose() - q_left * a2p) +
                     (a5.transpose() - a4p * q_right) * inverse(a4 * a4.transpose()) * a2p;
    return {a4p * a2p, std::move(dual_part)};
}

enum class DmpgiMethod { direct, factor, explicit_formula };

// Convenience: factor-based methods use the canonical P = 0 decomposition.
// A rank-0 real part has no r-rank decomposition; there the DMPGI exists only
// for A^ = 0, and every method falls through to the direct formula.
template <ExactField T>
DualMatrix<T> dmpgi(const DualMatrix<T>& a, DmpgiMethod method = DmpgiMethod::direct) {
    if (a.real().is_zero()) {
        return dmpgi_direct(a);
    }
    switch (method) {
        case DmpgiMethod::direct:
            return dmpgi_direct(a);
        case DmpgiMethod::factor:
            return dmpgi_factor(decompose(a));
        case DmpgiMethod::explicit_formula:
            return dmpgi_explicit(decompose(a));
    }
    throw precondition_error("unknown DMPGI method");
}

}  // namespace dualrank

#endif  // DUALRANK_DMPGI_HPP
