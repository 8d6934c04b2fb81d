// special_matrices.hpp - dual idempotent and dual EP matrices

#ifndef DUALRANK_SPECIAL_MATRICES_HPP
#define DUALRANK_SPECIAL_MATRICES_HPP

#include "dualrank/dmpgi.hpp"
#include "dualrank/dual_matrix.hpp"
#include "dualrank/errors.hpp"
#include "dualrank/rank_decomposition.hpp"
#include "dualrank/real_linalg.hpp"

namespace dualrank {

namespace detail {

template <ExactField T>
void require_square(const DualMatrix<T>& a, const char* what) {
    if (!a.is_square()) {
        throw dimension_error(std::string(what) + " needs a square matrix, got " + a.shape_string());
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Dual idempotent: A^ A^ = A^
// ---------------------------------------------------------------------------

template <ExactField T>
bool is_dual_idempotent(const DualMatrix<T>& a) {
    detail::require_square(a, "is_dual_idempotent");
    return a * a == a;
}

// A0^2 = A0 and A1 = A0 A1 + A1 A0
template <ExactField T>
bool idempotent_characterization(const DualMatrix<T>& a) {
    detail::require_square(a, "idempotent_characterization");
    const auto& a0 = a.real();
    const auto& a1 = a.dual();
    return a0 * a0 == a0 && a1 == a0 * a1 + a1 * a0;
}

// (A2 + eps A1 A2)(A4 + eps A4 A1)
template <ExactField T>
DualRankFactors<T> idempotent_decompose(const DualMatrix<T>& a) {
    if (!is_dual_idempotent(a)) {
        throw precondition_error("idempotent_decompose: matrix is not dual idempotent");
    }
    const auto fg = full_rank_decompose(a.real());
    return {DualMatrix<T>(fg.f, a.dual() * fg.f), DualMatrix<T>(fg.g, fg.g * a.dual())};
}

// A0^+ + eps (A0^+ A1^T + A1^T A0^+ - A0^+ (A1 + A1^T) A0 A0^+ - A0^+ A0 (A1^T + A1) A0^+),
// checked against dmpgi_direct before it is returned.
template <ExactField T>
DualMatrix<T> idempotent_dmpgi(const DualMatrix<T>& a) {
    if (!is_dual_idempotent(a)) {
        throw precondition_error("idempotent_dmpgi: matrix is not dual idempotent");
    }
    const auto& a0 = a.real();
    const auto& a1 = a.dual();
    const auto a0p = pinv(a0);
    const auto a1t = a1.transpose();
    const auto sym = a1 + a1t;
    DualMatrix<T> result(a0p, a0p * a1t + a1t * a0p - a0p * sym * a0 * a0p - a0p * a0 * sym * a0p);
    if (!(result == dmpgi_direct(a))) {
        throw consistency_error("idempotent DMPGI formula disagrees with the direct DMPGI");
    }
    return result;
}

// A^2 A^1 = I_r
template <ExactField T>
bool factor_commute_is_identity(const DualRankFactors<T>& f) {
    if (f.left.cols() != f.right.rows() || f.right.cols() != f.left.rows()) {
        return false;
    }
    return f.right * f.left == DualMatrix<T>::identity(f.rank());
}

// ---------------------------------------------------------------------------
// Dual EP: A^ A^+ = A^+ A^
// ---------------------------------------------------------------------------

template <ExactField T>
bool is_dual_ep(const DualMatrix<T>& a) {
    detail::require_square(a, "is_dual_ep");
    const auto ap = dmpgi_direct(a);
    return a * ap == ap * a;
}

// A^1 (A^1)^+ = (A^2)^+ A^2
template <ExactField T>
bool ep_via_factors(const DualRankFactors<T>& f) {
    require_valid_factors(f);
    if (f.left.rows() != f.right.cols()) {
        throw dimension_error("ep_via_factors needs a square product");
    }
    return f.left * pinv_col_full(f.left) == pinv_row_full(f.right) * f.right;
}

// A0 A0^+ = A0^+ A0 and (I - A0^+ A0) A1 A0^+ = (A0^+ A1 (I - A0^+ A0))^T
template <ExactField T>
bool ep_via_parts(const DualMatrix<T>& a) {
    detail::require_square(a, "ep_via_parts");
    if (!dmpgi_exists(a)) {
        throw existence_error("ep_via_parts: DMPGI does not exist");
    }
    const auto& a0 = a.real();
    const auto& a1 = a.dual();
    const auto a0p = pinv(a0);
    if (!(a0 * a0p == a0p * a0)) {
        return false;
    }
    const auto comp = right_complement(a0, a0p);
    return comp * a1 * a0p == (a0p * a1 * comp).transpose();
}

// A2 (A2^T A2)^-1 A2^T = A4^T (A4 A4^T)^-1 A4 and
// (I - A4^T (A4 A4^T)^-1 A4) A3 A2^+ = (A4^+ A5 (I - A4^T (A4 A4^T)^-1 A4))^T
template <ExactField T>
bool ep_via_decomposition(const DualRankFactors<T>& f) {
    require_valid_factors(f);
    if (f.left.rows() != f.right.cols()) {
        throw dimension_error("ep_via_decomposition needs a square product");
    }
    const auto& a2 = f.left.real();
    const auto& a3 = f.left.dual();
    const auto& a4 = f.right.real();
    const auto& a5 = f.right.dual();

    const auto a2p = left_inverse(a2);
    const auto a4p = right_inverse(a4);
    const auto col_proj = a2 * a2p;
    const auto row_proj = a4p * a4;
    if (!(col_proj == row_proj)) {
        return false;
    }
    const auto comp = Matrix<T>::identity(a4.cols()) - row_proj;
    return comp * a3 * a2p == (a4p * a5 * comp).transpose();
}

}  // namespace dualrank

#endif  // DUALRANK_SPECIAL_MATRICES_HPP
