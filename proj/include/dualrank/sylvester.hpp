// sylvester.hpp - the two-sided linear equation A X + Y B = C
//
// Solvable iff (I - A A^+) C (I - B^+ B) = 0; then every solution is
//   X = A^+ C + U B + (I - A^+ A) V
//   Y = (I - A A^+) C B^+ - A U + W (I - B B^+)
// for arbitrary U (p x q), V (p x n), W (m x q).

#ifndef DUALRANK_SYLVESTER_HPP
#define DUALRANK_SYLVESTER_HPP

#include <optional>
#include <type_traits>
#include <sstream>

#include "dualrank/errors.hpp"
#include "dualrank/matrix.hpp"
#include "dualrank/real_linalg.hpp"

namespace dualrank {

// Outcome of a solvability test that vanishes exactly when it holds.
template <ExactField T>
struct ResidualCheck {
    bool holds = false;
    Matrix<T> residual;

    explicit operator bool() const noexcept { return holds; }
};

template <ExactField T>
ResidualCheck<T> residual_check(Matrix<T> residual) {
    const bool ok = residual.is_zero();
    return {ok, std::move(residual)};
}

template <ExactField T>
struct SylvesterSolution {
    Matrix<T> x;
    Matrix<T> y;
    Matrix<T> u;
    Matrix<T> v;
    Matrix<T> w;
};

namespace detail {

template <ExactField T>
void require_sylvester_shapes(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    if (c.rows() != a.rows() || c.cols() != b.cols()) {
        std::ostringstream os;
        os << "A X + Y B = C needs C to be " << a.rows() << "x" << b.cols() << ", got " << c.shape_string();
        throw dimension_error(os.str());
    }
}

}  // namespace detail

template <ExactField T>
ResidualCheck<T> sylvester_consistent(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    detail::require_sylvester_shapes(a, b, c);
    const auto ap = pinv(a);
    const auto bp = pinv(b);
    return residual_check(left_complement(a, ap) * c * right_complement(b, bp));
}

// U, V, W default to zero when absent.
template <ExactField T>
SylvesterSolution<T> sylvester_solve(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                     std::optional<std::type_identity_t<Matrix<T>>> u = std::nullopt,
                                     std::optional<std::type_identity_t<Matrix<T>>> v = std::nullopt,
                                     std::optional<std::type_identity_t<Matrix<T>>> w = std::nullopt) {
    detail::require_sylvester_shapes(a, b, c);
    const std::size_t m = a.rows(), p = a.cols(), q = b.rows(), n = b.cols();

    Matrix<T> uu = u ? std::move(*u) : Matrix<T>(p, q);
    Matrix<T> vv = v ? std::move(*v) : Matrix<T>(p, n);
    Matrix<T> ww = w ? std::move(*w) : Matrix<T>(m, q);
    if (uu.rows() != p || uu.cols() != q || vv.rows() != p || vv.cols() != n || ww.rows() != m || ww.cols() != q) {
        throw dimension_error("Sylvester parameters must be U " + std::to_string(p) + "x" + std::to_string(q) +
                              ", V " + std::to_string(p) + "x" + std::to_string(n) + ", W " + std::to_string(m) +
                              "x" + std::to_string(q));
    }

    const auto ap = pinv(a);
    const auto bp = pinv(b);
    const auto left = left_complement(a, ap);
    if (!(left * c * right_complement(b, bp)).is_zero()) {
        throw existence_error("A X + Y B = C is inconsistent");
    }

    auto x = ap * c + uu * b + right_complement(a, ap) * vv;
    auto y = left * c * bp - a * uu + ww * left_complement(b, bp);
    return {std::move(x), std::move(y), std::move(uu), std::move(vv), std::move(ww)};
}

}  // namespace dualrank

#endif  // DUALRANK_SYLVESTER_HPP
