// dual_matrix.hpp - dual matrices A0 + eps A1 with eps^2 = 0

#ifndef DUALRANK_DUAL_MATRIX_HPP
#define DUALRANK_DUAL_MATRIX_HPP

#include <bitset>
#include <initializer_list>
#include <ostream>
#include <string>

#include "dualrank/errors.hpp"
#include "dualrank/matrix.hpp"
#include "dualrank/real_linalg.hpp"

namespace dualrank {

template <ExactField T>
class DualMatrix {
public:
    using real_type = Matrix<T>;
    using size_type = std::size_t;

    DualMatrix() = default;

    DualMatrix(real_type real, real_type dual) : real_(std::move(real)), dual_(std::move(dual)) {
        if (!real_.same_shape(dual_)) {
            throw dimension_error("dual matrix parts differ in shape: " + real_.shape_string() + " vs " +
                                  dual_.shape_string());
        }
    }

    // Embeds a real matrix with zero dual part.
    explicit DualMatrix(real_type real) : real_(std::move(real)), dual_(real_.rows(), real_.cols()) {}

    static DualMatrix identity(size_type n) { return DualMatrix(real_type::identity(n)); }
    static DualMatrix zero(size_type rows, size_type cols) { return DualMatrix(real_type(rows, cols)); }

    [[nodiscard]] const real_type& real() const noexcept { return real_; }
    [[nodiscard]] const real_type& dual() const noexcept { return dual_; }
    [[nodiscard]] size_type rows() const noexcept { return real_.rows(); }
    [[nodiscard]] size_type cols() const noexcept { return real_.cols(); }
    [[nodiscard]] bool is_square() const noexcept { return real_.is_square(); }
    [[nodiscard]] std::string shape_string() const { return real_.shape_string(); }

    [[nodiscard]] DualMatrix transpose() const { return {real_.transpose(), dual_.transpose()}; }

    friend DualMatrix operator+(const DualMatrix& a, const DualMatrix& b) {
        return {a.real_ + b.real_, a.dual_ + b.dual_};
    }
    friend DualMatrix operator-(const DualMatrix& a, const DualMatrix& b) {
        return {a.real_ - b.real_, a.dual_ - b.dual_};
    }
    friend DualMatrix operator-(const DualMatrix& a) { return {-a.real_, -a.dual_}; }

    // (A0 + eps A1)(B0 + eps B1) = A0 B0 + eps (A0 B1 + A1 B0)
    friend DualMatrix operator*(const DualMatrix& a, const DualMatrix& b) {
        if (a.cols() != b.rows()) {
            throw dimension_error("cannot multiply dual " + a.shape_string() + " by " + b.shape_string());
        }
        return {a.real_ * b.real_, a.real_ * b.dual_ + a.dual_ * b.real_};
    }

    friend bool operator==(const DualMatrix&, const DualMatrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const DualMatrix& m) {
        return os << m.real_ << " + eps " << m.dual_;
    }

private:
    real_type real_;
    real_type dual_;
};

using RealDualMatrix = DualMatrix<Rational>;

template <ExactField T>
DualMatrix<T> dmul(const DualMatrix<T>& a, const DualMatrix<T>& b) {
    return a * b;
}

template <ExactField T>
DualMatrix<T> dtranspose(const DualMatrix<T>& a) {
    return a.transpose();
}

// (A0 + eps A1)^-1 = A0^-1 - eps A0^-1 A1 A0^-1
template <ExactField T>
DualMatrix<T> dinverse(const DualMatrix<T>& a) {
    if (!a.is_square()) {
        throw dimension_error("inverse of non-square dual " + a.shape_string() + " matrix");
    }
    const auto inv = inverse(a.real());
    return {inv, -(inv * a.dual() * inv)};
}

// Subset of the four Penrose equations
//   (1) A X A = A   (2) X A X = X   (3) (A X)^T = A X   (4) (X A)^T = X A
class PenroseProfile {
public:
    PenroseProfile() = default;

    static PenroseProfile all() {
        PenroseProfile p;
        p.bits_.set();
        return p;
    }

    static PenroseProfile of(std::initializer_list<int> equations) {
        PenroseProfile p;
        for (int e : equations) p.set(e);
        return p;
    }

    void set(int equation) { bits_.set(index(equation)); }
    [[nodiscard]] bool has(int equation) const { return bits_.test(index(equation)); }
    [[nodiscard]] bool contains(const PenroseProfile& other) const { return (bits_ & other.bits_) == other.bits_; }
    [[nodiscard]] bool is_complete() const { return bits_.all(); }

    // "{1,2,4}"
    [[nodiscard]] std::string to_string() const {
        std::string s = "{";
        for (int e = 1; e <= 4; ++e) {
            if (!has(e)) continue;
            if (s.size() > 1) s += ',';
            s += static_cast<char>('0' + e);
        }
        return s + "}";
    }

    friend bool operator==(const PenroseProfile&, const PenroseProfile&) = default;
    friend std::ostream& operator<<(std::ostream& os, const PenroseProfile& p) { return os << p.to_string(); }

private:
    static std::size_t index(int equation) {
        if (equation < 1 || equation > 4) {
            throw std::out_of_range("Penrose equation index must be 1..4");
        }
        return static_cast<std::size_t>(equation - 1);
    }

    std::bitset<4> bits_;
};

template <ExactField T>
PenroseProfile penrose_profile(const DualMatrix<T>& a, const DualMatrix<T>& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows()) {
        throw dimension_error("candidate " + x.shape_string() + " is not shaped like the transpose of " +
                              a.shape_string());
    }
    const auto ax = a * x;
    const auto xa = x * a;
    PenroseProfile p;
    if (ax * a == a) p.set(1);
    if (xa * x == x) p.set(2);
    if (ax.transpose() == ax) p.set(3);
    if (xa.transpose() == xa) p.set(4);
    return p;
}

}  // namespace dualrank

#endif  // DUALRANK_DUAL_MATRIX_HPP
