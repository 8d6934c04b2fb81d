// rational.hpp - exact rational scalars and dual scalars
//
// Rational wraps a GMP mpq_t through gmpxx. Every arithmetic result is kept in
// canonical form (positive denominator, gcd 1, zero as 0/1), so equality is
// plain structural equality and the textual form is unique.

#ifndef DUALRANK_RATIONAL_HPP
#define DUALRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "dualrank/errors.hpp"

namespace dualrank {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) {
            throw construction_error("rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw not_invertible_error("division by zero rational");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q", or "p" when q == 1.
    [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

// rat(2, 4) == 1/2, rat(3, -9) == -1/3.
inline Rational rat(long num, long den) { return Rational(mpz_class(num), mpz_class(den)); }

inline bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// Accepts "p", "p/q", "-p/q"; whitespace is not allowed inside the token.
inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    const std::string_view den_part = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num_part) || !is_digits(den_part)) {
        throw parse_error("malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_part), 10);
    const mpz_class den(std::string(den_part), 10);
    if (den == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

// Element of R[eps]/(eps^2): real + eps * dual.
template <typename T>
struct DualNumber {
    T real{};
    T dual{};

    friend DualNumber operator+(const DualNumber& a, const DualNumber& b) { return {a.real + b.real, a.dual + b.dual}; }
    friend DualNumber operator-(const DualNumber& a, const DualNumber& b) { return {a.real - b.real, a.dual - b.dual}; }
    friend DualNumber operator-(const DualNumber& a) { return {-a.real, -a.dual}; }
    friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
        return {a.real * b.real, a.real * b.dual + a.dual * b.real};
    }
    friend bool operator==(const DualNumber&, const DualNumber&) = default;

    [[nodiscard]] bool invertible() const { return !(real == T{}); }

    // (x + eps y)^-1 = 1/x - eps y/x^2
    [[nodiscard]] DualNumber inverse() const {
        if (!invertible()) {
            throw not_invertible_error("dual number with zero real part");
        }
        const T inv = T{1} / real;
        return {inv, -(dual * inv * inv)};
    }
};

using DualScalar = DualNumber<Rational>;

template <typename T>
DualNumber<T> dual_mul(const DualNumber<T>& a, const DualNumber<T>& b) {
    return a * b;
}

}  // namespace dualrank

#endif  // DUALRANK_RATIONAL_HPP
