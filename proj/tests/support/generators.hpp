// generators.hpp - random exact instances for property and acceptance tests

#ifndef DUALRANK_TESTS_GENERATORS_HPP
#define DUALRANK_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "dualrank/dualrank.hpp"

namespace dualrank::gen {

using Rng = std::mt19937_64;

inline long small_int(Rng& rng, long lo = -3, long hi = 3) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline RealMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -3, long hi = 3) {
    RealMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(small_int(rng, lo, hi));
    return m;
}

inline RealDualMatrix random_dual(Rng& rng, std::size_t rows, std::size_t cols) {
    auto re = random_matrix(rng, rows, cols);
    auto du = random_matrix(rng, rows, cols);
    return {std::move(re), std::move(du)};
}

inline RealMatrix random_symmetric(Rng& rng, std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(small_int(rng));
    return m;
}

// Full column rank m x r (m >= r).
inline RealMatrix random_full_column_rank(Rng& rng, std::size_t m, std::size_t r) {
    for (;;) {
        auto f = random_matrix(rng, m, r);
        if (rank(f) == r) return f;
    }
}

inline RealMatrix random_full_row_rank(Rng& rng, std::size_t r, std::size_t n) {
    return random_full_column_rank(rng, n, r).transpose();
}

inline RealMatrix random_rank_matrix(Rng& rng, std::size_t m, std::size_t n, std::size_t r) {
    for (;;) {
        auto a = random_full_column_rank(rng, m, r) * random_full_row_rank(rng, r, n);
        if (rank(a) == r) return a;
    }
}

inline RealMatrix random_invertible(Rng& rng, std::size_t n) { return random_full_column_rank(rng, n, n); }

inline RealDualMatrix random_invertible_dual(Rng& rng, std::size_t n) {
    auto re = random_invertible(rng, n);
    auto du = random_matrix(rng, n, n);
    return {std::move(re), std::move(du)};
}

// A1 = F X + Y G with (F, G) the canonical factors of A0: always admits a DMPGI.
inline RealDualMatrix random_consistent(Rng& rng, std::size_t m, std::size_t n, std::size_t r) {
    auto a0 = random_rank_matrix(rng, m, n, r);
    const auto fg = full_rank_decompose(a0);
    auto a1 = fg.f * random_matrix(rng, r, n) + random_matrix(rng, m, r) * fg.g;
    return {std::move(a0), std::move(a1)};
}

// Unconstrained dual part; inconsistent unless r = m or r = n or by chance.
inline RealDualMatrix random_unconstrained(Rng& rng, std::size_t m, std::size_t n, std::size_t r) {
    auto a0 = random_rank_matrix(rng, m, n, r);
    auto a1 = random_matrix(rng, m, n);
    return {std::move(a0), std::move(a1)};
}

// X^ (P0 + eps 0) X^-1 with P0 = F (G F)^-1 G a rank-r real projector.
inline RealDualMatrix random_dual_idempotent(Rng& rng, std::size_t n, std::size_t r) {
    RealMatrix projector;
    for (;;) {
        const auto f = random_full_column_rank(rng, n, r);
        const auto g = random_full_row_rank(rng, r, n);
        const auto gf = g * f;
        if (rank(gf) != r) continue;
        projector = f * inverse(gf) * g;
        break;
    }
    const auto x = random_invertible_dual(rng, n);
    return x * RealDualMatrix(projector) * dinverse(x);
}

// F^ T^ F^T with T^ invertible: dual EP by construction.
inline RealDualMatrix random_dual_ep(Rng& rng, std::size_t n, std::size_t r) {
    const RealDualMatrix f(random_full_column_rank(rng, n, r), random_matrix(rng, n, r));
    const auto t = random_invertible_dual(rng, r);
    return f * t * f.transpose();
}

// Real part EP (F T F^T), dual part any consistent perturbation: EP or not.
inline RealDualMatrix random_real_ep_part(Rng& rng, std::size_t n, std::size_t r) {
    const auto f = random_full_column_rank(rng, n, r);
    auto a0 = f * random_invertible(rng, r) * f.transpose();
    const auto fg = full_rank_decompose(a0);
    auto a1 = fg.f * random_matrix(rng, r, n) + random_matrix(rng, n, r) * fg.g;
    return {std::move(a0), std::move(a1)};
}

}  // namespace dualrank::gen

#endif  // DUALRANK_TESTS_GENERATORS_HPP
