// penrose_lab.hpp - sampled {i}-inverses of full-rank dual factors and the
// mixed membership claims for A^ = A^1 A^2:
//   (a) (A^2)^(i) (A^1)^(1) is an {i}-inverse of A^, i = 1, 2, 4
//   (b) (A^2)^(1) (A^1)^(j) is a  {j}-inverse of A^, j = 1, 2, 3
//
// Families used (F column full rank, G row full rank, S symmetric in both parts):
//   F^+ + W (I - F F^+)   {1,2,4}-inverses of F
//   S F^T                 {3}-inverses of F
//   G^+ + (I - G^+ G) V   {1,2,3}-inverses of G
//   G^T S                 {4}-inverses of G

#ifndef DUALRANK_PENROSE_LAB_HPP
#define DUALRANK_PENROSE_LAB_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "dualrank/dmpgi.hpp"
#include "dualrank/dual_matrix.hpp"
#include "dualrank/errors.hpp"
#include "dualrank/rank_decomposition.hpp"

namespace dualrank {

namespace detail {

template <ExactField T>
void require_shape(const DualMatrix<T>& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw dimension_error(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                              ", got " + m.shape_string());
    }
}

template <ExactField T>
bool is_symmetric(const DualMatrix<T>& s) {
    return s.transpose() == s;
}

}  // namespace detail

template <ExactField T>
DualMatrix<T> sample_dual_one_inverse_left(const DualMatrix<T>& f, const DualMatrix<T>& w) {
    detail::require_shape(w, f.cols(), f.rows(), "left sampler parameter W");
    const auto fp = pinv_col_full(f);
    return fp + w * (DualMatrix<T>::identity(f.rows()) - f * fp);
}

template <ExactField T>
DualMatrix<T> sample_dual_one_inverse_right(const DualMatrix<T>& g, const DualMatrix<T>& v) {
    detail::require_shape(v, g.cols(), g.rows(), "right sampler parameter V");
    const auto gp = pinv_row_full(g);
    return gp + (DualMatrix<T>::identity(g.cols()) - gp * g) * v;
}

template <ExactField T>
DualMatrix<T> sample_dual_three_inverse_left(const DualMatrix<T>& f, const DualMatrix<T>& s) {
    detail::require_shape(s, f.cols(), f.cols(), "symmetric parameter S");
    if (!detail::is_symmetric(s)) {
        throw precondition_error("{3}-inverse parameter must be symmetric in both parts");
    }
    return s * f.transpose();
}

template <ExactField T>
DualMatrix<T> sample_dual_four_inverse_right(const DualMatrix<T>& g, const DualMatrix<T>& s) {
    detail::require_shape(s, g.rows(), g.rows(), "symmetric parameter S");
    if (!detail::is_symmetric(s)) {
        throw precondition_error("{4}-inverse parameter must be symmetric in both parts");
    }
    return g.transpose() * s;
}

// Entries uniform in [-3, 3]. Uses only the raw engine output so the stream is
// identical across standard libraries.
class SmallIntSource {
public:
    explicit SmallIntSource(std::uint64_t seed) : engine_(seed) {}

    long next() { return static_cast<long>(engine_() % 7) - 3; }

    Matrix<Rational> matrix(std::size_t rows, std::size_t cols) {
        Matrix<Rational> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(next());
        return m;
    }

    DualMatrix<Rational> dual_matrix(std::size_t rows, std::size_t cols) {
        auto re = matrix(rows, cols);
        auto du = matrix(rows, cols);
        return {std::move(re), std::move(du)};
    }

    Matrix<Rational> symmetric(std::size_t n) {
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(next());
        return m;
    }

    DualMatrix<Rational> dual_symmetric(std::size_t n) {
        auto re = symmetric(n);
        auto du = symmetric(n);
        return {std::move(re), std::move(du)};
    }

private:
    std::mt19937_64 engine_;
};

enum class MembershipClaim : std::size_t { a1 = 0, a2, a4, b1, b2, b3 };

inline constexpr std::array<MembershipClaim, 6> all_membership_claims{
    MembershipClaim::a1, MembershipClaim::a2, MembershipClaim::a4,
    MembershipClaim::b1, MembershipClaim::b2, MembershipClaim::b3};

inline std::string to_string(MembershipClaim c) {
    switch (c) {
        case MembershipClaim::a1: return "a1";
        case MembershipClaim::a2: return "a2";
        case MembershipClaim::a4: return "a4";
        case MembershipClaim::b1: return "b1";
        case MembershipClaim::b2: return "b2";
        case MembershipClaim::b3: return "b3";
    }
    return "?";
}

// Penrose equation a claim asserts.
inline int claimed_equation(MembershipClaim c) {
    switch (c) {
        case MembershipClaim::a1:
        case MembershipClaim::b1: return 1;
        case MembershipClaim::a2:
        case MembershipClaim::b2: return 2;
        case MembershipClaim::b3: return 3;
        case MembershipClaim::a4: return 4;
    }
    return 0;
}

struct ClaimTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct MembershipCounterexample {
    std::size_t sample = 0;
    MembershipClaim claim = MembershipClaim::a1;
    DualMatrix<Rational> candidate;
    PenroseProfile profile;
};

struct MembershipReport {
    std::size_t samples = 0;
    std::array<ClaimTally, 6> tallies{};
    std::optional<MembershipCounterexample> first_failure;

    [[nodiscard]] const ClaimTally& tally(MembershipClaim c) const { return tallies[static_cast<std::size_t>(c)]; }
    [[nodiscard]] std::size_t total_failures() const {
        std::size_t n = 0;
        for (const auto& t : tallies) n += t.failed;
        return n;
    }
    [[nodiscard]] bool all_passed() const { return total_failures() == 0; }
};

// Deterministic in (factors, samples, seed). Each sample draws fresh parameters
// for every factor inverse; the first failure is the lowest (sample, claim).
inline MembershipReport verify_mixed_membership(const DualRankFactors<Rational>& f, std::size_t samples,
                                                std::uint64_t seed) {
    require_valid_factors(f);
    const auto a = f.product();
    const std::size_t m = f.left.rows();
    const std::size_t r = f.rank();
    const std::size_t n = f.right.cols();

    SmallIntSource source(seed);
    MembershipReport report;
    report.samples = samples;

    for (std::size_t s = 0; s < samples; ++s) {
        const auto left_124 = sample_dual_one_inverse_left(f.left, source.dual_matrix(r, m));
        const auto left_124_b = sample_dual_one_inverse_left(f.left, source.dual_matrix(r, m));
        const auto left_3 = sample_dual_three_inverse_left(f.left, source.dual_symmetric(r));
        const auto right_123 = sample_dual_one_inverse_right(f.right, source.dual_matrix(n, r));
        const auto right_123_b = sample_dual_one_inverse_right(f.right, source.dual_matrix(n, r));
        const auto right_4 = sample_dual_four_inverse_right(f.right, source.dual_symmetric(r));

        const std::array<DualMatrix<Rational>, 6> candidates{
            right_123 * left_124,      // a1
            right_123_b * left_124,    // a2
            right_4 * left_124,        // a4
            right_123 * left_124_b,    // b1
            right_123_b * left_124_b,  // b2
            right_123 * left_3,        // b3
        };
        for (auto claim : all_membership_claims) {
            const auto& x = candidates[static_cast<std::size_t>(claim)];
            const auto profile = penrose_profile(a, x);
            auto& tally = report.tallies[static_cast<std::size_t>(claim)];
            if (profile.has(claimed_equation(claim))) {
                ++tally.passed;
            } else {
                ++tally.failed;
                if (!report.first_failure) {
                    report.first_failure = MembershipCounterexample{s, claim, x, profile};
                }
            }
        }
    }
    return report;
}

}  // namespace dualrank

#endif  // DUALRANK_PENROSE_LAB_HPP
