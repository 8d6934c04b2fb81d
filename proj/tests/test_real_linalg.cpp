#include <gtest/gtest.h>

#include "dualrank/real_linalg.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace dualrank;
using fixtures::q;

namespace {

// Real Penrose equations, checked directly.
bool is_moore_penrose(const RealMatrix& a, const RealMatrix& x) {
    return a * x * a == a && x * a * x == x && (a * x).transpose() == a * x && (x * a).transpose() == x * a;
}

}  // namespace

TEST(RealMatrix, Basics) {
    const RealMatrix x{{1, 2, 3}, {4, 5, 6}};
    EXPECT_EQ(RealMatrix::identity(2) * x, x);
    EXPECT_EQ((RealMatrix{{1, 2}, {3, 4}}).transpose(), (RealMatrix{{1, 3}, {2, 4}}));
    EXPECT_EQ(x.transpose().transpose(), x);
    EXPECT_EQ(x - x, RealMatrix(2, 3));
    EXPECT_THROW(x * x, dimension_error);
    EXPECT_THROW(x + x.transpose(), dimension_error);
}

TEST(RealMatrix, KnownFactorsMultiplyBack) {
    EXPECT_EQ(fixtures::rank2_a2() * fixtures::rank2_a4(), fixtures::rank2_3x3().real());
}

TEST(Rref, KnownRankTwo) {
    const auto r = rref(fixtures::rank2_3x3().real());
    EXPECT_EQ(r.reduced, (RealMatrix{{1, 0, q(1, 3)}, {0, 1, q(1, 3)}, {0, 0, 0}}));
    EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, IdentityAndZero) {
    const auto id = rref(RealMatrix::identity(3));
    EXPECT_EQ(id.reduced, RealMatrix::identity(3));
    EXPECT_EQ(id.pivot_cols, (std::vector<std::size_t>{0, 1, 2}));
    const auto z = rref(RealMatrix(2, 2));
    EXPECT_TRUE(z.reduced.is_zero());
    EXPECT_TRUE(z.pivot_cols.empty());
}

TEST(Rref, IdempotentAndRankOfProducts) {
    gen::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = gen::pick(rng, 1, 6), n = gen::pick(rng, 1, 6);
        const auto r = gen::pick(rng, 1, std::min(m, n));
        const auto a = gen::random_rank_matrix(rng, m, n, r);
        const auto red = rref(a);
        EXPECT_EQ(red.rank(), r);
        EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
        for (std::size_t k = 1; k < red.pivot_cols.size(); ++k) EXPECT_LT(red.pivot_cols[k - 1], red.pivot_cols[k]);
    }
}

TEST(FullRankDecompose, KnownFactors) {
    const auto fg = full_rank_decompose(fixtures::rank2_3x3().real());
    EXPECT_EQ(fg.f, fixtures::rank2_a2());
    EXPECT_EQ(fg.g, fixtures::rank2_a4());
    EXPECT_EQ(fg.rank(), 2u);

    const auto id = full_rank_decompose(RealMatrix::identity(2));
    EXPECT_EQ(id.f, RealMatrix::identity(2));
    EXPECT_EQ(id.g, RealMatrix::identity(2));
}

TEST(FullRankDecompose, RankZeroIsAnError) {
    EXPECT_THROW(full_rank_decompose(RealMatrix(3, 2)), degenerate_rank_error);
}

TEST(FullRankDecompose, RandomMultiplyBack) {
    gen::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = gen::random_rank_matrix(rng, 4, 3, 2);
        const auto fg = full_rank_decompose(a);
        EXPECT_EQ(fg.f * fg.g, a);
        EXPECT_EQ(rank(fg.f), 2u);
        EXPECT_EQ(rank(fg.g), 2u);
    }
}

TEST(Inverse, SingularThrows) {
    EXPECT_THROW(inverse(RealMatrix{{1, 2}, {2, 4}}), not_invertible_error);
    EXPECT_THROW(inverse(RealMatrix(2, 3)), dimension_error);
    const RealMatrix a{{0, 1}, {1, 1}};
    EXPECT_EQ(a * inverse(a), RealMatrix::identity(2));
}

TEST(Pinv, KnownFactorInverses) {
    EXPECT_EQ(pinv(fixtures::rank2_a2()), fixtures::rank2_a2_pinv());
    EXPECT_EQ(pinv(fixtures::rank2_a4()), fixtures::rank2_a4_pinv());
    EXPECT_EQ(pinv(RealMatrix::identity(4)), RealMatrix::identity(4));
}

TEST(Pinv, ZeroMatrixGivesTransposeShapedZero) {
    const auto p = pinv(RealMatrix(2, 3));
    EXPECT_EQ(p.rows(), 3u);
    EXPECT_EQ(p.cols(), 2u);
    EXPECT_TRUE(p.is_zero());
}

TEST(Pinv, PenroseEquationsInvolutionAndProjectors) {
    gen::Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const auto m = gen::pick(rng, 1, 5), n = gen::pick(rng, 1, 5);
        const auto r = gen::pick(rng, 1, std::min(m, n));
        const auto a = gen::random_rank_matrix(rng, m, n, r);
        const auto ap = pinv(a);
        EXPECT_TRUE(is_moore_penrose(a, ap));
        EXPECT_EQ(pinv(ap), a);

        const auto fg = full_rank_decompose(a);
        EXPECT_EQ(a * ap, fg.f * pinv(fg.f));
        EXPECT_EQ(ap * a, pinv(fg.g) * fg.g);
    }
}

TEST(SampleOneInverse, InvertibleCollapsesToInverse) {
    gen::Rng rng(19);
    const auto a = gen::random_invertible(rng, 3);
    const auto v = gen::random_matrix(rng, 3, 3), w = gen::random_matrix(rng, 3, 3);
    EXPECT_EQ(sample_one_inverse(a, v, w), inverse(a));
}

TEST(SampleOneInverse, ZeroParametersGivePinv) {
    const auto a = fixtures::rank2_3x3().real();
    EXPECT_EQ(sample_one_inverse(a, RealMatrix(3, 3), RealMatrix(3, 3)), pinv(a));
}

TEST(SampleOneInverse, SingularTwoByTwo) {
    const RealMatrix a{{1, 0}, {0, 0}};
    const RealMatrix ones{{1, 1}, {1, 1}};
    const auto x = sample_one_inverse(a, ones, ones);
    // A^+ = diag(1,0); (I - A^+A) V = [[0,0],[1,1]]; W (I - A A^+) = [[0,1],[0,1]]
    EXPECT_EQ(x, (RealMatrix{{1, 1}, {1, 2}}));
    EXPECT_EQ(a * x * a, a);
}

TEST(SampleOneInverse, AlwaysAOneInverse) {
    gen::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = gen::pick(rng, 1, 5), n = gen::pick(rng, 1, 5);
        const auto a = gen::random_rank_matrix(rng, m, n, gen::pick(rng, 1, std::min(m, n)));
        const auto x = sample_one_inverse(a, gen::random_matrix(rng, n, m), gen::random_matrix(rng, n, m));
        EXPECT_EQ(a * x * a, a);
    }
    EXPECT_THROW(sample_one_inverse(RealMatrix{{1, 0}}, RealMatrix(1, 2), RealMatrix(2, 1)), dimension_error);
}
