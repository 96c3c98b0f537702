#include <gtest/gtest.h>

#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "totpos/matrix.hpp"
#include "totpos/permutation.hpp"

using namespace totpos;

TEST(Minors, AgreeWithPermutationExpansion) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 5);
        const Matrix x = oracle::random_matrix(rng, n);
        for (const auto& s : all_minor_specs(static_cast<int>(n))) EXPECT_EQ(minor(x, s), oracle::leibniz(x, s)) << to_string(s);
        EXPECT_EQ(determinant(x), oracle::leibniz(x, interval(1, static_cast<int>(n)), interval(1, static_cast<int>(n))));
    }
}

TEST(Minors, ZeroPivotHandled) {
    const Matrix x{{0, 1, 2}, {1, 0, 3}, {4, 5, 0}};
    EXPECT_EQ(determinant(x), oracle::leibniz(x, {1, 2, 3}, {1, 2, 3}));
}

TEST(Minors, EmptyMinorIsOne) {
    const Matrix x{{2, 3}, {5, 7}};
    EXPECT_EQ(minor(x, MinorSpec{}), Scalar(1));
}

TEST(Minors, InvalidSpecsThrow) {
    const Matrix x{{2, 3}, {5, 7}};
    EXPECT_THROW(minor(x, MinorSpec{{1, 2}, {1}}), InvalidArgument);
    EXPECT_THROW(minor(x, MinorSpec{{2, 1}, {1, 2}}), InvalidArgument);
    EXPECT_THROW(minor(x, MinorSpec{{3}, {1}}), InvalidArgument);
}

TEST(Minors, Labels) {
    EXPECT_EQ(to_string(MinorSpec{{2, 3}, {1, 2}}), "D{23,12}");
    EXPECT_EQ(to_string(MinorSpec{{1}, {3}}), "D{1,3}");
}

TEST(Minors, EnumerationCounts) {
    for (int n = 1; n <= 5; ++n) {
        std::size_t binom = 1;
        for (int k = 1; k <= n; ++k) binom = binom * static_cast<std::size_t>(n + k) / static_cast<std::size_t>(k);
        EXPECT_EQ(all_minor_specs(n).size(), binom - 1);
        EXPECT_EQ(initial_minor_specs(n).size(), static_cast<std::size_t>(n * n));
    }
    EXPECT_EQ(solid_minor_specs(2).size(), 5U);
    EXPECT_EQ(solid_minor_specs(3).size(), 14U);
}

TEST(Minors, InitialMinorsAreSolidAndTouchTheBorder) {
    for (int n = 1; n <= 5; ++n) {
        std::set<MinorSpec> seen;
        for (const auto& s : initial_minor_specs(n)) {
            EXPECT_TRUE(is_solid(s));
            EXPECT_TRUE(is_initial(s));
            EXPECT_TRUE(s.rows.front() == 1 || s.cols.front() == 1);
            seen.insert(s);
        }
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(n * n));
    }
    EXPECT_EQ(initial_minor_at(3, 2), (MinorSpec{{2, 3}, {1, 2}}));
    EXPECT_FALSE(is_solid(MinorSpec{{1, 3}, {1, 2}}));
    EXPECT_FALSE(is_initial(MinorSpec{{2}, {2}}));
}

TEST(Minors, DesnanotResidualVanishes) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 60; ++k) {
        const int n = 2 + k % 4;
        const Matrix x = oracle::random_matrix(rng, static_cast<std::size_t>(n));
        EXPECT_TRUE(desnanot_residual(x, 1, n, 1, n).is_zero());
        if (n >= 3) {
            EXPECT_TRUE(desnanot_residual(x, 1, 2, 2, n).is_zero());
        }
    }
    EXPECT_THROW(desnanot_residual(Matrix{{1, 2}, {3, 4}}, 2, 1, 1, 2), InvalidArgument);
}

TEST(Minors, LduReconstructs) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const Matrix x = oracle::random_tp(rng, 3);
        const auto r = ldu_decompose(x);
        ASSERT_TRUE(std::holds_alternative<Ldu>(r));
        const auto& f = std::get<Ldu>(r);
        EXPECT_EQ(oracle::mul(oracle::mul(f.lower, f.diagonal), f.upper), x);
        for (std::size_t i = 1; i <= 3; ++i) {
            EXPECT_EQ(f.lower(i, i), Scalar(1));
            EXPECT_EQ(f.upper(i, i), Scalar(1));
        }
    }
    const auto bad = ldu_decompose(Matrix{{0, 1}, {1, 0}});
    ASSERT_TRUE(std::holds_alternative<LduFailure>(bad));
    EXPECT_EQ(std::get<LduFailure>(bad).k, 1U);
}

TEST(Minors, InverseRankPower) {
    const Matrix x{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}};
    EXPECT_EQ(oracle::mul(x, inverse(x)), Matrix::identity(3));
    EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrix);
    EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}, {1, 2}, {1, 2}), 1U);
    EXPECT_EQ(rank(x, {1, 2, 3}, {1, 2, 3}), 3U);
    EXPECT_EQ(power(x, 2), oracle::mul(x, x));
    EXPECT_EQ(power(x, 0), Matrix::identity(3));
    EXPECT_EQ(oracle::mul(antidiagonal(3), antidiagonal(3)), Matrix::identity(3));
}

TEST(Minors, BlockTriangular) {
    EXPECT_TRUE(is_block_triangular(Matrix{{1, 0, 0}, {1, 1, 1}, {1, 1, 1}}));
    EXPECT_TRUE(is_block_triangular(Matrix{{1, 1, 1}, {1, 1, 1}, {0, 0, 1}}));
    EXPECT_FALSE(is_block_triangular(Matrix{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}));
}

TEST(Permutations, ReducedWords) {
    const auto w0 = Permutation::longest(3);
    EXPECT_EQ(w0.length(), 3);
    EXPECT_EQ(reduced_words(w0).size(), 2U);
    EXPECT_EQ(reduced_words(Permutation::longest(4)).size(), 16U);
    EXPECT_TRUE(is_reduced({1, 2, 1}, 3));
    EXPECT_FALSE(is_reduced({1, 1}, 3));
    EXPECT_EQ(Permutation::from_word({1, 2, 1}, 3), w0);
}
