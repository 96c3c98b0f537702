#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "totpos/gamma0.hpp"
#include "totpos/network.hpp"

using namespace totpos;

TEST(Network, RandomNetworksSatisfyPathFamilyExpansion) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 60; ++k) {
        const int n = 1 + k % 3;
        const auto net = oracle::random_network(rng, n, 12);
        const Matrix x = weight_matrix(net);
        for (const auto& s : all_minor_specs(n)) {
            const Scalar expect = oracle::path_family_sum(net, s);
            EXPECT_EQ(minor(x, s), expect) << to_string(s);
            EXPECT_EQ(disjoint_path_minor(net, s), expect) << to_string(s);
            EXPECT_EQ(signed_path_sum(net, s), expect) << to_string(s);
        }
    }
}

TEST(Network, ChipsRealizeElementaryMatrices) {
    const Scalar t = Scalar(5) / Scalar(3);
    for (int i = 1; i <= 3; ++i) {
        if (i < 3) {
            EXPECT_EQ(weight_matrix(chip(Letter::up(i), t, 3)), oracle::jacobi(3, 0, static_cast<std::size_t>(i), t));
            EXPECT_EQ(weight_matrix(chip(Letter::down(i), t, 3)), oracle::jacobi(3, 1, static_cast<std::size_t>(i), t));
        }
        EXPECT_EQ(weight_matrix(chip(Letter::diag(i), t, 3)), oracle::jacobi(3, 2, static_cast<std::size_t>(i), t));
    }
    EXPECT_THROW(chip(Letter::diag(1), Scalar(0), 3), InvalidArgument);
    EXPECT_THROW(chip(Letter::up(3), t, 3), InvalidArgument);
}

TEST(Network, ConcatenationMultipliesWeightMatrices) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 20; ++k) {
        const auto a = oracle::random_network(rng, 3, 10), b = oracle::random_network(rng, 3, 10);
        EXPECT_EQ(weight_matrix(concatenate(a, b)), oracle::mul(weight_matrix(a), weight_matrix(b)));
    }
    PlanarNetwork acc = chip(Letter::up(1), Scalar(2), 2);
    acc = concatenate(acc, chip(Letter::down(1), Scalar(3), 2));
    EXPECT_EQ(weight_matrix(acc), (Matrix{{7, 2}, {3, 1}}));
    EXPECT_THROW(concatenate(chip(Letter::up(1), Scalar(1), 2), chip(Letter::up(1), Scalar(1), 3)), InvalidArgument);
}

TEST(Network, WordNetworkMatchesProduct) {
    std::mt19937_64 rng(3);
    const Word w = Word::parse("2~ 1 @3 2 1~ @1 2~ 1 @2", 3);
    std::vector<Scalar> t(w.size());
    for (auto& v : t) v = oracle::positive(rng);
    const auto wn = word_network(w, t);
    EXPECT_EQ(weight_matrix(wn.network), oracle::word_product(w, t));
    ASSERT_EQ(wn.param_edges.size(), w.size());
    for (std::size_t k = 0; k < w.size(); ++k) EXPECT_EQ(wn.network.edges()[wn.param_edges[k]].weight, t[k]);
}

TEST(Network, StandardExamples) {
    EXPECT_EQ(weight_matrix(pascal_network(3)), (Matrix{{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
    EXPECT_EQ(weight_matrix(diagonal_network(4)), Matrix::identity(4));
    EXPECT_FALSE(is_totally_connected(pascal_network(3)));
    EXPECT_TRUE(is_totally_connected(gamma0(3).network));
}

TEST(Network, DisjointPathCountsOfStandardNetwork) {
    const auto g = gamma0(3);
    EXPECT_EQ(weight_matrix(g.network), (Matrix{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}}));
    for (const auto& s : all_minor_specs(3)) EXPECT_EQ(disjoint_path_count(g.network, s), oracle::path_family_sum(g.network, s));
}

TEST(Network, RejectsInvalidGeometry) {
    const std::vector<Vertex> square{{0, 1}, {0, 2}, {1, 1}, {1, 2}};
    EXPECT_THROW(PlanarNetwork(2, square, {{0, 3, Scalar(1)}, {1, 2, Scalar(1)}}), InvalidArgument);
    EXPECT_THROW(PlanarNetwork(2, square, {{2, 0, Scalar(1)}}), InvalidArgument);
    EXPECT_THROW(PlanarNetwork(2, {{0, 1}, {0, 1}, {1, 2}, {1, 1}}, {}), InvalidArgument);
    EXPECT_THROW(PlanarNetwork(2, {{0, 3}, {1, 1}}, {}), InvalidArgument);
    EXPECT_NO_THROW(PlanarNetwork(2, square, {{0, 3, Scalar(1)}, {0, 2, Scalar(1)}}));
}

TEST(Gamma0, WeightsAndEssentialEdges) {
    std::mt19937_64 rng(4);
    std::vector<Scalar> t(9);
    for (auto& v : t) v = oracle::positive(rng);
    const auto g = gamma0(3, t);
    EXPECT_EQ(weight_matrix(g.network), oracle::word_product(i_max(3), t));
    ASSERT_EQ(g.essential.size(), 9U);
    // Parameters in i_max(3) order and the initial minor each one leads.
    const std::vector<MinorSpec> leads{{{3}, {1}},       {{2}, {1}},       {{2, 3}, {1, 2}},       {{1}, {1}},     {{1, 2}, {1, 2}},
                                       {{1, 2, 3}, {1, 2, 3}}, {{1, 2}, {2, 3}}, {{1}, {2}}, {{1}, {3}}};
    for (std::size_t k = 0; k < 9; ++k) {
        EXPECT_EQ(g.essential[k].parameter, k);
        EXPECT_EQ(g.essential[k].minor, leads[k]) << k;
        EXPECT_EQ(g.network.edges()[g.essential[k].edge].weight, t[k]);
    }
}

TEST(Gamma0, InitialMinorsAreMonomials) {
    for (int n = 1; n <= 4; ++n) {
        const auto& tab = imax_monomial_table(n);
        EXPECT_EQ(tab.minors.size(), static_cast<std::size_t>(n * n));
        for (std::size_t r = 0; r < tab.minors.size(); ++r)
            EXPECT_EQ(tab.exponents[r][tab.leading[r]], 1);
    }
}
