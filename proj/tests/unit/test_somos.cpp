#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "totpos/somos.hpp"

using namespace totpos;

TEST(Somos, UnitSeedValues) {
    const std::array<Scalar, 5> unit{1, 1, 1, 1, 1};
    const auto a = somos5_numeric(unit, 14);
    const std::vector<long> expected{1, 1, 1, 1, 1, 2, 3, 5, 11, 37, 83, 274, 1217, 6161};
    ASSERT_EQ(a.size(), expected.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], Scalar(expected[k])) << k;
    EXPECT_EQ(a, oracle::somos5(unit, 14));
}

TEST(Somos, ShortAndInvalidRequests) {
    const std::array<Scalar, 5> seed{2, 3, 5, 7, 11};
    EXPECT_EQ(somos5_numeric(seed, 3).size(), 3U);
    EXPECT_THROW(somos5_numeric({1, 0, 1, 1, 1}, 8), InvalidArgument);
    EXPECT_THROW(somos5_symbolic(13), GuardExceeded);
}

TEST(Somos, RationalSeedsMatchRecurrence) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        std::array<Scalar, 5> seed;
        for (auto& s : seed) s = oracle::positive(rng);
        EXPECT_EQ(somos5_numeric(seed, 12), oracle::somos5(seed, 12));
    }
}

TEST(Somos, SymbolicTermsAreLaurentWithNonnegativeCoefficients) {
    const auto terms = somos5_symbolic(12);
    ASSERT_EQ(terms.size(), 12U);
    std::mt19937_64 rng(2);
    std::array<Scalar, 5> seed;
    for (auto& s : seed) s = oracle::positive(rng);
    const auto values = oracle::somos5(seed, 12);
    for (const auto& t : terms) {
        EXPECT_TRUE(t.nonnegative) << t.index;
        for (const auto& [exp, coeff] : t.value.terms()) {
            EXPECT_GT(coeff.sign(), 0);
            EXPECT_TRUE(coeff.is_integer());
        }
        EXPECT_EQ(t.value.eval(seed), values[t.index - 1]) << t.index;
    }
    EXPECT_TRUE(terms[5].value == somos5_symbolic(6)[5].value);
    EXPECT_EQ(terms[0].value.str(), "a1");
}
