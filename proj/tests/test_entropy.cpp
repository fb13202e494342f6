#include "iurlab/entropy.hpp"
#include "iurlab/errors.hpp"
#include "iurlab/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace iurlab;
using namespace iurlab::entropy;

TEST(ShannonEntropy, BasicDistributions)
{
    EXPECT_DOUBLE_EQ(shannon_entropy(DiscreteDistribution({0.5, 0.5})), 1.0);
    EXPECT_DOUBLE_EQ(shannon_entropy(DiscreteDistribution({1.0})), 0.0);
    EXPECT_NEAR(shannon_entropy(DiscreteDistribution::uniform(8)), 3.0, 1e-15);
    EXPECT_DOUBLE_EQ(shannon_entropy(DiscreteDistribution({0.0, 1.0})), 0.0);
}

TEST(ShannonEntropy, RejectsInvalidDistributions)
{
    EXPECT_THROW(DiscreteDistribution({-0.5, 1.5}), InvalidDistribution);
    EXPECT_THROW(DiscreteDistribution({0.5, 0.4}), InvalidDistribution);
}

TEST(ShannonEntropy, UniformIsMaximal)
{
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 1 + rng.index(64);
        std::vector<double> p(k);
        double total = 0.0;
        for (auto& v : p)
            total += (v = rng.uniform());
        for (auto& v : p)
            v /= total;
        EXPECT_LE(shannon_entropy(p), std::log2(static_cast<double>(k)) + 1e-12);
    }
}

TEST(ConditionalEntropy, OracleTable)
{
    Eigen::Matrix2d joint;
    joint << 0.25, 0.25, 0.5, 0.0;
    EXPECT_NEAR(conditional_entropy(JointTable(joint)), 0.6887218755408673, 1e-12);
}

TEST(ConditionalEntropy, IndependenceAndDeterminism)
{
    Eigen::Vector3d px(0.2, 0.3, 0.5);
    Eigen::Vector2d py(0.6, 0.4);
    const JointTable independent(px * py.transpose());
    EXPECT_NEAR(conditional_entropy(independent), shannon_entropy(independent.marginal_x()), 1e-12);

    Eigen::Matrix2d deterministic;
    deterministic << 0.3, 0.0, 0.0, 0.7;
    EXPECT_NEAR(conditional_entropy(JointTable(deterministic)), 0.0, 1e-15);
}

TEST(ConditionalEntropy, ConditioningReduces)
{
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        Eigen::MatrixXd m(1 + rng.index(5), 1 + rng.index(5));
        for (Eigen::Index i = 0; i < m.size(); ++i)
            m.data()[i] = rng.uniform();
        m /= m.sum();
        const JointTable table(m);
        EXPECT_LE(conditional_entropy(table), shannon_entropy(table.marginal_x()) + 1e-12);
    }
}

TEST(Pi, OracleValues)
{
    EXPECT_DOUBLE_EQ(pi(1), 1.0);
    EXPECT_NEAR(pi(2), 0.9182958340544896, 1e-15);
    EXPECT_NEAR(pi(3), 0.8112781244591328, 1e-15);
    EXPECT_NEAR(pi(5), 0.6500224216483541, 1e-15);
    EXPECT_THROW(pi(0), DomainError);
}

TEST(Pi, StrictlyDecreasingInUnitInterval)
{
    double previous = pi(1);
    for (std::int64_t g = 2; g <= 10000; ++g) {
        const double v = pi(g);
        ASSERT_LT(v, previous) << g;
        ASSERT_GT(v, 0.0);
        previous = v;
    }
}

TEST(Combinatorics, OracleValues)
{
    EXPECT_NEAR(log2_binomial(30, 15), 27.208786402208183, 1e-12);
    EXPECT_NEAR(log2_falling_factorial(4, 2), 3.584962500721156, 1e-14);
    EXPECT_EQ(log2_binomial(9, 9), 0.0);
    EXPECT_EQ(log2_binomial(9, 0), 0.0);
    EXPECT_EQ(log2_falling_factorial(9, 0), 0.0);
    EXPECT_NEAR(log2_falling_factorial(9, 1), std::log2(9.0), 1e-14);
    EXPECT_THROW(log2_binomial(3, 4), DomainError);
    EXPECT_THROW(log2_falling_factorial(3, 4), DomainError);
}

TEST(Combinatorics, SymmetryAndOrdering)
{
    for (std::int64_t n = 0; n <= 120; ++n)
        for (std::int64_t k = 0; k <= n; ++k) {
            ASSERT_NEAR(log2_binomial(n, k), log2_binomial(n, n - k), 1e-9);
            ASSERT_GE(log2_falling_factorial(n, k) + 1e-9, log2_binomial(n, k));
        }
}

TEST(Combinatorics, ContinuousAcrossExactLimit)
{
    // the exact path stops at n = kExactCombinatoricsLimit; the step to the
    // next n must match Pascal's rule and the falling-factorial recurrence
    const std::int64_t n = kExactCombinatoricsLimit;
    for (std::int64_t k = 1; k <= n; ++k) {
        const double a = std::exp2(log2_binomial(n, k - 1) - log2_binomial(n + 1, k));
        const double b = std::exp2(log2_binomial(n, k) - log2_binomial(n + 1, k));
        ASSERT_NEAR(a + b, 1.0, 1e-9) << k;
        ASSERT_NEAR(log2_falling_factorial(n + 1, k),
                    std::log2(static_cast<double>(n + 1)) + log2_falling_factorial(n, k - 1), 1e-9);
    }
}

TEST(EntropyOfCounts, MatchesDistribution)
{
    const std::vector<std::uint64_t> counts{1, 1, 2};
    EXPECT_NEAR(entropy_of_counts(counts), 1.5, 1e-15);
}
