#include "iurlab/core.hpp"
#include "iurlab/errors.hpp"
#include "iurlab/events.hpp"
#include "iurlab/random.hpp"
#include "iurlab/trace.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace iurlab;

TEST(Rng, SameSeedSameStream)
{
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
        ASSERT_EQ(a.normal(), b.normal());
    }
}

TEST(Rng, DifferentSeedsDiffer)
{
    Rng a(42), b(43);
    bool differ = false;
    for (int i = 0; i < 10; ++i)
        differ |= a.next_u64() != b.next_u64();
    EXPECT_TRUE(differ);
}

TEST(Rng, UniformMean)
{
    Rng rng(7);
    double sum = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / n, 0.5, 0.002);
}

TEST(Rng, NormalMoments)
{
    Rng rng(11);
    double sum = 0.0, sum_sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sum_sq += z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sum_sq / n, 1.0, 0.02);
}

TEST(Rng, IndexStaysInRange)
{
    Rng rng(3);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i)
        ++hits[rng.index(7)];
    for (int h : hits)
        EXPECT_GT(h, 800);
}

TEST(Rng, MixSeedSeparatesStreams)
{
    EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
    EXPECT_NE(mix_seed(1, 0), mix_seed(2, 0));
    EXPECT_EQ(mix_seed(5, 9), mix_seed(5, 9));
}

TEST(SearchSpace, RejectsEmptyOrInvertedBox)
{
    EXPECT_THROW(SearchSpace(Eigen::VectorXd(0), Eigen::VectorXd(0)), DomainError);
    EXPECT_THROW(SearchSpace(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)), DomainError);
}

TEST(SearchSpace, ClampProjectsIntoBox)
{
    const auto space = SearchSpace::cube(3, -1.0, 1.0);
    Eigen::VectorXd x(3);
    x << -5.0, 0.25, 9.0;
    space.clamp(x);
    EXPECT_EQ(x, Eigen::Vector3d(-1.0, 0.25, 1.0));
    EXPECT_TRUE(space.contains(x));
}

TEST(ObjectiveProblem, ErrorSubtractsOptimum)
{
    ObjectiveProblem problem("shifted", SearchSpace::cube(2, -1, 1),
                             [](const Eigen::Ref<const Eigen::VectorXd>& x) { return x.squaredNorm() + 3.0; }, 3.0);
    EXPECT_DOUBLE_EQ(problem.error(problem(Eigen::Vector2d(1, 0))), 1.0);
    EXPECT_EQ(problem.codomain_bits(), 32.0);
    EXPECT_THROW(problem.set_codomain_bits(0.0), DomainError);
}

TEST(Trace, StoresRunningMinimum)
{
    RunTrace trace("X", "p", 1, 100);
    trace.record_generation(5, 1);
    trace.record_generation(3, 2);
    trace.record_generation(4, 3);
    ASSERT_EQ(trace.size(), 3u);
    EXPECT_EQ(trace.records()[0].best_error, 5);
    EXPECT_EQ(trace.records()[1].best_error, 3);
    EXPECT_EQ(trace.records()[2].best_error, 3);
}

TEST(Trace, SingleRecord)
{
    RunTrace trace("X", "p", 1, 10);
    trace.record_generation(1.0, 1);
    EXPECT_EQ(trace.size(), 1u);
}

TEST(Trace, RejectsOverBudgetAndDecreasingEvaluations)
{
    RunTrace trace("X", "p", 1, 10);
    EXPECT_THROW(trace.record_generation(1.0, 11), BudgetError);
    trace.record_generation(1.0, 5);
    EXPECT_THROW(trace.record_generation(1.0, 4), DomainError);
}

TEST(Trace, CsvRoundTrip)
{
    RunTrace trace("ES", "f1", 9, 1000);
    trace.record_generation(10.5, 30);
    const std::vector<DecisionEvent> events{DecisionEvent::top_mu_of_lambda(30, 15),
                                            DecisionEvent::pbest_membership(0.05, 40)};
    trace.record_generation(2.25, 60, events);

    std::ostringstream out;
    trace.write_csv(out);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "generation,evals,best_error,events");
    std::istringstream in(out.str());
    const RunTrace back = read_trace_csv(in);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back.records(), trace.records());
    ASSERT_EQ(back.events().size(), 2u);
    EXPECT_EQ(back.events()[0], trace.events()[0]);
    EXPECT_EQ(back.events()[1], trace.events()[1]);
}

TEST(Events, TokenRoundTrip)
{
    for (const auto& e : {DecisionEvent::compare_with_best(7), DecisionEvent::top_mu_of_lambda(10, 3),
                          DecisionEvent::ranked_top_mu_of_lambda(4, 2), DecisionEvent::ring_best_of_three(),
                          DecisionEvent::global_best_of_swarm(40), DecisionEvent::pbest_membership(0.2, 10)})
        EXPECT_EQ(DecisionEvent::parse(e.token()), e) << e.token();
}

TEST(Events, ValidateRejectsBadParameters)
{
    EXPECT_THROW(DecisionEvent::top_mu_of_lambda(3, 4).validate(), DomainError);
    EXPECT_THROW(DecisionEvent::pbest_membership(0.0, 10).validate(), DomainError);
    EXPECT_THROW(DecisionEvent::parse("Nonsense(1)"), ParseError);
}
