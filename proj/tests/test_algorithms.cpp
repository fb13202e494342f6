#include "iurlab/algorithms/cmaes.hpp"
#include "iurlab/algorithms/config.hpp"
#include "iurlab/algorithms/differential_evolution.hpp"
#include "iurlab/algorithms/evolution_strategy.hpp"
#include "iurlab/algorithms/optimizer.hpp"
#include "iurlab/algorithms/particle_swarm.hpp"
#include "iurlab/algorithms/random_search.hpp"
#include "iurlab/errors.hpp"
#include "iurlab/iur.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <cmath>

using namespace iurlab;
using namespace iurlab::algorithms;

namespace {

ObjectiveProblem sphere(Eigen::Index d)
{
    return ObjectiveProblem("sphere", SearchSpace::cube(d, -100, 100),
                            [](const Eigen::Ref<const Eigen::VectorXd>& x) { return x.squaredNorm(); });
}

const std::vector<AlgorithmId> kAll{AlgorithmId::MC,   AlgorithmId::LJ,  AlgorithmId::ES, AlgorithmId::CMAES,
                                    AlgorithmId::PSO,  AlgorithmId::SPSO, AlgorithmId::DE, AlgorithmId::JADE};

} // namespace

TEST(Config, ParseNames)
{
    EXPECT_EQ(parse_algorithm_id("cma-es"), AlgorithmId::CMAES);
    EXPECT_EQ(parse_algorithm_id("Jade"), AlgorithmId::JADE);
    EXPECT_THROW(parse_algorithm_id("sa"), ConfigError);
}

TEST(Config, Labels)
{
    EXPECT_EQ(default_config(AlgorithmId::ES).label(), "ES(15/30)");
    EXPECT_EQ(default_config(AlgorithmId::CMAES).label(), "CMAES");
    auto de = default_config(AlgorithmId::DE);
    de.de_variant = iur::DeVariant::Best1;
    EXPECT_EQ(de.label(), "DE/best/1");
}

TEST(Config, Validation)
{
    auto es = default_config(AlgorithmId::ES);
    es.mu = 31;
    EXPECT_THROW(es.validate(), ConfigError);

    auto spso = default_config(AlgorithmId::SPSO);
    spso.phi1 = spso.phi2 = 2.0;
    EXPECT_THROW(spso.validate(), ConfigError);

    auto de = default_config(AlgorithmId::DE);
    de.swarm_size = 3;
    EXPECT_THROW(de.validate(), ConfigError);
    de.swarm_size = 4;
    EXPECT_NO_THROW(de.validate());
    de.de_variant = iur::DeVariant::Rand2;
    EXPECT_THROW(de.validate(), ConfigError);

    auto jade = default_config(AlgorithmId::JADE);
    jade.p = 0.0;
    EXPECT_THROW(jade.validate(), ConfigError);
}

TEST(Config, JsonRoundTrip)
{
    auto config = default_config(AlgorithmId::DE);
    config.de_variant = iur::DeVariant::CurrentToBest1;
    config.F = 0.7;
    const auto back = config_from_json(to_json(config));
    EXPECT_EQ(back.label(), config.label());
    EXPECT_EQ(back.F, 0.7);
    EXPECT_THROW(config_from_json(nlohmann::json{{"algorithm", "es"}, {"lamda", 3}}), ConfigError);
    EXPECT_THROW(config_from_json(nlohmann::json{{"lambda", 3}}), ConfigError);
}

TEST(Run, EveryAlgorithmIsDeterministicAndRespectsBudget)
{
    const auto problem = sphere(3);
    for (auto id : kAll) {
        const auto config = default_config(id);
        const auto a = run(config, problem, 900, 5);
        const auto b = run(config, problem, 900, 5);
        EXPECT_EQ(a, b) << config.label();
        EXPECT_LE(a.evaluations(), 900) << config.label();
        for (std::size_t i = 1; i < a.size(); ++i)
            ASSERT_LE(a.records()[i].best_error, a.records()[i - 1].best_error);
        EXPECT_TRUE(a.records().front().event_count == 0) << config.label();
    }
}

TEST(Run, BudgetTooSmallForFirstGeneration)
{
    EXPECT_THROW(run(default_config(AlgorithmId::ES), sphere(2), 10, 1), BudgetError);
}

TEST(Run, StepPastBudgetThrows)
{
    const auto problem = sphere(2);
    MonteCarlo mc;
    Rng rng(1);
    mc.initialize(problem, 2, rng);
    mc.step(rng);
    EXPECT_FALSE(mc.can_step());
    EXPECT_THROW(mc.step(rng), BudgetError);
}

TEST(Run, MinimalBudgetSingleGeneration)
{
    const auto trace = run(default_config(AlgorithmId::LJ), sphere(2), 1, 3);
    EXPECT_EQ(trace.size(), 1u);
    EXPECT_TRUE(trace.events().empty());
}

TEST(Convergence, LocalSearchersSolveSphere)
{
    const auto problem = sphere(5);
    for (auto id : {AlgorithmId::CMAES, AlgorithmId::ES, AlgorithmId::LJ, AlgorithmId::DE, AlgorithmId::JADE}) {
        const auto trace = run(default_config(id), problem, 20000, 7);
        EXPECT_LT(trace.final_error(), 1e-3) << to_string(id);
    }
    const auto mc = run(default_config(AlgorithmId::MC), problem, 20000, 7);
    EXPECT_GT(mc.final_error(), 1.0);
}

TEST(Ledger, ExactAlgorithmsMatchClosedForm)
{
    const auto problem = sphere(4);
    auto de = default_config(AlgorithmId::DE);
    for (auto config : {default_config(AlgorithmId::LJ), default_config(AlgorithmId::ES),
                        default_config(AlgorithmId::CMAES), de}) {
        auto optimizer = make_optimizer(config);
        Rng rng(11);
        auto first = optimizer->initialize(problem, 1'000'000, rng);
        std::vector<DecisionEvent> events = first.events;
        for (int g = 2; g <= 50; ++g) {
            auto step = optimizer->step(rng);
            events.insert(events.end(), step.events.begin(), step.events.end());
        }
        const auto ledger = iur::ledger_total(events, optimizer->evaluations(), 32.0);
        const auto closed = closed_form_iur(config, 50, 32.0, 4);
        EXPECT_NEAR(ledger.ratio, closed.ratio, 1e-12) << config.label();
        EXPECT_TRUE(ledger.exact);
    }
}

TEST(Ledger, SwarmAlgorithmsWithinBounds)
{
    const auto problem = sphere(4);
    for (auto id : {AlgorithmId::PSO, AlgorithmId::SPSO, AlgorithmId::JADE}) {
        const auto config = default_config(id);
        const auto trace = run(config, problem, 50 * 40, 13);
        ASSERT_EQ(trace.size(), 50u);
        const auto events = events_of(trace);
        const auto ledger = iur::ledger_total(events, trace.evaluations(), 32.0);
        const auto closed = closed_form_iur(config, 50, 32.0, 4);
        EXPECT_NEAR(ledger.ratio, closed.ratio, 1e-12) << config.label();
        EXPECT_LE(ledger.ratio_upper, closed.ratio_upper + 1e-12) << config.label();
        EXPECT_GE(ledger.ratio_upper, ledger.ratio);
    }
}

TEST(EvolutionStrategy, RankingIsStable)
{
    Eigen::VectorXd v(5);
    v << 3, 1, 2, 1, 0;
    EXPECT_EQ(ranking(v), (std::vector<int>{4, 1, 3, 2, 0}));
}

TEST(EvolutionStrategy, FullSelectionHasZeroIur)
{
    auto config = default_config(AlgorithmId::ES);
    config.lambda = 10;
    config.mu = 10;
    const auto trace = run(config, sphere(2), 500, 2);
    const auto ledger = iur::ledger_total(events_of(trace), trace.evaluations(), 32.0);
    EXPECT_EQ(ledger.ratio, 0.0);
}

TEST(Cmaes, CovarianceStaysSymmetricPositiveDefinite)
{
    const auto problem = ObjectiveProblem(
        "ellipsoid", SearchSpace::cube(6, -100, 100), [](const Eigen::Ref<const Eigen::VectorXd>& x) {
            double s = 0.0;
            for (Eigen::Index i = 0; i < x.size(); ++i)
                s += std::pow(1e3, static_cast<double>(i) / 5.0) * x[i] * x[i];
            return s;
        });
    Cmaes cmaes(default_config(AlgorithmId::CMAES));
    Rng rng(4);
    cmaes.initialize(problem, 100000, rng);
    EXPECT_EQ(cmaes.lambda(), 4 + static_cast<int>(std::floor(3 * std::log(6.0))));
    EXPECT_NEAR(cmaes.weights().sum(), 1.0, 1e-12);
    while (cmaes.can_step()) {
        cmaes.step(rng);
        const Eigen::MatrixXd& C = cmaes.covariance();
        ASSERT_LT((C - C.transpose()).cwiseAbs().maxCoeff(), 1e-12 * C.cwiseAbs().maxCoeff());
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
        ASSERT_GT(es.eigenvalues().minCoeff(), 0.0);
        ASSERT_TRUE(std::isfinite(cmaes.sigma()));
    }
}

TEST(ParticleSwarm, Constriction)
{
    EXPECT_NEAR(constriction(4.1), 0.7298437881283576, 1e-12);
    EXPECT_THROW(constriction(4.0), DomainError);
}

TEST(ParticleSwarm, RingBestWraps)
{
    Eigen::VectorXd v(4);
    v << 1, 5, 6, 0;
    EXPECT_EQ(ring_best(v, 0), 3);
    EXPECT_EQ(ring_best(v, 1), 0);
    EXPECT_EQ(ring_best(v, 2), 3);
}

TEST(ParticleSwarm, EventsPerGeneration)
{
    const auto pso = run(default_config(AlgorithmId::PSO), sphere(2), 3 * 40, 1);
    ASSERT_EQ(pso.size(), 3u);
    EXPECT_EQ(pso.records()[1].event_count, 41u);
    const auto spso = run(default_config(AlgorithmId::SPSO), sphere(2), 3 * 40, 1);
    EXPECT_EQ(spso.records()[1].event_count, 80u);
}

TEST(DifferentialEvolution, Rand1Mutant)
{
    const Eigen::Vector2d x1(0, 0), x2(1, 2), x3(0.5, 1);
    const Eigen::VectorXd v = de_rand1_mutant(x1, x2, x3, 0.5);
    EXPECT_DOUBLE_EQ(v[0], 0.25);
    EXPECT_DOUBLE_EQ(v[1], 0.5);
}

TEST(DifferentialEvolution, CrossoverForcesOneCoordinate)
{
    Rng rng(3);
    const Eigen::VectorXd target = Eigen::VectorXd::Zero(5), mutant = Eigen::VectorXd::Ones(5);
    const auto child = binomial_crossover(target, mutant, 0.0, 2, rng);
    EXPECT_EQ(child.sum(), 1.0);
    EXPECT_EQ(child[2], 1.0);
    EXPECT_EQ(binomial_crossover(target, mutant, 1.0, 0, rng), mutant);
}

TEST(DifferentialEvolution, DistinctIndices)
{
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto idx = distinct_indices(6, 4, {2, 5}, rng);
        ASSERT_EQ(idx.size(), 4u);
        std::sort(idx.begin(), idx.end());
        EXPECT_EQ(idx, (std::vector<int>{0, 1, 3, 4}));
    }
}

TEST(Jade, AdaptationStaysInRange)
{
    Jade jade(default_config(AlgorithmId::JADE));
    const auto problem = sphere(5);
    Rng rng(21);
    jade.initialize(problem, 40 * 200, rng);
    while (jade.can_step()) {
        jade.step(rng);
        ASSERT_LE(jade.archive_size(), 40u);
        ASSERT_GT(jade.mu_F(), 0.0);
        ASSERT_LE(jade.mu_F(), 1.0);
        ASSERT_GE(jade.mu_CR(), 0.0);
        ASSERT_LE(jade.mu_CR(), 1.0);
    }
}
