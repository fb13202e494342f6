#include "iurlab/entropy.hpp"
#include "iurlab/errors.hpp"
#include "iurlab/iur.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace iurlab;
using namespace iurlab::iur;

TEST(ClosedForm, MonteCarloIsZero)
{
    const auto r = iur_mc(1000, 32);
    EXPECT_EQ(r.ratio, 0.0);
    EXPECT_EQ(r.numerator_bits, 0.0);
    EXPECT_DOUBLE_EQ(r.denominator_bits, 32000.0);
    EXPECT_TRUE(r.exact);
}

TEST(ClosedForm, LuusJaakolaOracle)
{
    const auto r = iur_lj(3, 4);
    EXPECT_NEAR(r.ratio, 0.15985798617120747, 1e-15);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(iur_lj(1, 4).ratio, 0.0);
}

TEST(ClosedForm, EvolutionStrategyOracle)
{
    EXPECT_NEAR(iur_es(100, 30, 15, 32).ratio, 0.02805906097727719, 1e-15);
    EXPECT_EQ(iur_es(100, 30, 30, 32).ratio, 0.0);
    EXPECT_THROW(iur_es(10, 5, 6, 32), DomainError);
}

TEST(ClosedForm, CmaesOracle)
{
    EXPECT_NEAR(iur_cmaes(2, 4, 2, 8).ratio, 0.056015039073768064, 1e-15);
}

TEST(ClosedForm, SwarmIntervals)
{
    const auto pso = iur_pso_bounds(100, 40, 32);
    EXPECT_FALSE(pso.exact);
    EXPECT_NEAR(pso.ratio, 0.006483377211818324, 1e-15);
    EXPECT_NEAR(pso.ratio_upper, 0.010599555972707769, 1e-15);

    const auto spso = iur_spso_bounds(100, 40, 32);
    EXPECT_NEAR(spso.ratio, 0.006483377211818324, 1e-15);
    EXPECT_NEAR(spso.ratio_upper, 0.055518154577879085, 1e-15);

    const auto jade = iur_jade_bounds(100, 40, 0.05, 32);
    EXPECT_NEAR(jade.ratio, 0.006483377211818324, 1e-15);
    EXPECT_NEAR(jade.ratio_upper, 0.013914046751359039, 1e-15);
}

TEST(ClosedForm, ShortRunIntervals)
{
    const auto pso = iur_pso_bounds(3, 10, 32);
    EXPECT_NEAR(pso.ratio, 0.019982248271400934, 1e-15);
    EXPECT_NEAR(pso.ratio_upper, 0.02690293180241627, 1e-15);
    EXPECT_NEAR(iur_spso_bounds(3, 10, 32).ratio_upper, 0.05300230036975835, 1e-15);
    const auto jade = iur_jade_bounds(3, 10, 0.2, 32);
    EXPECT_NEAR(jade.ratio, 0.019982248271400934, 1e-15);
    EXPECT_NEAR(jade.ratio_upper, 0.03142360888875442, 1e-15);
}

TEST(ClosedForm, DeVariants)
{
    for (auto v : {DeVariant::Rand1, DeVariant::Rand2}) {
        const auto r = iur_de(50, 20, 32, v);
        EXPECT_TRUE(r.exact);
        EXPECT_DOUBLE_EQ(r.ratio, iur_lj(50, 32).ratio);
    }
    for (auto v : {DeVariant::Best1, DeVariant::Best2, DeVariant::CurrentToBest1}) {
        const auto r = iur_de(50, 20, 32, v);
        const auto pso = iur_pso_bounds(50, 20, 32);
        EXPECT_FALSE(r.exact);
        EXPECT_DOUBLE_EQ(r.ratio, pso.ratio);
        EXPECT_DOUBLE_EQ(r.ratio_upper, pso.ratio_upper);
    }
}

TEST(ClosedForm, ComparisonBound)
{
    EXPECT_NEAR(comparison_upper_bound(100, 32), 0.20762050593046014, 1e-15);
    EXPECT_THROW(comparison_upper_bound(0, 32), DomainError);
}

TEST(ClosedForm, RejectsBadArguments)
{
    EXPECT_THROW(iur_lj(0, 32), DomainError);
    EXPECT_THROW(iur_lj(5, 0), DomainError);
    EXPECT_THROW(iur_jade_bounds(10, 10, 0.0, 32), DomainError);
}

TEST(DeVariantNames, RoundTrip)
{
    for (auto v : {DeVariant::Rand1, DeVariant::Rand2, DeVariant::Best1, DeVariant::Best2,
                   DeVariant::CurrentToBest1})
        EXPECT_EQ(parse_de_variant(to_string(v)), v);
    EXPECT_THROW(parse_de_variant("rand/3"), DomainError);
}

TEST(Pricing, EventPrices)
{
    EXPECT_DOUBLE_EQ(price_event(DecisionEvent::compare_with_best(3)).bits, entropy::pi(3));
    EXPECT_DOUBLE_EQ(price_event(DecisionEvent::top_mu_of_lambda(30, 15)).bits, entropy::log2_binomial(30, 15));
    EXPECT_DOUBLE_EQ(price_event(DecisionEvent::ranked_top_mu_of_lambda(4, 2)).bits, std::log2(12.0));
    const auto ring = price_event(DecisionEvent::ring_best_of_three());
    EXPECT_DOUBLE_EQ(ring.bits, std::log2(3.0));
    EXPECT_FALSE(ring.exact);
    EXPECT_FALSE(price_event(DecisionEvent::global_best_of_swarm(40)).exact);
    EXPECT_DOUBLE_EQ(price_event(DecisionEvent::pbest_membership(0.05, 40)).bits, entropy::log2_binomial(40, 2));
}

TEST(Pricing, EliteCount)
{
    EXPECT_EQ(elite_count(0.05, 40), 2);
    EXPECT_EQ(elite_count(0.05, 10), 1);
    EXPECT_EQ(elite_count(0.001, 10), 1);
    EXPECT_EQ(elite_count(1.0, 10), 10);
}

TEST(Ledger, MatchesLuusJaakola)
{
    std::vector<DecisionEvent> events;
    for (int i = 1; i < 50; ++i)
        events.push_back(DecisionEvent::compare_with_best(i));
    const auto ledger = ledger_total(events, 50, 32);
    EXPECT_NEAR(ledger.ratio, iur_lj(50, 32).ratio, 1e-12);
    EXPECT_TRUE(ledger.exact);
}

TEST(Ledger, UpperBoundPricesOnlyRaiseUpper)
{
    const std::vector<DecisionEvent> events{DecisionEvent::compare_with_best(1), DecisionEvent::global_best_of_swarm(4)};
    const auto r = ledger_total(events, 8, 1);
    EXPECT_FALSE(r.exact);
    EXPECT_DOUBLE_EQ(r.numerator_bits, 1.0);
    EXPECT_DOUBLE_EQ(r.numerator_upper_bits, 3.0);
    EXPECT_DOUBLE_EQ(r.ratio, 1.0 / 8.0);
    EXPECT_DOUBLE_EQ(r.ratio_upper, 3.0 / 8.0);
}

TEST(Json, NullForAbsentParameters)
{
    const auto j = to_json(iur_lj(10, 32));
    EXPECT_EQ(j.at("g"), 10);
    EXPECT_TRUE(j.at("lambda").is_null());
    EXPECT_TRUE(j.at("exact").get<bool>());
    EXPECT_DOUBLE_EQ(j.at("H_bits").get<double>(), 32.0);
}
