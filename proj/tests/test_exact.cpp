#include "iurlab/entropy.hpp"
#include "iurlab/errors.hpp"
#include "iurlab/exact.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace iurlab;
using namespace iurlab::exact;

namespace {
FiniteEnsemble orderings(int m)
{
    return {m, m, EnsembleMode::InjectiveOrderings};
}
} // namespace

TEST(RankSlot, Slots)
{
    const std::vector<int> prev{5, 2, 5};
    EXPECT_EQ(rank_slot(1, prev), 0);
    EXPECT_EQ(rank_slot(2, prev), 1);
    EXPECT_EQ(rank_slot(3, prev), 2);
    EXPECT_EQ(rank_slot(5, prev), 3);
    EXPECT_EQ(rank_slot(9, prev), 4);
    EXPECT_EQ(rank_slot(0, {}), 0);
}

TEST(ExactIur, CompareWithBestOnOrderings)
{
    const auto result = exact_iur(compare_with_best_policy(4), orderings(4), 3);
    EXPECT_NEAR(result.report.ratio, 0.4183885547052492, 1e-12);
    EXPECT_NEAR(result.report.ratio, (entropy::pi(1) + entropy::pi(2)) / std::log2(24.0), 1e-9);
    EXPECT_EQ(result.functions_enumerated, 24u);
    ASSERT_EQ(result.decision_bits.size(), 3u);
    EXPECT_NEAR(result.decision_bits[0], 0.0, 1e-12);
    EXPECT_NEAR(result.decision_bits[1], entropy::pi(1), 1e-12);
    EXPECT_NEAR(result.decision_bits[2], entropy::pi(2), 1e-12);
}

TEST(ExactIur, ConstantPolicyUsesNothing)
{
    const auto result = exact_iur(constant_order_policy(3), FiniteEnsemble{3, 2}, 3);
    EXPECT_EQ(result.report.numerator_bits, 0.0);
    EXPECT_NEAR(result.report.denominator_bits, 3.0, 1e-12);
    EXPECT_EQ(result.strict_numerator_bits, 0.0);
}

TEST(ExactIur, RelabelingPreservesIur)
{
    const auto base = exact_iur(compare_with_best_policy(4), orderings(4), 3);
    const auto moved = exact_iur(relabeled(compare_with_best_policy(4), {2, 0, 3, 1}), orderings(4), 3);
    EXPECT_NEAR(base.report.ratio, moved.report.ratio, 1e-12);
}

TEST(ExactIur, ErrorPaths)
{
    EXPECT_THROW(exact_iur(constant_order_policy(3), FiniteEnsemble{3, 1}, 2), HypothesisError);
    EXPECT_THROW(exact_iur(constant_order_policy(9), FiniteEnsemble{9, 9}, 3), SizeError);
}

TEST(DecisionTree, CountsHistories)
{
    // the queried point follows from earlier feedback, so nodes are keyed by feedback alone
    const DecisionTree value_tree(FiniteEnsemble{2, 2}, Feedback::Value, 1);
    EXPECT_EQ(value_tree.node_count(), 3u);
    EXPECT_DOUBLE_EQ(value_tree.policy_count(), 8.0);
    // rank feedback, n = 2, g = 2: one slot after the first value, then three
    const DecisionTree rank_tree(FiniteEnsemble{3, 2}, Feedback::Rank, 2);
    EXPECT_EQ(rank_tree.node_count(), 5u);
}

TEST(IurBound, DefaultGridHasNoViolations)
{
    const auto summary = verify_theorem1({});
    EXPECT_TRUE(summary.violations.empty());
    EXPECT_GT(summary.configurations_checked, 0u);
    EXPECT_GT(summary.policies_checked, 0u);
    EXPECT_GE(summary.min_iur_observed, 0.0);
    EXPECT_LE(summary.max_iur_observed, 1.0 + 1e-12);
}

TEST(IurBound, RejectsOversizedConfiguration)
{
    Theorem1Options options;
    options.max_m = 9;
    options.max_n = 9;
    options.max_g = 3;
    EXPECT_THROW(verify_theorem1(options), SizeError);
}

TEST(PiEnumeration, MatchesClosedForm)
{
    const auto summary = verify_pi_lemma(6);
    EXPECT_TRUE(summary.violations.empty());
    EXPECT_LT(summary.max_abs_error, 1e-12);
    EXPECT_THROW(verify_pi_lemma(11), SizeError);
}
