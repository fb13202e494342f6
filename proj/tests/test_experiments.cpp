#include "iurlab/errors.hpp"
#include "iurlab/experiments.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace iurlab;
using namespace iurlab::experiments;
using algorithms::AlgorithmId;
using algorithms::default_config;

namespace {
ExperimentPlan small_plan()
{
    ExperimentPlan plan;
    plan.dimension = 2;
    plan.budget_multiplier = 300;
    plan.runs = 4;
    plan.functions = {1, 6};
    return plan;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}
} // namespace

TEST(Plan, Validation)
{
    auto plan = small_plan();
    EXPECT_NO_THROW(plan.validate());
    plan.runs = 1;
    EXPECT_THROW(plan.validate(), DomainError);
    plan = small_plan();
    plan.functions = {29};
    EXPECT_THROW(plan.validate(), DomainError);
}

TEST(Plan, JsonRoundTrip)
{
    const auto plan = small_plan();
    const auto back = plan_from_json(to_json(plan));
    EXPECT_EQ(back.dimension, plan.dimension);
    EXPECT_EQ(back.budget(), 600);
    EXPECT_EQ(back.functions, plan.functions);
    EXPECT_EQ(back.base_seed, plan.base_seed);
}

TEST(RunCell, SeedOrder)
{
    const auto plan = small_plan();
    const auto suite = benchmarks::make_suite(suite_for(plan));
    const auto traces = run_cell(default_config(AlgorithmId::LJ), suite[0], plan);
    ASSERT_EQ(traces.size(), 4u);
    for (int r = 0; r < 4; ++r)
        EXPECT_EQ(traces[r].seed(), plan.base_seed + static_cast<std::uint64_t>(r));
}

TEST(Grid, IndependentOfJobs)
{
    auto plan = small_plan();
    const std::vector configs{default_config(AlgorithmId::MC), default_config(AlgorithmId::LJ)};
    const auto serial = run_grid(configs, plan);
    plan.jobs = 3;
    const auto parallel = run_grid(configs, plan);
    EXPECT_EQ(serial.errors, parallel.errors);
    EXPECT_EQ(serial.configs, (std::vector<std::string>{"MC", "LJ"}));
}

TEST(Compare, PairsAndFiles)
{
    const auto plan = small_plan();
    const auto cmp = compare_algorithms({default_config(AlgorithmId::MC), default_config(AlgorithmId::LJ)}, plan);
    ASSERT_EQ(cmp.pairs.size(), 1u);
    EXPECT_EQ(cmp.pairs[0].label, "LJ_vs_MC");
    EXPECT_EQ(cmp.pairs[0].p.size(), 2u);

    const auto dir = std::filesystem::temp_directory_path() / "iurlab_compare_test";
    std::filesystem::remove_all(dir);
    write_comparison(cmp, dir);
    for (const char* f : {"mean_errors.csv", "rankings.csv", "wilcoxon.csv", "pairs.csv"})
        EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
    EXPECT_EQ(slurp(dir / "mean_errors.csv").substr(0, 18), "function,MC,LJ\nf1,");
    EXPECT_EQ(slurp(dir / "pairs.csv").substr(0, 19), "pair,wins,losses\nLJ");
    std::filesystem::remove_all(dir);
}

TEST(Sweep, CurveShape)
{
    auto plan = small_plan();
    plan.runs = 2;
    const auto sweep = sweep_mu_lambda(4, {1, 2, 3, 4}, plan);
    ASSERT_EQ(sweep.curve.size(), 4u);
    EXPECT_DOUBLE_EQ(sweep.curve[1].mu_over_lambda, 0.5);
    EXPECT_DOUBLE_EQ(sweep.curve[1].neg_log_binom, -std::log2(6.0) / 4.0);
    EXPECT_EQ(sweep.curve[3].neg_log_binom, 0.0);
    double ranks = 0.0, translated = 0.0;
    for (const auto& p : sweep.curve) {
        ranks += p.average_ranking;
        translated += p.translated;
    }
    EXPECT_NEAR(ranks, translated, 1e-12);
    std::ostringstream out;
    write_fig2_curve_csv(sweep, out);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "mu_over_lambda,avg_ranking,translated_neg_log_binom");
}

TEST(Formatting, SixSignificantDigits)
{
    EXPECT_EQ(format_value(0.123456789), "0.123457");
    EXPECT_EQ(format_value(1e-30), "1e-30");
    EXPECT_EQ(format_value(0.0), "0");
}
