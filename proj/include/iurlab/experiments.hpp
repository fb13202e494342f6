#pragma once

#include "iurlab/algorithms/config.hpp"
#include "iurlab/benchmarks.hpp"
#include "iurlab/stats.hpp"
#include "iurlab/trace.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iurlab::experiments {

/// Seeded benchmark protocol. Run r of every cell uses seed base_seed + r.
struct ExperimentPlan {
    Eigen::Index dimension = 5;
    std::int64_t budget_multiplier = 4000; ///< budget = multiplier * d evaluations
    int runs = 20;
    std::uint64_t base_seed = 42;
    std::uint64_t suite_seed = 2013;
    std::vector<int> functions{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    int jobs = 1;
    /// Replaces the seed-generated suite data when set.
    std::optional<std::filesystem::path> suite_data;

    std::int64_t budget() const { return budget_multiplier * static_cast<std::int64_t>(dimension); }
    /// Throws DomainError.
    void validate() const;
};

nlohmann::json to_json(const ExperimentPlan& plan);
ExperimentPlan plan_from_json(const nlohmann::json& j);

/// Suite data for the plan (generated or loaded).
benchmarks::SuiteData suite_for(const ExperimentPlan& plan);

/// `plan.runs` seeded runs, in seed order.
std::vector<RunTrace> run_cell(const algorithms::OptimizerConfig& config, const ObjectiveProblem& problem,
                               const ExperimentPlan& plan);

/// Final errors of every (function, config, run); merged by index so the
/// result does not depend on plan.jobs.
struct ErrorGrid {
    std::vector<std::string> functions;
    std::vector<std::string> configs;
    std::vector<std::vector<std::vector<double>>> errors; ///< [function][config][run]

    Eigen::MatrixXd mean_errors() const;
};

ErrorGrid run_grid(const std::vector<algorithms::OptimizerConfig>& configs, const ExperimentPlan& plan);

/// Pairwise Wilcoxon comparison of config `first` against config `second`.
struct PairComparison {
    std::size_t first = 0;
    std::size_t second = 0;
    std::string label;           ///< "FIRST_vs_SECOND"
    std::vector<double> p;       ///< per function
    std::vector<int> outcome;    ///< +1 significant win of first, -1 significant loss, 0 otherwise
    int wins = 0;
    int losses = 0;
};

PairComparison compare_pair(const ErrorGrid& grid, std::size_t first, std::size_t second);

struct Comparison {
    ErrorGrid grid;
    stats::RankTable table;
    std::vector<PairComparison> pairs;
};

/// Default pairs compare each config with the one before it.
Comparison compare_algorithms(const std::vector<algorithms::OptimizerConfig>& configs, const ExperimentPlan& plan,
                              std::vector<std::pair<std::size_t, std::size_t>> pairs = {});

struct CurvePoint {
    int mu = 0;
    double mu_over_lambda = 0.0;
    double average_ranking = 0.0;
    double neg_log_binom = 0.0; ///< -log2 C(lambda, mu) / lambda
    double translated = 0.0;    ///< neg_log_binom shifted to the mean of the rankings
};

struct Sweep {
    int lambda = 0;
    ErrorGrid grid;
    stats::RankTable table;
    std::vector<CurvePoint> curve;
    double spearman = 0.0; ///< between average ranking and neg_log_binom
};

/// (mu, lambda)-ES for every mu in `mus`; other settings from `base`.
Sweep sweep_mu_lambda(int lambda, const std::vector<int>& mus, const ExperimentPlan& plan,
                      algorithms::OptimizerConfig base = algorithms::default_config(algorithms::AlgorithmId::ES));

/// Number formatting shared by every CSV writer (6 significant digits).
std::string format_value(double v);

void write_mean_errors_csv(const stats::RankTable& table, std::ostream& out);
void write_rankings_csv(const stats::RankTable& table, std::ostream& out);
void write_wilcoxon_csv(const ErrorGrid& grid, const std::vector<PairComparison>& pairs, std::ostream& out);
void write_pairs_csv(const std::vector<PairComparison>& pairs, std::ostream& out);
void write_fig2_curve_csv(const Sweep& sweep, std::ostream& out);

/// Writes mean_errors.csv, rankings.csv, wilcoxon.csv and pairs.csv into `dir`.
void write_comparison(const Comparison& comparison, const std::filesystem::path& dir);
/// Writes mean_errors.csv, rankings.csv and fig2_curve.csv into `dir`.
void write_sweep(const Sweep& sweep, const std::filesystem::path& dir);

} // namespace iurlab::experiments
