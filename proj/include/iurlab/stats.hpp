#pragma once

#include <Eigen/Core>

#include <span>
#include <string>
#include <vector>

namespace iurlab::stats {

enum class WilcoxonMethod {
    Auto,   ///< exact when |a| + |b| <= 16 and there are no ties, normal otherwise
    Exact,  ///< throws DataError on ties or |a| + |b| > 16
    Normal, ///< tie-corrected normal approximation with continuity correction
};

inline constexpr std::size_t kExactWilcoxonLimit = 16;
inline constexpr double kSignificance = 0.05;

struct WilcoxonResult {
    double p = 1.0;          ///< two-sided
    double rank_sum = 0.0;   ///< sum of the ranks of `a` in the pooled sample
    double expected = 0.0;   ///< rank sum of `a` under the null
    bool exact = false;

    /// a tends to be smaller than b.
    bool a_lower() const { return rank_sum < expected; }
};

/// Two-sided Wilcoxon rank-sum test. Throws DataError when a sample has
/// fewer than 2 values or contains NaN.
WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                 WilcoxonMethod method = WilcoxonMethod::Auto);

/// Ranks 1..n, ties receive the mean of the ranks they span. NaN throws DataError.
std::vector<double> midranks(std::span<const double> values);

/// Spearman rank correlation (Pearson correlation of midranks); 0 when a
/// series is constant.
double spearman(std::span<const double> x, std::span<const double> y);

/// Per-function ranking of configurations by mean error.
struct RankTable {
    std::vector<std::string> functions;
    std::vector<std::string> configs;
    Eigen::MatrixXd mean_errors; ///< functions x configs
    Eigen::MatrixXd ranks;       ///< 1 = lowest error, midranks on ties
    Eigen::VectorXd average;     ///< mean rank per configuration
};

/// Throws DataError for NaN errors, fewer than 2 configurations or no functions.
RankTable average_rankings(const Eigen::MatrixXd& mean_errors, std::vector<std::string> functions,
                           std::vector<std::string> configs);

} // namespace iurlab::stats
