#include "iurlab/stats.hpp"

#include "iurlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace iurlab::stats {

namespace {

void check_sample(std::span<const double> sample, const char* name)
{
    if (sample.size() < 2)
        throw DataError(std::string("sample ") + name + " needs at least 2 values");
    for (double v : sample)
        if (std::isnan(v))
            throw DataError(std::string("sample ") + name + " contains NaN");
}

/// P(W <= w) and P(W >= w) for the rank sum W of n1 ranks drawn from 1..N.
std::pair<double, double> exact_tails(std::size_t n1, std::size_t N, double w)
{
    const std::size_t max_sum = N * (N + 1) / 2;
    // counts[k][s]: number of k-subsets of {1..i} with sum s
    std::vector<std::vector<double>> counts(n1 + 1, std::vector<double>(max_sum + 1, 0.0));
    counts[0][0] = 1.0;
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t k = std::min(i, n1); k >= 1; --k)
            for (std::size_t s = max_sum; s >= i; --s)
                counts[k][s] += counts[k - 1][s - i];
    double total = 0.0, lower = 0.0, upper = 0.0;
    for (std::size_t s = 0; s <= max_sum; ++s) {
        const double c = counts[n1][s];
        total += c;
        if (static_cast<double>(s) <= w + 1e-9)
            lower += c;
        if (static_cast<double>(s) >= w - 1e-9)
            upper += c;
    }
    return {lower / total, upper / total};
}

} // namespace

std::vector<double> midranks(std::span<const double> values)
{
    for (double v : values)
        if (std::isnan(v))
            throw DataError("cannot rank NaN");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && values[order[j]] == values[order[i]])
            ++j;
        const double rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k)
            ranks[order[k]] = rank;
        i = j;
    }
    return ranks;
}

WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, WilcoxonMethod method)
{
    check_sample(a, "a");
    check_sample(b, "b");
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);

    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double N = n1 + n2;

    WilcoxonResult result;
    result.rank_sum = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);
    result.expected = n1 * (N + 1.0) / 2.0;

    // sum of t^3 - t over tie groups
    std::vector<double> sorted(pooled);
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    const bool ties = tie_term > 0.0;
    const bool small = pooled.size() <= kExactWilcoxonLimit;

    if (method == WilcoxonMethod::Exact && (ties || !small))
        throw DataError("exact Wilcoxon needs tie-free samples with |a| + |b| <= 16");
    if (method == WilcoxonMethod::Exact || (method == WilcoxonMethod::Auto && !ties && small)) {
        const auto [lower, upper] = exact_tails(a.size(), pooled.size(), result.rank_sum);
        result.p = std::min(1.0, 2.0 * std::min(lower, upper));
        result.exact = true;
        return result;
    }

    const double variance = n1 * n2 / 12.0 * ((N + 1.0) - tie_term / (N * (N - 1.0)));
    if (!(variance > 0.0)) {
        result.p = 1.0;
        return result;
    }
    const double z = std::max(0.0, std::abs(result.rank_sum - result.expected) - 0.5) / std::sqrt(variance);
    result.p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return result;
}

double spearman(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw DataError("spearman needs series of equal length");
    if (x.size() < 2)
        throw DataError("spearman needs at least 2 points");
    const std::vector<double> rx = midranks(x);
    const std::vector<double> ry = midranks(y);
    const Eigen::Map<const Eigen::VectorXd> vx(rx.data(), static_cast<Eigen::Index>(rx.size()));
    const Eigen::Map<const Eigen::VectorXd> vy(ry.data(), static_cast<Eigen::Index>(ry.size()));
    const Eigen::VectorXd cx = vx.array() - vx.mean();
    const Eigen::VectorXd cy = vy.array() - vy.mean();
    const double denom = cx.norm() * cy.norm();
    return denom > 0.0 ? cx.dot(cy) / denom : 0.0;
}

RankTable average_rankings(const Eigen::MatrixXd& mean_errors, std::vector<std::string> functions,
                           std::vector<std::string> configs)
{
    if (mean_errors.cols() < 2)
        throw DataError("ranking needs at least 2 configurations");
    if (mean_errors.rows() < 1)
        throw DataError("ranking needs at least 1 function");
    if (static_cast<Eigen::Index>(functions.size()) != mean_errors.rows() ||
        static_cast<Eigen::Index>(configs.size()) != mean_errors.cols())
        throw DataError("ranking labels do not match the error matrix");
    if (mean_errors.hasNaN())
        throw DataError("mean error is NaN");

    RankTable table;
    table.functions = std::move(functions);
    table.configs = std::move(configs);
    table.mean_errors = mean_errors;
    table.ranks.resize(mean_errors.rows(), mean_errors.cols());
    for (Eigen::Index f = 0; f < mean_errors.rows(); ++f) {
        const Eigen::VectorXd row = mean_errors.row(f).transpose();
        const std::vector<double> r = midranks(std::span<const double>(row.data(), static_cast<std::size_t>(row.size())));
        for (Eigen::Index c = 0; c < mean_errors.cols(); ++c)
            table.ranks(f, c) = r[static_cast<std::size_t>(c)];
    }
    table.average = table.ranks.colwise().mean().transpose();
    return table;
}

} // namespace iurlab::stats
