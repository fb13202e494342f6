#include "iurlab/entropy.hpp"

#include "iurlab/errors.hpp"

#include <cmath>
#include <numbers>

namespace iurlab::entropy {

namespace {

constexpr double kMassTolerance = 1e-12;

void check_probabilities(std::span<const double> probabilities)
{
    if (probabilities.empty())
        throw InvalidDistribution("distribution has no outcomes");
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0) || !std::isfinite(p))
            throw InvalidDistribution("negative or non-finite probability");
        total += p;
    }
    if (std::abs(total - 1.0) > kMassTolerance)
        throw InvalidDistribution("probabilities sum to " + std::to_string(total) + ", not 1");
}

double plogp(double p)
{
    return p > 0.0 ? p * std::log2(p) : 0.0;
}

void check_range(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("combinatorics needs 0 <= k <= n (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
}

double log2_factorial_ratio_lgamma(std::int64_t n, std::int64_t k)
{
    // log2 n!/(n-k)!
    return (std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(n - k) + 1.0)) /
           std::numbers::ln2;
}

} // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities))
{
    check_probabilities(probabilities_);
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t outcomes)
{
    if (outcomes == 0)
        throw InvalidDistribution("uniform distribution needs at least one outcome");
    return DiscreteDistribution(std::vector<double>(outcomes, 1.0 / static_cast<double>(outcomes)));
}

DiscreteDistribution DiscreteDistribution::from_counts(std::span<const std::uint64_t> counts)
{
    std::uint64_t total = 0;
    for (auto c : counts)
        total += c;
    if (total == 0)
        throw InvalidDistribution("counts sum to zero");
    std::vector<double> probabilities;
    probabilities.reserve(counts.size());
    for (auto c : counts)
        probabilities.push_back(static_cast<double>(c) / static_cast<double>(total));
    return DiscreteDistribution(std::move(probabilities));
}

JointTable::JointTable(Eigen::MatrixXd joint) : joint_(std::move(joint))
{
    if (joint_.size() == 0)
        throw InvalidDistribution("joint table is empty");
    check_probabilities(std::span<const double>(joint_.data(), static_cast<std::size_t>(joint_.size())));
}

DiscreteDistribution JointTable::marginal_x() const
{
    const Eigen::VectorXd rows = joint_.rowwise().sum();
    return DiscreteDistribution(std::vector<double>(rows.data(), rows.data() + rows.size()));
}

DiscreteDistribution JointTable::marginal_y() const
{
    const Eigen::RowVectorXd cols = joint_.colwise().sum();
    return DiscreteDistribution(std::vector<double>(cols.data(), cols.data() + cols.size()));
}

double shannon_entropy(const DiscreteDistribution& dist)
{
    double h = 0.0;
    for (double p : dist.probabilities())
        h -= plogp(p);
    return h > 0.0 ? h : 0.0;
}

double shannon_entropy(std::span<const double> probabilities)
{
    return shannon_entropy(DiscreteDistribution({probabilities.begin(), probabilities.end()}));
}

double entropy_of_counts(std::span<const std::uint64_t> counts)
{
    std::uint64_t total = 0;
    double weighted = 0.0;
    for (auto c : counts) {
        total += c;
        if (c > 0)
            weighted += static_cast<double>(c) * std::log2(static_cast<double>(c));
    }
    if (total == 0)
        throw InvalidDistribution("counts sum to zero");
    const double n = static_cast<double>(total);
    const double h = std::log2(n) - weighted / n;
    return h > 0.0 ? h : 0.0;
}

double conditional_entropy(const JointTable& joint)
{
    const Eigen::MatrixXd& p = joint.matrix();
    const Eigen::RowVectorXd py = p.colwise().sum();
    double h = 0.0;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        if (py[j] <= 0.0)
            continue;
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
            if (p(i, j) > 0.0)
                h -= p(i, j) * std::log2(p(i, j) / py[j]);
        }
    }
    return h > 0.0 ? h : 0.0;
}

double pi(std::int64_t g)
{
    if (g < 1)
        throw DomainError("pi(g) requires g >= 1");
    const double gd = static_cast<double>(g);
    const double stay = gd / (gd + 1.0);
    const double beat = 1.0 / (gd + 1.0);
    // -stay*log2(stay) = stay*log2(1 + 1/g), evaluated with log1p for large g.
    return stay * std::log1p(1.0 / gd) / std::numbers::ln2 + beat * std::log2(gd + 1.0);
}

double log2_binomial(std::int64_t n, std::int64_t k)
{
    check_range(n, k);
    if (k > n - k)
        k = n - k;
    if (k == 0)
        return 0.0;
    if (n <= kExactCombinatoricsLimit) {
        unsigned __int128 c = 1;
        for (std::int64_t i = 0; i < k; ++i)
            c = c * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
        return std::log2(static_cast<double>(static_cast<std::uint64_t>(c)));
    }
    return (std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
            std::lgamma(static_cast<double>(n - k) + 1.0)) /
           std::numbers::ln2;
}

double log2_falling_factorial(std::int64_t n, std::int64_t k)
{
    check_range(n, k);
    if (k == 0)
        return 0.0;
    if (n <= kExactCombinatoricsLimit) {
        // Exact partial products, flushed to the log sum before they overflow.
        double bits = 0.0;
        std::uint64_t product = 1;
        for (std::int64_t i = 0; i < k; ++i) {
            const auto factor = static_cast<std::uint64_t>(n - i);
            if (product > UINT64_MAX / factor) {
                bits += std::log2(static_cast<double>(product));
                product = 1;
            }
            product *= factor;
        }
        return bits + std::log2(static_cast<double>(product));
    }
    return log2_factorial_ratio_lgamma(n, k);
}

} // namespace iurlab::entropy
