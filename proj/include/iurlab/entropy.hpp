#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

/// Discrete information theory in bits. 0 log 0 is taken as 0 throughout.
namespace iurlab::entropy {

/// Probability vector: non-negative entries summing to 1 within 1e-12.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<double> probabilities);
    static DiscreteDistribution uniform(std::size_t outcomes);
    static DiscreteDistribution from_counts(std::span<const std::uint64_t> counts);

    std::span<const double> probabilities() const { return probabilities_; }
    std::size_t size() const { return probabilities_.size(); }

private:
    std::vector<double> probabilities_;
};

/// Joint probabilities p(x_i, y_j); rows index X, columns index Y.
class JointTable {
public:
    explicit JointTable(Eigen::MatrixXd joint);

    const Eigen::MatrixXd& matrix() const { return joint_; }
    DiscreteDistribution marginal_x() const;
    DiscreteDistribution marginal_y() const;

private:
    Eigen::MatrixXd joint_;
};

double shannon_entropy(const DiscreteDistribution& dist);
double shannon_entropy(std::span<const double> probabilities);

/// Entropy of the empirical distribution of non-negative integer counts,
/// evaluated as log2(N) - sum(c log2 c) / N.
double entropy_of_counts(std::span<const std::uint64_t> counts);

/// H(X | Y) = -sum p(x,y) log2(p(x,y) / p(y)).
double conditional_entropy(const JointTable& joint);

/// Entropy of the indicator that a fresh i.i.d. draw fails to beat the
/// minimum of g previous draws: the two-point distribution {g/(g+1), 1/(g+1)}.
double pi(std::int64_t g);

/// Below this size, binomials and falling factorials use exact 64-bit
/// integer arithmetic; above it, log-gamma.
inline constexpr std::int64_t kExactCombinatoricsLimit = 62;

/// log2 C(n, k).
double log2_binomial(std::int64_t n, std::int64_t k);

/// log2 n! / (n-k)!.
double log2_falling_factorial(std::int64_t n, std::int64_t k);

} // namespace iurlab::entropy
