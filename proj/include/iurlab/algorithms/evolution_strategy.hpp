#pragma once

#include "iurlab/algorithms/optimizer.hpp"

#include <Eigen/Core>

namespace iurlab::algorithms {

/// Indices of `values` sorted ascending; equal values keep index order.
std::vector<int> ranking(const Eigen::VectorXd& values);

/// (mu, lambda)-ES with intermediate recombination of the mu best and
/// log-normal self-adaptation of the step size.
class EvolutionStrategy final : public Optimizer {
public:
    explicit EvolutionStrategy(const OptimizerConfig& config) : config_(config) {}

    std::int64_t evaluations_per_generation() const override { return lambda_; }
    int lambda() const { return lambda_; }
    int mu() const { return mu_; }
    /// Columns are individuals.
    const Eigen::MatrixXd& population() const { return population_; }
    const Eigen::VectorXd& sigmas() const { return sigmas_; }

protected:
    void resolve(const ObjectiveProblem& problem) override;
    void do_initialize(Rng& rng) override;
    std::vector<DecisionEvent> do_step(Rng& rng) override;

private:
    OptimizerConfig config_;
    int lambda_ = 0;
    int mu_ = 0;
    Eigen::MatrixXd population_;
    Eigen::VectorXd sigmas_;
    Eigen::VectorXd values_;
};

} // namespace iurlab::algorithms
