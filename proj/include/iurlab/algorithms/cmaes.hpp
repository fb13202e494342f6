#pragma once

#include "iurlab/algorithms/optimizer.hpp"

#include <Eigen/Core>

namespace iurlab::algorithms {

/// CMA-ES with rank-mu and rank-one covariance updates, cumulative
/// step-size adaptation and positive log-linear weights. No restarts.
class Cmaes final : public Optimizer {
public:
    explicit Cmaes(const OptimizerConfig& config) : config_(config) {}

    std::int64_t evaluations_per_generation() const override { return lambda_; }
    int lambda() const { return lambda_; }
    int mu() const { return mu_; }
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::MatrixXd& covariance() const { return C_; }
    double sigma() const { return sigma_; }
    const Eigen::VectorXd& weights() const { return weights_; }

    /// Smallest eigenvalue allowed in C, relative to the largest.
    static constexpr double kEigenvalueFloor = 1e-14;

protected:
    void resolve(const ObjectiveProblem& problem) override;
    void do_initialize(Rng& rng) override;
    std::vector<DecisionEvent> do_step(Rng& rng) override;

private:
    void decompose();
    void sample(Rng& rng);

    OptimizerConfig config_;
    int lambda_ = 0;
    int mu_ = 0;
    Eigen::VectorXd weights_;
    double mueff_ = 0.0;
    double cs_ = 0.0, ds_ = 0.0, cc_ = 0.0, c1_ = 0.0, cmu_ = 0.0, chi_n_ = 0.0;
    double sigma_max_ = 0.0;

    Eigen::VectorXd mean_;
    double sigma_ = 0.0;
    Eigen::MatrixXd C_;
    Eigen::MatrixXd B_;   ///< eigenvectors of C
    Eigen::VectorXd D_;   ///< square roots of the eigenvalues of C
    Eigen::VectorXd ps_;
    Eigen::VectorXd pc_;
    Eigen::MatrixXd steps_; ///< y_k = (x_k - mean) / sigma of the current generation, x_k clamped
    Eigen::VectorXd values_;
};

} // namespace iurlab::algorithms
