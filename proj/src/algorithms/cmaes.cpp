#include "iurlab/algorithms/cmaes.hpp"

#include "iurlab/algorithms/evolution_strategy.hpp"
#include "iurlab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace iurlab::algorithms {

void Cmaes::resolve(const ObjectiveProblem& problem)
{
    lambda_ = resolved_lambda(config_, problem.dimension());
    mu_ = resolved_mu(config_, problem.dimension());
    if (lambda_ < 2)
        throw ConfigError("CMA-ES needs lambda >= 2");
    if (mu_ > lambda_)
        throw ConfigError("mu must not exceed lambda");

    const double n = static_cast<double>(problem.dimension());
    weights_.resize(mu_);
    for (int i = 0; i < mu_; ++i)
        weights_[i] = std::log(mu_ + 0.5) - std::log(i + 1.0);
    weights_ /= weights_.sum();
    mueff_ = 1.0 / weights_.squaredNorm();

    cs_ = (mueff_ + 2.0) / (n + mueff_ + 5.0);
    ds_ = 1.0 + 2.0 * std::max(0.0, std::sqrt((mueff_ - 1.0) / (n + 1.0)) - 1.0) + cs_;
    cc_ = (4.0 + mueff_ / n) / (n + 4.0 + 2.0 * mueff_ / n);
    c1_ = 2.0 / ((n + 1.3) * (n + 1.3) + mueff_);
    cmu_ = std::min(1.0 - c1_, 2.0 * (mueff_ - 2.0 + 1.0 / mueff_) / ((n + 2.0) * (n + 2.0) + mueff_));
    chi_n_ = std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));
    sigma_max_ = problem.space().width().maxCoeff();
}

void Cmaes::do_initialize(Rng& rng)
{
    const Eigen::Index n = dimension();
    mean_ = rng.uniform_vector(space().lower(), space().upper());
    sigma_ = config_.initial_sigma.value_or(0.25 * space().width().mean());
    C_ = Eigen::MatrixXd::Identity(n, n);
    B_ = Eigen::MatrixXd::Identity(n, n);
    D_ = Eigen::VectorXd::Ones(n);
    ps_ = Eigen::VectorXd::Zero(n);
    pc_ = Eigen::VectorXd::Zero(n);
    sample(rng);
}

void Cmaes::sample(Rng& rng)
{
    steps_.resize(dimension(), lambda_);
    values_.resize(lambda_);
    for (int k = 0; k < lambda_; ++k) {
        Eigen::VectorXd x = mean_ + sigma_ * (B_ * D_.cwiseProduct(rng.normal_vector(dimension())));
        values_[k] = evaluate(x);
        // the update uses the step to the clamped point, so the mean stays in the box
        steps_.col(k) = (x - mean_) / sigma_;
    }
}

void Cmaes::decompose()
{
    C_ = 0.5 * (C_ + C_.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(C_);
    Eigen::VectorXd eigenvalues = solver.eigenvalues();
    const double floor = kEigenvalueFloor * std::max(eigenvalues.maxCoeff(), kEigenvalueFloor);
    if (eigenvalues.minCoeff() < floor) {
        eigenvalues = eigenvalues.cwiseMax(floor);
        C_ = solver.eigenvectors() * eigenvalues.asDiagonal() * solver.eigenvectors().transpose();
        C_ = 0.5 * (C_ + C_.transpose()).eval();
    }
    B_ = solver.eigenvectors();
    D_ = eigenvalues.cwiseSqrt();
}

std::vector<DecisionEvent> Cmaes::do_step(Rng& rng)
{
    const std::vector<int> order = ranking(values_);
    Eigen::MatrixXd selected(dimension(), mu_);
    for (int i = 0; i < mu_; ++i)
        selected.col(i) = steps_.col(order[static_cast<std::size_t>(i)]);
    const Eigen::VectorXd y_w = selected * weights_;
    mean_ += sigma_ * y_w;

    // C^{-1/2} y_w
    const Eigen::VectorXd whitened = B_ * (B_.transpose() * y_w).cwiseQuotient(D_);
    ps_ = (1.0 - cs_) * ps_ + std::sqrt(cs_ * (2.0 - cs_) * mueff_) * whitened;
    const double decay = 1.0 - std::pow(1.0 - cs_, 2.0 * static_cast<double>(generation()));
    const double n = static_cast<double>(dimension());
    const bool hs = ps_.norm() / std::sqrt(std::max(decay, 1e-300)) < (1.4 + 2.0 / (n + 1.0)) * chi_n_;
    pc_ = (1.0 - cc_) * pc_ + (hs ? std::sqrt(cc_ * (2.0 - cc_) * mueff_) : 0.0) * y_w;

    const double old_weight = 1.0 - c1_ - cmu_ + (hs ? 0.0 : c1_ * cc_ * (2.0 - cc_));
    C_ = old_weight * C_ + c1_ * pc_ * pc_.transpose() +
         cmu_ * selected * weights_.asDiagonal() * selected.transpose();

    sigma_ *= std::exp((cs_ / ds_) * (ps_.norm() / chi_n_ - 1.0));
    sigma_ = std::min(sigma_, sigma_max_);

    decompose();
    sample(rng);
    return {DecisionEvent::ranked_top_mu_of_lambda(lambda_, mu_)};
}

} // namespace iurlab::algorithms
