#include "iurlab/algorithms/evolution_strategy.hpp"

#include "iurlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace iurlab::algorithms {

std::vector<int> ranking(const Eigen::VectorXd& values)
{
    std::vector<int> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    return order;
}

void EvolutionStrategy::resolve(const ObjectiveProblem& problem)
{
    lambda_ = resolved_lambda(config_, problem.dimension());
    mu_ = resolved_mu(config_, problem.dimension());
    if (mu_ > lambda_)
        throw ConfigError("mu must not exceed lambda");
}

void EvolutionStrategy::do_initialize(Rng& rng)
{
    const double sigma0 = config_.initial_sigma.value_or(0.25 * space().width().mean());
    population_.resize(dimension(), lambda_);
    sigmas_ = Eigen::VectorXd::Constant(lambda_, sigma0);
    values_.resize(lambda_);
    for (int k = 0; k < lambda_; ++k) {
        Eigen::VectorXd x = rng.uniform_vector(space().lower(), space().upper());
        values_[k] = evaluate(x);
        population_.col(k) = x;
    }
}

std::vector<DecisionEvent> EvolutionStrategy::do_step(Rng& rng)
{
    const std::vector<int> order = ranking(values_);
    Eigen::VectorXd parent_mean = Eigen::VectorXd::Zero(dimension());
    double log_sigma = 0.0;
    for (int k = 0; k < mu_; ++k) {
        parent_mean += population_.col(order[static_cast<std::size_t>(k)]);
        log_sigma += std::log(sigmas_[order[static_cast<std::size_t>(k)]]);
    }
    parent_mean /= mu_;
    // geometric mean: the log-normal mutation is symmetric in log sigma
    const double parent_sigma = std::exp(log_sigma / mu_);

    for (int k = 0; k < lambda_; ++k) {
        const double sigma = parent_sigma * std::exp(config_.delta_sigma * rng.normal());
        Eigen::VectorXd x = parent_mean + sigma * rng.normal_vector(dimension());
        values_[k] = evaluate(x);
        population_.col(k) = x;
        sigmas_[k] = sigma;
    }
    return {DecisionEvent::top_mu_of_lambda(lambda_, mu_)};
}

} // namespace iurlab::algorithms
