#pragma once

#include "iurlab/algorithms/optimizer.hpp"

#include <Eigen/Core>


namespace iurlab::algorithms {

/// x1 + F (x2 - x3)
Eigen::VectorXd de_rand1_mutant(const Eigen::VectorXd& x1, const Eigen::VectorXd& x2,
                                const Eigen::VectorXd& x3, double F);

/// Binomial crossover; coordinate `forced` always comes from the mutant.
Eigen::VectorXd binomial_crossover(const Eigen::VectorXd& target, const Eigen::VectorXd& mutant, double CR,
                                   Eigen::Index forced, Rng& rng);

/// `count` distinct indices in [0, n) that differ from every entry of `exclude`.
std::vector<int> distinct_indices(int n, int count, std::initializer_list<int> exclude, Rng& rng);

/// DE with one of the rand/1, rand/2, best/1, best/2, current-to-best/1
/// mutations, binomial crossover and one-to-one greedy selection.
class DifferentialEvolution final : public Optimizer {
public:
    explicit DifferentialEvolution(const OptimizerConfig& config) : config_(config) {}

    std::int64_t evaluations_per_generation() const override { return config_.swarm_size; }
    /// Columns are individuals.
    const Eigen::MatrixXd& population() const { return population_; }
    const Eigen::VectorXd& values() const { return values_; }

protected:
    void do_initialize(Rng& rng) override;
    std::vector<DecisionEvent> do_step(Rng& rng) override;

private:
    OptimizerConfig config_;
    Eigen::MatrixXd population_;
    Eigen::VectorXd values_;
};

/// JADE: current-to-pbest/1 with an external archive and adaptive F and CR.
class Jade final : public Optimizer {
public:
    explicit Jade(const OptimizerConfig& config) : config_(config) {}

    std::int64_t evaluations_per_generation() const override { return config_.swarm_size; }
    const Eigen::MatrixXd& population() const { return population_; }
    const Eigen::VectorXd& values() const { return values_; }
    std::size_t archive_size() const { return archive_.size(); }
    double mu_F() const { return mu_F_; }
    double mu_CR() const { return mu_CR_; }

protected:
    void do_initialize(Rng& rng) override;
    std::vector<DecisionEvent> do_step(Rng& rng) override;

private:
    OptimizerConfig config_;
    Eigen::MatrixXd population_;
    Eigen::VectorXd values_;
    std::vector<Eigen::VectorXd> archive_;
    double mu_F_ = 0.5;
    double mu_CR_ = 0.5;
};

} // namespace iurlab::algorithms
