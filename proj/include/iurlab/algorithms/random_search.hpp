#pragma once

#include "iurlab/algorithms/optimizer.hpp"

namespace iurlab::algorithms {

/// Pure random sampling, one uniform point per generation.
class MonteCarlo final : public Optimizer {
public:
    std::int64_t evaluations_per_generation() const override { return 1; }

protected:
    void do_initialize(Rng& rng) override;
    std::vector<DecisionEvent> do_step(Rng& rng) override;
};

/// Luus-Jaakola: one uniform candidate in the hypercube around the current
/// point per generation; the hypercube radius shrinks by gamma on failure.
class LuusJaakola final : public Optimizer {
public:
    explicit LuusJaakola(const OptimizerConfig& config) : gamma_(config.gamma) {}

    std::int64_t evaluations_per_generation() const override { return 1; }
    const Eigen::VectorXd& current() const { return current_; }
    const Eigen::VectorXd& radius() const { return radius_; }

protected:
    void do_initialize(Rng& rng) override;
    std::vector<DecisionEvent> do_step(Rng& rng) override;

private:
    double gamma_;
    Eigen::VectorXd current_;
    double current_value_ = 0.0;
    Eigen::VectorXd radius_;
};

} // namespace iurlab::algorithms
