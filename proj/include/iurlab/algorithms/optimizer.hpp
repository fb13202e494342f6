#pragma once

#include "iurlab/algorithms/config.hpp"
#include "iurlab/core.hpp"
#include "iurlab/events.hpp"
#include "iurlab/random.hpp"
#include "iurlab/trace.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace iurlab::algorithms {

/// Outcome of one generation.
struct StepResult {
    std::int64_t evaluations = 0; ///< new evaluations in this generation
    std::vector<DecisionEvent> events;
};

/// Generation-by-generation optimizer. initialize() produces generation 1
/// and emits no events; each step() produces the next generation.
class Optimizer {
public:
    virtual ~Optimizer() = default;

    /// `problem` must outlive the optimizer. Throws BudgetError when the
    /// budget cannot pay for the first generation.
    StepResult initialize(const ObjectiveProblem& problem, std::int64_t budget, Rng& rng);
    /// Throws BudgetError when the next generation does not fit the budget.
    StepResult step(Rng& rng);

    bool can_step() const { return evaluations_ + evaluations_per_generation() <= budget_; }
    std::int64_t generation() const { return generation_; }
    std::int64_t evaluations() const { return evaluations_; }
    /// Best evaluated solution so far.
    const Solution& best() const { return best_; }
    double best_value() const { return *best_.value; }

    /// Known after initialize() for algorithms whose batch depends on d.
    virtual std::int64_t evaluations_per_generation() const = 0;

protected:
    virtual void do_initialize(Rng& rng) = 0;
    virtual std::vector<DecisionEvent> do_step(Rng& rng) = 0;
    /// Called by initialize() before the budget check.
    virtual void resolve(const ObjectiveProblem& problem) { (void)problem; }

    const ObjectiveProblem& problem() const { return *problem_; }
    const SearchSpace& space() const { return problem_->space(); }
    Eigen::Index dimension() const { return problem_->dimension(); }

    /// Clamps `x` into the box, evaluates it and tracks the best solution.
    double evaluate(Eigen::VectorXd& x);

private:
    const ObjectiveProblem* problem_ = nullptr;
    std::int64_t budget_ = 0;
    std::int64_t evaluations_ = 0;
    std::int64_t generation_ = 0;
    Solution best_;
};

std::unique_ptr<Optimizer> make_optimizer(const OptimizerConfig& config);

/// Initializes and steps until the next generation would exceed `budget`.
RunTrace run(const OptimizerConfig& config, const ObjectiveProblem& problem, std::int64_t budget,
             std::uint64_t seed);

/// Closed-form IUR (or interval) of `config` after g generations.
iur::IurReport closed_form_iur(const OptimizerConfig& config, std::int64_t g, double H,
                               Eigen::Index dimension);

/// Resolved lambda/mu for ES and CMA-ES in dimension d.
int resolved_lambda(const OptimizerConfig& config, Eigen::Index dimension);
int resolved_mu(const OptimizerConfig& config, Eigen::Index dimension);

} // namespace iurlab::algorithms
