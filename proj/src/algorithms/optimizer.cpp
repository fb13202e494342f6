#include "iurlab/algorithms/optimizer.hpp"

#include "iurlab/algorithms/cmaes.hpp"
#include "iurlab/algorithms/differential_evolution.hpp"
#include "iurlab/algorithms/evolution_strategy.hpp"
#include "iurlab/algorithms/particle_swarm.hpp"
#include "iurlab/algorithms/random_search.hpp"
#include "iurlab/errors.hpp"

#include <cmath>

namespace iurlab::algorithms {

StepResult Optimizer::initialize(const ObjectiveProblem& problem, std::int64_t budget, Rng& rng)
{
    problem_ = &problem;
    budget_ = budget;
    evaluations_ = 0;
    generation_ = 0;
    best_ = Solution{};
    resolve(problem);
    if (!can_step())
        throw BudgetError("budget " + std::to_string(budget) + " cannot pay for one generation of " +
                          std::to_string(evaluations_per_generation()) + " evaluations");
    do_initialize(rng);
    generation_ = 1;
    return {evaluations_, {}};
}

StepResult Optimizer::step(Rng& rng)
{
    if (problem_ == nullptr)
        throw DomainError("optimizer stepped before initialize");
    if (!can_step())
        throw BudgetError("evaluation budget exhausted");
    const std::int64_t before = evaluations_;
    std::vector<DecisionEvent> events = do_step(rng);
    ++generation_;
    return {evaluations_ - before, std::move(events)};
}

double Optimizer::evaluate(Eigen::VectorXd& x)
{
    space().clamp(x);
    const double value = problem_->evaluate(x);
    ++evaluations_;
    if (!best_.value || value < *best_.value) {
        best_.position = x;
        best_.value = value;
    }
    return value;
}

std::unique_ptr<Optimizer> make_optimizer(const OptimizerConfig& config)
{
    config.validate();
    switch (config.algorithm) {
    case AlgorithmId::MC: return std::make_unique<MonteCarlo>();
    case AlgorithmId::LJ: return std::make_unique<LuusJaakola>(config);
    case AlgorithmId::ES: return std::make_unique<EvolutionStrategy>(config);
    case AlgorithmId::CMAES: return std::make_unique<Cmaes>(config);
    case AlgorithmId::PSO: return std::make_unique<ParticleSwarm>(config, SwarmTopology::GlobalBest);
    case AlgorithmId::SPSO: return std::make_unique<ParticleSwarm>(config, SwarmTopology::Ring);
    case AlgorithmId::DE: return std::make_unique<DifferentialEvolution>(config);
    case AlgorithmId::JADE: return std::make_unique<Jade>(config);
    }
    throw ConfigError("unknown algorithm");
}

RunTrace run(const OptimizerConfig& config, const ObjectiveProblem& problem, std::int64_t budget,
             std::uint64_t seed)
{
    auto optimizer = make_optimizer(config);
    Rng rng(seed);
    RunTrace trace(config.label(), problem.name(), seed, budget);
    StepResult result = optimizer->initialize(problem, budget, rng);
    trace.record_generation(problem.error(optimizer->best_value()), optimizer->evaluations(), result.events);
    while (optimizer->can_step()) {
        result = optimizer->step(rng);
        trace.record_generation(problem.error(optimizer->best_value()), optimizer->evaluations(),
                                result.events);
    }
    return trace;
}

int resolved_lambda(const OptimizerConfig& config, Eigen::Index dimension)
{
    if (config.lambda)
        return *config.lambda;
    if (config.algorithm == AlgorithmId::CMAES)
        return 4 + static_cast<int>(std::floor(3.0 * std::log(static_cast<double>(dimension))));
    return 30;
}

int resolved_mu(const OptimizerConfig& config, Eigen::Index dimension)
{
    if (config.mu)
        return *config.mu;
    return std::max(1, resolved_lambda(config, dimension) / 2);
}

iur::IurReport closed_form_iur(const OptimizerConfig& config, std::int64_t g, double H, Eigen::Index dimension)
{
    const std::int64_t s = config.swarm_size;
    switch (config.algorithm) {
    case AlgorithmId::MC: return iur::iur_mc(g, H);
    case AlgorithmId::LJ: return iur::iur_lj(g, H);
    case AlgorithmId::ES:
        return iur::iur_es(g, resolved_lambda(config, dimension), resolved_mu(config, dimension), H);
    case AlgorithmId::CMAES:
        return iur::iur_cmaes(g, resolved_lambda(config, dimension), resolved_mu(config, dimension), H);
    case AlgorithmId::PSO: return iur::iur_pso_bounds(g, s, H);
    case AlgorithmId::SPSO: return iur::iur_spso_bounds(g, s, H);
    case AlgorithmId::DE: return iur::iur_de(g, s, H, config.de_variant);
    case AlgorithmId::JADE: return iur::iur_jade_bounds(g, s, config.p, H);
    }
    throw ConfigError("unknown algorithm");
}

} // namespace iurlab::algorithms
