#include "iurlab/algorithms/particle_swarm.hpp"

#include "iurlab/errors.hpp"

#include <cmath>

namespace iurlab::algorithms {

double constriction(double phi)
{
    if (!(phi > 4.0))
        throw ConfigError("constriction needs phi > 4");
    return 2.0 / std::abs(2.0 - phi - std::sqrt(phi * phi - 4.0 * phi));
}

int ring_best(const Eigen::VectorXd& pbest_values, int i)
{
    const int s = static_cast<int>(pbest_values.size());
    int best = i;
    for (int offset : {-1, 1}) {
        const int j = ((i + offset) % s + s) % s;
        if (pbest_values[j] < pbest_values[best])
            best = j;
    }
    return best;
}

ParticleSwarm::ParticleSwarm(const OptimizerConfig& config, SwarmTopology topology)
    : topology_(topology), swarm_size_(config.swarm_size), phi1_(config.phi1), phi2_(config.phi2)
{
    if (topology_ == SwarmTopology::Ring)
        chi_ = constriction(phi1_ + phi2_);
}

void ParticleSwarm::do_initialize(Rng& rng)
{
    positions_.resize(dimension(), swarm_size_);
    velocities_ = Eigen::MatrixXd::Zero(dimension(), swarm_size_);
    pbest_values_.resize(swarm_size_);
    for (int i = 0; i < swarm_size_; ++i) {
        Eigen::VectorXd x = rng.uniform_vector(space().lower(), space().upper());
        pbest_values_[i] = evaluate(x);
        positions_.col(i) = x;
    }
    pbest_ = positions_;
}

std::vector<DecisionEvent> ParticleSwarm::do_step(Rng& rng)
{
    const std::int64_t history = generation();
    const Eigen::VectorXd vmax = space().width();
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(dimension());
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(dimension());

    // Attractors are fixed at the start of the generation.
    std::vector<int> attractor(static_cast<std::size_t>(swarm_size_));
    Eigen::Index global = 0;
    pbest_values_.minCoeff(&global);
    for (int i = 0; i < swarm_size_; ++i)
        attractor[static_cast<std::size_t>(i)] =
            topology_ == SwarmTopology::Ring ? ring_best(pbest_values_, i) : static_cast<int>(global);
    const Eigen::MatrixXd pbest_snapshot = pbest_;

    for (int i = 0; i < swarm_size_; ++i) {
        const Eigen::VectorXd r1 = rng.uniform_vector(zero, one);
        const Eigen::VectorXd r2 = rng.uniform_vector(zero, one);
        const auto x = positions_.col(i);
        Eigen::VectorXd v = velocities_.col(i) +
                            phi1_ * r1.cwiseProduct(pbest_.col(i) - x) +
                            phi2_ * r2.cwiseProduct(pbest_snapshot.col(attractor[static_cast<std::size_t>(i)]) - x);
        v = (chi_ * v).cwiseMax(-vmax).cwiseMin(vmax);
        Eigen::VectorXd candidate = x + v;
        const double value = evaluate(candidate);
        velocities_.col(i) = v;
        positions_.col(i) = candidate;
        if (value < pbest_values_[i]) {
            pbest_values_[i] = value;
            pbest_.col(i) = candidate;
        }
    }

    std::vector<DecisionEvent> events(static_cast<std::size_t>(swarm_size_),
                                      DecisionEvent::compare_with_best(history));
    if (topology_ == SwarmTopology::Ring)
        events.insert(events.end(), static_cast<std::size_t>(swarm_size_), DecisionEvent::ring_best_of_three());
    else
        events.push_back(DecisionEvent::global_best_of_swarm(swarm_size_));
    return events;
}

} // namespace iurlab::algorithms
