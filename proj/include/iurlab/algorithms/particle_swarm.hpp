#pragma once

#include "iurlab/algorithms/optimizer.hpp"

#include <Eigen/Core>

namespace iurlab::algorithms {

enum class SwarmTopology {
    GlobalBest, ///< PSO without inertia, attracted to the swarm's best
    Ring,       ///< SPSO: constricted, attracted to the best of {i-1, i, i+1}
};

/// Constriction coefficient 2 / |2 - phi - sqrt(phi^2 - 4 phi)|; phi > 4.
double constriction(double phi);

/// Index of the best pbest among ring neighbours {i-1, i, i+1} (mod s).
int ring_best(const Eigen::VectorXd& pbest_values, int i);

class ParticleSwarm final : public Optimizer {
public:
    ParticleSwarm(const OptimizerConfig& config, SwarmTopology topology);

    std::int64_t evaluations_per_generation() const override { return swarm_size_; }
    /// Columns are particles.
    const Eigen::MatrixXd& positions() const { return positions_; }
    const Eigen::MatrixXd& velocities() const { return velocities_; }
    const Eigen::MatrixXd& pbest() const { return pbest_; }
    const Eigen::VectorXd& pbest_values() const { return pbest_values_; }

protected:
    void do_initialize(Rng& rng) override;
    std::vector<DecisionEvent> do_step(Rng& rng) override;

private:
    SwarmTopology topology_;
    int swarm_size_;
    double phi1_;
    double phi2_;
    double chi_ = 1.0;
    Eigen::MatrixXd positions_;
    Eigen::MatrixXd velocities_;
    Eigen::MatrixXd pbest_;
    Eigen::VectorXd pbest_values_;
};

} // namespace iurlab::algorithms
