#include "iurlab/algorithms/random_search.hpp"

namespace iurlab::algorithms {

void MonteCarlo::do_initialize(Rng& rng)
{
    do_step(rng);
}

std::vector<DecisionEvent> MonteCarlo::do_step(Rng& rng)
{
    Eigen::VectorXd x = rng.uniform_vector(space().lower(), space().upper());
    evaluate(x);
    return {};
}

void LuusJaakola::do_initialize(Rng& rng)
{
    current_ = rng.uniform_vector(space().lower(), space().upper());
    current_value_ = evaluate(current_);
    radius_ = 0.5 * space().width();
}

std::vector<DecisionEvent> LuusJaakola::do_step(Rng& rng)
{
    const std::int64_t history = generation();
    Eigen::VectorXd candidate = rng.uniform_vector(current_ - radius_, current_ + radius_);
    const double value = evaluate(candidate);
    if (value < current_value_) {
        current_ = std::move(candidate);
        current_value_ = value;
    } else {
        radius_ *= gamma_;
    }
    return {DecisionEvent::compare_with_best(history)};
}

} // namespace iurlab::algorithms
