#include "iurlab/algorithms/differential_evolution.hpp"

#include "iurlab/algorithms/evolution_strategy.hpp"
#include "iurlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace iurlab::algorithms {

Eigen::VectorXd de_rand1_mutant(const Eigen::VectorXd& x1, const Eigen::VectorXd& x2,
                                const Eigen::VectorXd& x3, double F)
{
    return x1 + F * (x2 - x3);
}

Eigen::VectorXd binomial_crossover(const Eigen::VectorXd& target, const Eigen::VectorXd& mutant, double CR,
                                   Eigen::Index forced, Rng& rng)
{
    Eigen::VectorXd trial = target;
    for (Eigen::Index j = 0; j < target.size(); ++j)
        if (rng.uniform() < CR || j == forced)
            trial[j] = mutant[j];
    return trial;
}

std::vector<int> distinct_indices(int n, int count, std::initializer_list<int> exclude, Rng& rng)
{
    if (n - static_cast<int>(exclude.size()) < count)
        throw DomainError("population too small for the requested distinct indices");
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < count) {
        const int r = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
        if (std::find(exclude.begin(), exclude.end(), r) != exclude.end() ||
            std::find(picked.begin(), picked.end(), r) != picked.end())
            continue;
        picked.push_back(r);
    }
    return picked;
}

namespace {

void initialize_population(const SearchSpace& space, int s, Rng& rng, Eigen::MatrixXd& population,
                           Eigen::VectorXd& values, const std::function<double(Eigen::VectorXd&)>& evaluate)
{
    population.resize(space.dimension(), s);
    values.resize(s);
    for (int i = 0; i < s; ++i) {
        Eigen::VectorXd x = rng.uniform_vector(space.lower(), space.upper());
        values[i] = evaluate(x);
        population.col(i) = x;
    }
}

} // namespace

void DifferentialEvolution::do_initialize(Rng& rng)
{
    initialize_population(space(), config_.swarm_size, rng, population_, values_,
                          [this](Eigen::VectorXd& x) { return evaluate(x); });
}

std::vector<DecisionEvent> DifferentialEvolution::do_step(Rng& rng)
{
    const std::int64_t history = generation();
    const int s = config_.swarm_size;
    const double F = config_.F;
    Eigen::Index best = 0;
    values_.minCoeff(&best);
    const Eigen::MatrixXd& P = population_;

    Eigen::MatrixXd next = population_;
    Eigen::VectorXd next_values = values_;
    for (int i = 0; i < s; ++i) {
        Eigen::VectorXd mutant;
        switch (config_.de_variant) {
        case iur::DeVariant::Rand1: {
            const auto r = distinct_indices(s, 3, {i}, rng);
            mutant = de_rand1_mutant(P.col(r[0]), P.col(r[1]), P.col(r[2]), F);
            break;
        }
        case iur::DeVariant::Rand2: {
            const auto r = distinct_indices(s, 5, {i}, rng);
            mutant = P.col(r[0]) + F * (P.col(r[1]) - P.col(r[2])) + F * (P.col(r[3]) - P.col(r[4]));
            break;
        }
        case iur::DeVariant::Best1: {
            const auto r = distinct_indices(s, 2, {i, static_cast<int>(best)}, rng);
            mutant = P.col(best) + F * (P.col(r[0]) - P.col(r[1]));
            break;
        }
        case iur::DeVariant::Best2: {
            const auto r = distinct_indices(s, 4, {i, static_cast<int>(best)}, rng);
            mutant = P.col(best) + F * (P.col(r[0]) - P.col(r[1])) + F * (P.col(r[2]) - P.col(r[3]));
            break;
        }
        case iur::DeVariant::CurrentToBest1: {
            const auto r = distinct_indices(s, 2, {i, static_cast<int>(best)}, rng);
            mutant = P.col(i) + F * (P.col(best) - P.col(i)) + F * (P.col(r[0]) - P.col(r[1]));
            break;
        }
        }
        const auto forced = static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(dimension())));
        Eigen::VectorXd trial = binomial_crossover(P.col(i), mutant, config_.CR, forced, rng);
        const double value = evaluate(trial);
        if (value < values_[i]) {
            next.col(i) = trial;
            next_values[i] = value;
        }
    }
    population_ = std::move(next);
    values_ = std::move(next_values);

    std::vector<DecisionEvent> events(static_cast<std::size_t>(s), DecisionEvent::compare_with_best(history));
    if (config_.de_variant != iur::DeVariant::Rand1 && config_.de_variant != iur::DeVariant::Rand2)
        events.push_back(DecisionEvent::global_best_of_swarm(s));
    return events;
}

void Jade::do_initialize(Rng& rng)
{
    initialize_population(space(), config_.swarm_size, rng, population_, values_,
                          [this](Eigen::VectorXd& x) { return evaluate(x); });
}

std::vector<DecisionEvent> Jade::do_step(Rng& rng)
{
    const std::int64_t history = generation();
    const int s = config_.swarm_size;
    const auto elite = static_cast<std::size_t>(iur::elite_count(config_.p, s));
    const std::vector<int> order = ranking(values_);
    const Eigen::MatrixXd P = population_;
    const std::size_t archive_before = archive_.size();

    std::vector<double> good_F;
    std::vector<double> good_CR;
    for (int i = 0; i < s; ++i) {
        const double CR = std::clamp(rng.normal(mu_CR_, 0.1), 0.0, 1.0);
        double F = 0.0;
        while (F <= 0.0)
            F = rng.cauchy(mu_F_, 0.1);
        F = std::min(F, 1.0);

        const int pbest = order[rng.index(elite)];
        const int r1 = distinct_indices(s, 1, {i}, rng)[0];
        // r2 from population united with the archive as it was at the start of the generation
        const auto pool = static_cast<std::size_t>(s) + archive_before;
        Eigen::VectorXd x_r2;
        for (;;) {
            const std::size_t r2 = rng.index(pool);
            if (r2 < static_cast<std::size_t>(s)) {
                if (static_cast<int>(r2) == i || static_cast<int>(r2) == r1)
                    continue;
                x_r2 = P.col(static_cast<Eigen::Index>(r2));
            } else {
                x_r2 = archive_[r2 - static_cast<std::size_t>(s)];
            }
            break;
        }
        const Eigen::VectorXd mutant = P.col(i) + F * (P.col(pbest) - P.col(i)) + F * (P.col(r1) - x_r2);
        const auto forced = static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(dimension())));
        Eigen::VectorXd trial = binomial_crossover(P.col(i), mutant, CR, forced, rng);
        const double value = evaluate(trial);
        if (value < values_[i]) {
            archive_.push_back(P.col(i));
            population_.col(i) = trial;
            values_[i] = value;
            good_F.push_back(F);
            good_CR.push_back(CR);
        }
    }
    while (archive_.size() > static_cast<std::size_t>(s))
        archive_.erase(archive_.begin() + static_cast<std::ptrdiff_t>(rng.index(archive_.size())));

    if (!good_F.empty()) {
        double sum = 0.0, sum_sq = 0.0, sum_cr = 0.0;
        for (double f : good_F) {
            sum += f;
            sum_sq += f * f;
        }
        for (double cr : good_CR)
            sum_cr += cr;
        mu_CR_ = (1.0 - config_.c) * mu_CR_ + config_.c * sum_cr / static_cast<double>(good_CR.size());
        mu_F_ = (1.0 - config_.c) * mu_F_ + config_.c * sum_sq / sum;
    }

    std::vector<DecisionEvent> events(static_cast<std::size_t>(s), DecisionEvent::compare_with_best(history));
    events.push_back(DecisionEvent::pbest_membership(config_.p, s));
    return events;
}

} // namespace iurlab::algorithms
