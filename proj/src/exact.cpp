#include "iurlab/exact.hpp"

#include "iurlab/entropy.hpp"
#include "iurlab/errors.hpp"
#include "iurlab/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace iurlab::exact {

namespace {

/// Enumerates the functions of an ensemble as value vectors over the points.
class FunctionEnumerator {
public:
    explicit FunctionEnumerator(const FiniteEnsemble& ensemble)
        : ensemble_(ensemble), values_(static_cast<std::size_t>(ensemble.points), 0)
    {
        if (ensemble.mode == EnsembleMode::InjectiveOrderings)
            std::iota(values_.begin(), values_.end(), 0);
    }

    const std::vector<int>& values() const { return values_; }

    bool advance()
    {
        if (ensemble_.mode == EnsembleMode::InjectiveOrderings)
            return std::next_permutation(values_.begin(), values_.end());
        for (auto& digit : values_) {
            if (++digit < ensemble_.values)
                return true;
            digit = 0;
        }
        return false;
    }

private:
    FiniteEnsemble ensemble_;
    std::vector<int> values_;
};

double entropy_of_keys(std::vector<std::uint64_t>& keys)
{
    std::sort(keys.begin(), keys.end());
    std::vector<std::uint64_t> counts;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i])
            ++j;
        counts.push_back(j - i);
        i = j;
    }
    return entropy::entropy_of_counts(counts);
}

void check_ensemble(const FiniteEnsemble& ensemble)
{
    if (ensemble.points < 1)
        throw DomainError("finite ensemble needs at least one point");
    if (ensemble.mode == EnsembleMode::AllFunctions && ensemble.values < 1)
        throw DomainError("finite ensemble needs at least one value");
    if (ensemble.points > 250 || ensemble.value_count() > 250)
        throw SizeError("finite ensemble too large to enumerate");
}

void check_budget(const FiniteEnsemble& ensemble, int g)
{
    const double states = ensemble.size() * static_cast<double>(g + 1);
    if (!(states <= kEnumerationBudget))
        throw SizeError("enumeration needs " + std::to_string(states) + " states, budget is " +
                        std::to_string(kEnumerationBudget));
}

std::string describe(const FiniteEnsemble& ensemble, Feedback feedback, int g)
{
    std::string out = ensemble.mode == EnsembleMode::AllFunctions ? "all_functions" : "injective_orderings";
    out += " m=" + std::to_string(ensemble.points);
    if (ensemble.mode == EnsembleMode::AllFunctions)
        out += " n=" + std::to_string(ensemble.values);
    out += " g=" + std::to_string(g);
    out += feedback == Feedback::Rank ? " rank" : " value";
    return out;
}

} // namespace

double FiniteEnsemble::size() const
{
    if (mode == EnsembleMode::AllFunctions)
        return std::pow(static_cast<double>(values), static_cast<double>(points));
    return std::tgamma(static_cast<double>(points) + 1.0);
}

int rank_slot(int value, std::span<const int> previous)
{
    std::vector<int> levels(previous.begin(), previous.end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    const auto below = std::lower_bound(levels.begin(), levels.end(), value);
    const int index = static_cast<int>(below - levels.begin());
    if (below != levels.end() && *below == value)
        return 2 * index + 1;
    return 2 * index;
}

FinitePolicy constant_order_policy(int points)
{
    if (points < 1)
        throw DomainError("policy needs at least one point");
    return FinitePolicy(
        Feedback::Rank,
        [points](std::span<const Observation> history) {
            return static_cast<int>(history.size() % static_cast<std::size_t>(points));
        },
        "constant");
}

FinitePolicy compare_with_best_policy(int points)
{
    if (points < 1)
        throw DomainError("policy needs at least one point");
    return FinitePolicy(
        Feedback::Rank,
        [points](std::span<const Observation> history) {
            if (history.empty())
                return 0;
            const Observation& last = history.back();
            if (history.size() == 1)
                return (last.point + 1) % points;
            const bool improved = last.feedback == 0;
            return (last.point + (improved ? 1 : 2)) % points;
        },
        "compare_with_best");
}

FinitePolicy relabeled(const FinitePolicy& policy, std::vector<int> permutation)
{
    std::vector<int> inverse(permutation.size(), -1);
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        const int target = permutation[i];
        if (target < 0 || static_cast<std::size_t>(target) >= permutation.size() || inverse[target] != -1)
            throw DomainError("relabeling is not a permutation");
        inverse[target] = static_cast<int>(i);
    }
    return FinitePolicy(
        policy.feedback(),
        [policy, permutation = std::move(permutation),
         inverse = std::move(inverse)](std::span<const Observation> history) {
            std::vector<Observation> original(history.begin(), history.end());
            for (auto& step : original)
                step.point = inverse.at(static_cast<std::size_t>(step.point));
            return permutation.at(static_cast<std::size_t>(policy.next(original)));
        },
        policy.name() + "_relabeled");
}

DecisionTree::DecisionTree(const FiniteEnsemble& ensemble, Feedback feedback, int g) : points_(ensemble.points)
{
    check_ensemble(ensemble);
    if (g < 1)
        throw DomainError("decision tree needs g >= 1");

    struct Pending {
        std::size_t node;
        int depth;
        int levels;
    };
    const int value_count = ensemble.value_count();
    children_.emplace_back();
    std::vector<Pending> queue{{0, 0, 0}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Pending current = queue[head];
        if (current.depth == g)
            continue;
        const int alphabet = feedback == Feedback::Rank ? 2 * current.levels + 1 : value_count;
        std::vector<std::int32_t> children(static_cast<std::size_t>(alphabet), -1);
        for (int symbol = 0; symbol < alphabet; ++symbol) {
            int levels = current.levels;
            if (feedback == Feedback::Rank) {
                const bool new_level = symbol % 2 == 0;
                if (new_level && current.levels >= value_count)
                    continue;
                levels += new_level ? 1 : 0;
            }
            if (children_.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
                throw SizeError("decision tree too large");
            children[static_cast<std::size_t>(symbol)] = static_cast<std::int32_t>(children_.size());
            children_.emplace_back();
            queue.push_back({children_.size() - 1, current.depth + 1, levels});
        }
        children_[current.node] = std::move(children);
    }
}

std::size_t DecisionTree::node_of(std::span<const Observation> history) const
{
    std::size_t node = 0;
    for (const auto& step : history) {
        const auto& children = children_[node];
        if (step.feedback < 0 || static_cast<std::size_t>(step.feedback) >= children.size() ||
            children[static_cast<std::size_t>(step.feedback)] < 0)
            throw DomainError("history is not part of the decision tree");
        node = static_cast<std::size_t>(children[static_cast<std::size_t>(step.feedback)]);
    }
    return node;
}

double DecisionTree::policy_count() const
{
    return std::pow(static_cast<double>(points_), static_cast<double>(node_count()));
}

FinitePolicy table_policy(std::shared_ptr<const DecisionTree> tree, std::vector<int> choices, Feedback feedback)
{
    if (choices.size() != tree->node_count())
        throw DomainError("table policy needs one choice per tree node");
    for (int choice : choices)
        if (choice < 0 || choice >= tree->points())
            throw DomainError("table policy choice out of range");
    return FinitePolicy(
        feedback,
        [tree = std::move(tree), choices = std::move(choices)](std::span<const Observation> history) {
            return choices[tree->node_of(history)];
        },
        "table");
}

ExactIurResult exact_iur(const FinitePolicy& policy, const FiniteEnsemble& ensemble, int g)
{
    check_ensemble(ensemble);
    if (g < 1)
        throw DomainError("exact IUR needs g >= 1");
    check_budget(ensemble, g);

    const int m = ensemble.points;
    const int radix = std::max(m, ensemble.value_count());
    const int width = 2 * g + 1; // x1 y1 x2 y2 ... xg yg x(g+1)
    if (static_cast<double>(width) * std::log2(static_cast<double>(radix)) >= 63.0)
        throw SizeError("trajectory keys do not fit in 64 bits");

    const auto functions = static_cast<std::size_t>(ensemble.size());
    std::vector<std::uint8_t> trajectories(functions * static_cast<std::size_t>(width));

    FunctionEnumerator enumerator(ensemble);
    std::vector<Observation> history;
    std::vector<int> seen;
    std::size_t f = 0;
    do {
        const auto& values = enumerator.values();
        history.clear();
        seen.clear();
        std::uint8_t* row = trajectories.data() + f * static_cast<std::size_t>(width);
        for (int i = 0; i < g; ++i) {
            const int x = policy.next(history);
            if (x < 0 || x >= m)
                throw DomainError("policy chose a point outside the search space");
            const int y = values[static_cast<std::size_t>(x)];
            const int observed = policy.feedback() == Feedback::Rank ? rank_slot(y, seen) : y;
            history.push_back({x, observed});
            seen.push_back(y);
            row[2 * i] = static_cast<std::uint8_t>(x);
            row[2 * i + 1] = static_cast<std::uint8_t>(y);
        }
        const int z = policy.next(history);
        if (z < 0 || z >= m)
            throw DomainError("policy chose a point outside the search space");
        row[2 * g] = static_cast<std::uint8_t>(z);
        ++f;
    } while (enumerator.advance());

    const auto R = static_cast<std::uint64_t>(radix);
    std::vector<std::uint64_t> keys(functions);

    // Entropy of the tuple formed by the trajectory entries selected by `pick`.
    auto joint_entropy = [&](auto pick, int length) {
        for (std::size_t k = 0; k < functions; ++k) {
            const std::uint8_t* row = trajectories.data() + k * static_cast<std::size_t>(width);
            std::uint64_t key = 0;
            for (int j = 0; j < length; ++j)
                key = key * R + row[pick(j)];
            keys[k] = key;
        }
        return entropy_of_keys(keys);
    };
    auto points_only = [](int j) { return 2 * j; };
    auto interleaved = [](int j) { return j; };

    // H(X_1..X_k) for k = 0..g+1
    std::vector<double> h_points(static_cast<std::size_t>(g + 2), 0.0);
    for (int k = 1; k <= g + 1; ++k)
        h_points[static_cast<std::size_t>(k)] = joint_entropy(points_only, k);

    ExactIurResult result;
    result.functions_enumerated = functions;
    double numerator = 0.0;
    double denominator = 0.0;
    for (int i = 1; i <= g; ++i) {
        const double decision =
            std::max(0.0, h_points[static_cast<std::size_t>(i + 1)] - h_points[static_cast<std::size_t>(i)]);
        const double acquired =
            std::max(0.0, joint_entropy(interleaved, 2 * i) - joint_entropy(interleaved, 2 * i - 1));
        result.decision_bits.push_back(decision);
        result.acquired_bits.push_back(acquired);
        numerator += decision;
        denominator += acquired;
    }
    result.strict_numerator_bits = h_points[static_cast<std::size_t>(g)];

    if (!(denominator > 1e-12))
        throw HypothesisError("acquired information is zero; the IUR is undefined");

    iur::IurReport& report = result.report;
    report.algorithm = "exact:" + policy.name();
    report.g = g;
    report.codomain_bits = std::log2(static_cast<double>(ensemble.value_count()));
    report.numerator_bits = numerator;
    report.numerator_upper_bits = numerator;
    report.denominator_bits = denominator;
    report.ratio = numerator / denominator;
    report.ratio_upper = report.ratio;
    report.exact = true;
    return result;
}

nlohmann::json to_json(const VerificationSummary& summary)
{
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : summary.violations)
        violations.push_back({{"configuration", v.configuration}, {"value", v.value}});
    return {
        {"configurations_checked", summary.configurations_checked},
        {"configurations_rejected", summary.configurations_rejected},
        {"policies_checked", summary.policies_checked},
        {"max_iur_observed", summary.max_iur_observed},
        {"min_iur_observed", summary.min_iur_observed},
        {"max_abs_error", summary.max_abs_error},
        {"violations", violations},
    };
}

VerificationSummary verify_theorem1(const Theorem1Options& options)
{
    if (options.max_m < 1 || options.max_n < 1 || options.max_g < 1)
        throw DomainError("verification sizes must be >= 1");

    struct Config {
        FiniteEnsemble ensemble;
        Feedback feedback;
        int g;
    };
    std::vector<Config> configs;
    std::vector<Feedback> feedbacks{Feedback::Rank};
    if (options.include_value_feedback)
        feedbacks.push_back(Feedback::Value);
    for (int g = 1; g <= options.max_g; ++g)
        for (int m = 1; m <= options.max_m; ++m) {
            for (Feedback feedback : feedbacks) {
                for (int n = 1; n <= options.max_n; ++n)
                    configs.push_back({{m, n, EnsembleMode::AllFunctions}, feedback, g});
                configs.push_back({{m, m, EnsembleMode::InjectiveOrderings}, feedback, g});
            }
        }

    VerificationSummary summary;
    std::vector<Config> accepted;
    for (const auto& config : configs) {
        if (config.ensemble.value_count() < 2) {
            ++summary.configurations_rejected;
            continue;
        }
        check_budget(config.ensemble, config.g);
        accepted.push_back(config);
    }

    summary.max_iur_observed = -std::numeric_limits<double>::infinity();
    summary.min_iur_observed = std::numeric_limits<double>::infinity();
    std::uint64_t stream = 0;
    for (const auto& config : accepted) {
        auto tree = std::make_shared<const DecisionTree>(config.ensemble, config.feedback, config.g);
        auto choices = std::make_shared<std::vector<int>>(tree->node_count(), 0);
        const FinitePolicy policy(
            config.feedback,
            [tree, choices](std::span<const Observation> history) { return (*choices)[tree->node_of(history)]; },
            "table");

        auto check = [&] {
            const double ratio = exact_iur(policy, config.ensemble, config.g).report.ratio;
            ++summary.policies_checked;
            summary.max_iur_observed = std::max(summary.max_iur_observed, ratio);
            summary.min_iur_observed = std::min(summary.min_iur_observed, ratio);
            if (ratio < -options.tolerance || ratio > 1.0 + options.tolerance)
                summary.violations.push_back({describe(config.ensemble, config.feedback, config.g), ratio});
        };

        const int m = config.ensemble.points;
        if (tree->policy_count() <= options.exhaustive_limit) {
            bool more = true;
            while (more) {
                check();
                more = false;
                for (auto& digit : *choices) {
                    if (++digit < m) {
                        more = true;
                        break;
                    }
                    digit = 0;
                }
            }
        } else {
            Rng rng(mix_seed(options.seed, stream));
            for (std::uint64_t k = 0; k < options.samples; ++k) {
                for (auto& digit : *choices)
                    digit = static_cast<int>(rng.index(static_cast<std::size_t>(m)));
                check();
            }
        }
        ++stream;
        ++summary.configurations_checked;
    }
    if (summary.policies_checked == 0) {
        summary.max_iur_observed = 0.0;
        summary.min_iur_observed = 0.0;
    }
    return summary;
}

VerificationSummary verify_pi_lemma(int max_g, double tolerance)
{
    if (max_g < 1)
        throw DomainError("verify_pi_lemma needs max_g >= 1");
    if (max_g > 10)
        throw SizeError("verify_pi_lemma enumerates (g+1)! orderings; max_g must be <= 10");

    VerificationSummary summary;
    summary.max_iur_observed = -std::numeric_limits<double>::infinity();
    summary.min_iur_observed = std::numeric_limits<double>::infinity();
    for (int g = 1; g <= max_g; ++g) {
        std::vector<int> order(static_cast<std::size_t>(g + 1));
        std::iota(order.begin(), order.end(), 0);
        std::uint64_t not_beaten = 0;
        std::uint64_t beaten = 0;
        do {
            const int best_previous = *std::min_element(order.begin(), order.end() - 1);
            if (best_previous < order.back())
                ++not_beaten;
            else
                ++beaten;
        } while (std::next_permutation(order.begin(), order.end()));

        const std::uint64_t counts[] = {not_beaten, beaten};
        const double enumerated = entropy::shannon_entropy(entropy::DiscreteDistribution::from_counts(counts));
        const double error = std::abs(enumerated - entropy::pi(g));
        summary.max_abs_error = std::max(summary.max_abs_error, error);
        summary.max_iur_observed = std::max(summary.max_iur_observed, enumerated);
        summary.min_iur_observed = std::min(summary.min_iur_observed, enumerated);
        if (error > tolerance)
            summary.violations.push_back({"g=" + std::to_string(g), enumerated});
        ++summary.configurations_checked;
    }
    return summary;
}

} // namespace iurlab::exact
