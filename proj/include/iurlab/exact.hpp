#pragma once

#include "iurlab/iur.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

/// Brute-force IUR on tiny finite problems.
///
/// The search space is {0, ..., m-1}. Every objective function of the
/// ensemble is enumerated with equal weight, a deterministic policy is run
/// for g evaluations on each, and the entropies of the resulting joint
/// distributions of queried points and observed values are computed from
/// exact counts.
namespace iurlab::exact {

enum class EnsembleMode {
    AllFunctions,       ///< all n^m functions; values i.i.d. uniform on {0..n-1}
    InjectiveOrderings, ///< all m! orderings; the value of a point is its rank in {0..m-1}
};

enum class Feedback {
    Rank,  ///< the policy sees only where a new value falls among the previous ones
    Value, ///< the policy sees the value itself
};

struct FiniteEnsemble {
    int points = 2;
    int values = 2; ///< n; ignored for InjectiveOrderings
    EnsembleMode mode = EnsembleMode::AllFunctions;

    /// Number of distinct observable values (n, or m for orderings).
    int value_count() const { return mode == EnsembleMode::AllFunctions ? values : points; }
    /// n^m or m!, as a double so that oversized ensembles can be rejected.
    double size() const;
};

/// One step of history: the queried point and what the policy observed.
///
/// Rank feedback is a slot index among the r distinct previous values
/// v_0 < ... < v_{r-1}: slot 2j+1 means "equal to v_j", slot 2j means
/// "strictly between v_{j-1} and v_j" (slot 0 is below all, slot 2r above all).
struct Observation {
    int point = 0;
    int feedback = 0;
};

/// Rank slot of `value` among `previous` (see Observation).
int rank_slot(int value, std::span<const int> previous);

/// Deterministic map from history to the next point to evaluate.
class FinitePolicy {
public:
    using Rule = std::function<int(std::span<const Observation>)>;

    FinitePolicy(Feedback feedback, Rule rule, std::string name = "policy")
        : feedback_(feedback), rule_(std::move(rule)), name_(std::move(name))
    {
    }

    Feedback feedback() const { return feedback_; }
    const std::string& name() const { return name_; }
    int next(std::span<const Observation> history) const { return rule_(history); }

private:
    Feedback feedback_;
    Rule rule_;
    std::string name_;
};

/// Visits 0, 1, 2, ... (mod m) regardless of what it observes.
FinitePolicy constant_order_policy(int points);

/// Starts at 0, then 1; afterwards steps +1 from the last point when the last
/// value beat every earlier one, +2 otherwise (mod m). Rank feedback.
FinitePolicy compare_with_best_policy(int points);

/// Conjugates `policy` by a relabeling of the points: the new policy queries
/// permutation[x] whenever the original would query x.
FinitePolicy relabeled(const FinitePolicy& policy, std::vector<int> permutation);

/// Every history a policy can face, as a tree over observation sequences.
/// Node 0 is the empty history; nodes at depth g are final decisions.
class DecisionTree {
public:
    DecisionTree(const FiniteEnsemble& ensemble, Feedback feedback, int g);

    std::size_t node_count() const { return children_.size(); }
    /// Node reached by the observations of `history`.
    std::size_t node_of(std::span<const Observation> history) const;
    /// m^node_count (as a double).
    double policy_count() const;
    int points() const { return points_; }

private:
    int points_;
    std::vector<std::vector<std::int32_t>> children_;
};

/// Policy choosing `choices[node]` at every tree node.
FinitePolicy table_policy(std::shared_ptr<const DecisionTree> tree, std::vector<int> choices,
                          Feedback feedback);

/// Upper limit on (ensemble size) x (g + 1) for one enumeration.
inline constexpr double kEnumerationBudget = 1e7;

struct ExactIurResult {
    /// numerator = sum_i H(Z_i | X_1..X_i, Z_1..Z_{i-1}), where Z_i is the
    /// policy's choice after the i-th evaluation; denominator =
    /// sum_i H(Y_i | X_1..X_i, Y_1..Y_{i-1}).
    iur::IurReport report;
    std::vector<double> decision_bits; ///< per i = 1..g
    std::vector<double> acquired_bits; ///< per i = 1..g
    /// sum_i H(X_i | X_1..X_{i-1}): only the choices that precede an evaluation.
    double strict_numerator_bits = 0.0;
    std::uint64_t functions_enumerated = 0;
};

/// Throws SizeError over budget and HypothesisError when the acquired
/// information is zero.
ExactIurResult exact_iur(const FinitePolicy& policy, const FiniteEnsemble& ensemble, int g);

struct Violation {
    std::string configuration;
    double value = 0.0;
};

struct VerificationSummary {
    std::uint64_t configurations_checked = 0;
    std::uint64_t configurations_rejected = 0;
    std::uint64_t policies_checked = 0;
    double max_iur_observed = 0.0;
    double min_iur_observed = 0.0;
    double max_abs_error = 0.0; ///< only meaningful for verify_pi_lemma
    std::vector<Violation> violations;
};

nlohmann::json to_json(const VerificationSummary& summary);

struct Theorem1Options {
    int max_m = 3;
    int max_n = 2;
    int max_g = 2;
    /// Configurations with more policies than this are sampled.
    double exhaustive_limit = 20000;
    std::uint64_t samples = 2000;
    std::uint64_t seed = 1;
    bool include_value_feedback = true;
    double tolerance = 1e-12;
};

/// Checks 0 <= IUR <= 1 for deterministic policies on every configuration
/// m <= max_m, n <= max_n, g <= max_g, in both ensemble modes. Configurations
/// with zero acquired information (n = 1, or m = 1 orderings) are rejected
/// and counted. Throws SizeError before doing any work if a configuration
/// would exceed the enumeration budget.
VerificationSummary verify_theorem1(const Theorem1Options& options);

/// For g = 1..max_g (max_g <= 10), enumerates all (g+1)! orderings and
/// compares the entropy of I(min of the first g < last) with pi(g).
VerificationSummary verify_pi_lemma(int max_g, double tolerance = 1e-12);

} // namespace iurlab::exact
