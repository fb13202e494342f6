#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace iurlab {

enum class EventKind {
    CompareWithBest,     ///< new draw vs. the best of `history` previous draws
    TopMuOfLambda,       ///< unordered index set of the best mu of lambda
    RankedTopMuOfLambda, ///< ordered best mu of lambda
    RingBestOfThree,     ///< lbest among a particle and its two ring neighbours
    GlobalBestOfSwarm,   ///< argmin over s personal bests
    PbestMembership,     ///< index set of the best ceil(p*s) of s
};

std::string_view to_string(EventKind kind);

/// One unit of information consumed by an optimizer in one generation.
///
/// Parameter slots by kind:
///   CompareWithBest      first = history length
///   TopMuOfLambda        first = lambda, second = mu
///   RankedTopMuOfLambda  first = lambda, second = mu
///   RingBestOfThree      (none)
///   GlobalBestOfSwarm    first = s
///   PbestMembership      first = s, fraction = p
struct DecisionEvent {
    EventKind kind = EventKind::CompareWithBest;
    std::int64_t first = 0;
    std::int64_t second = 0;
    double fraction = 0.0;
    std::int64_t generation = 0;

    static DecisionEvent compare_with_best(std::int64_t history, std::int64_t generation = 0);
    static DecisionEvent top_mu_of_lambda(std::int64_t lambda, std::int64_t mu, std::int64_t generation = 0);
    static DecisionEvent ranked_top_mu_of_lambda(std::int64_t lambda, std::int64_t mu,
                                                 std::int64_t generation = 0);
    static DecisionEvent ring_best_of_three(std::int64_t generation = 0);
    static DecisionEvent global_best_of_swarm(std::int64_t s, std::int64_t generation = 0);
    static DecisionEvent pbest_membership(double p, std::int64_t s, std::int64_t generation = 0);

    /// Throws DomainError unless the parameters are positive, mu <= lambda and 0 < p <= 1.
    void validate() const;

    /// `KIND(params)` token used in trace CSV files, e.g. `TopMuOfLambda(30,15)`.
    std::string token() const;
    static DecisionEvent parse(std::string_view token, std::int64_t generation = 0);

    friend bool operator==(const DecisionEvent&, const DecisionEvent&) = default;
};

} // namespace iurlab
