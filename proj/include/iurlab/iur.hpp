#pragma once

#include "iurlab/events.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace iurlab::iur {

/// Information utilization ratio with optional upper bound.
///
/// `ratio = numerator_bits / denominator_bits`. When only bounds are known,
/// `ratio` is the lower bound, `numerator_upper_bits` and `ratio_upper` the
/// upper bound, and `exact` is false.
struct IurReport {
    std::string algorithm;
    std::optional<std::int64_t> g;
    std::optional<std::int64_t> lambda;
    std::optional<std::int64_t> mu;
    std::optional<std::int64_t> s;
    std::optional<double> p;
    double codomain_bits = 0.0;

    double numerator_bits = 0.0;
    double numerator_upper_bits = 0.0;
    double denominator_bits = 1.0;
    double ratio = 0.0;
    double ratio_upper = 0.0;
    bool exact = true;
};

/// Fields: algorithm, g, lambda, mu, s, p, H_bits, numerator_bits,
/// denominator_bits, ratio, ratio_upper, exact. Absent parameters are null.
nlohmann::json to_json(const IurReport& report);

struct EventPrice {
    double bits = 0.0;
    bool exact = true; ///< false for upper-bound prices
};

/// Bits consumed by one decision event:
///   CompareWithBest(h)       pi(h)                        exact
///   TopMuOfLambda(l, m)      log2 C(l, m)                 exact
///   RankedTopMuOfLambda(l,m) log2 l!/(l-m)!               exact
///   RingBestOfThree          log2 3                       upper bound
///   GlobalBestOfSwarm(s)     log2 s                       upper bound
///   PbestMembership(p, s)    log2 C(s, ceil(p s))         upper bound
EventPrice price_event(const DecisionEvent& event);

/// Size of JADE's elite set, ceil(p s), at least 1.
std::int64_t elite_count(double p, std::int64_t s);

enum class DeVariant { Rand1, Rand2, Best1, Best2, CurrentToBest1 };

DeVariant parse_de_variant(std::string_view name);
std::string_view to_string(DeVariant variant);

/// Monte Carlo: Z is fixed, nothing is utilized. `evaluations` and `H`
/// only set the denominator.
IurReport iur_mc(std::int64_t evaluations = 1, double H = 32.0);

/// Luus-Jaakola: sum_{i=1}^{g-1} pi(i) / (g H).
IurReport iur_lj(std::int64_t g, double H);

/// (mu, lambda)-ES: (g-1) log2 C(lambda, mu) / (g lambda H).
IurReport iur_es(std::int64_t g, std::int64_t lambda, std::int64_t mu, double H);

/// CMA-ES: (g-1) log2 lambda!/(lambda-mu)! / (g lambda H).
IurReport iur_cmaes(std::int64_t g, std::int64_t lambda, std::int64_t mu, double H);

/// PSO interval: [s S, s S + (g-1) log2 s] / (s g H) with S = sum_{i<g} pi(i).
IurReport iur_pso_bounds(std::int64_t g, std::int64_t s, double H);

/// SPSO interval: [s S, s S + s (g-1) log2 3] / (s g H).
IurReport iur_spso_bounds(std::int64_t g, std::int64_t s, double H);

/// DE: rand/1 and rand/2 are exact (same ratio as LJ); best/1, best/2 and
/// current-to-best/1 share the PSO interval.
IurReport iur_de(std::int64_t g, std::int64_t s, double H, DeVariant variant);

/// JADE interval: [s S, s S + (g-1) log2 C(s, ceil(p s))] / (s g H).
IurReport iur_jade_bounds(std::int64_t g, std::int64_t s, double p, double H);

/// Upper bound for comparison-based algorithms with m evaluations: log2(m) / H.
double comparison_upper_bound(std::int64_t m, double H);

/// Prices a stream of events against `total_evaluations * H` acquired bits.
/// Exact prices add to both bounds, upper-bound prices only to the upper one.
IurReport ledger_total(std::span<const DecisionEvent> events, std::int64_t total_evaluations, double H,
                       std::string algorithm = "ledger");

} // namespace iurlab::iur
