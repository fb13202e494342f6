#include "iurlab/iur.hpp"

#include "iurlab/entropy.hpp"
#include "iurlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace iurlab::iur {

namespace {

void check_g(std::int64_t g)
{
    if (g < 1)
        throw DomainError("g must be >= 1");
}

void check_codomain(double H)
{
    if (!(H > 0.0) || !std::isfinite(H))
        throw DomainError("codomain entropy H must be positive");
}

void check_swarm(std::int64_t s)
{
    if (s < 1)
        throw DomainError("swarm size s must be >= 1");
}

/// sum_{i=1}^{g-1} pi(i)
double pi_sum(std::int64_t g)
{
    double total = 0.0;
    for (std::int64_t i = 1; i < g; ++i)
        total += entropy::pi(i);
    return total;
}

IurReport finish(IurReport report, double numerator, double numerator_upper, double denominator)
{
    report.numerator_bits = numerator;
    report.numerator_upper_bits = numerator_upper;
    report.denominator_bits = denominator;
    report.ratio = numerator / denominator;
    report.ratio_upper = numerator_upper / denominator;
    report.exact = numerator_upper == numerator;
    return report;
}

IurReport swarm_interval(std::string name, std::int64_t g, std::int64_t s, double H, double extra_bits)
{
    check_g(g);
    check_swarm(s);
    check_codomain(H);
    IurReport report;
    report.algorithm = std::move(name);
    report.g = g;
    report.s = s;
    report.codomain_bits = H;
    const double sd = static_cast<double>(s);
    const double lower = sd * pi_sum(g);
    auto out = finish(report, lower, lower + extra_bits, sd * static_cast<double>(g) * H);
    out.exact = false;
    return out;
}

} // namespace

nlohmann::json to_json(const IurReport& report)
{
    auto opt = [](const auto& value) -> nlohmann::json {
        if (value)
            return *value;
        return nullptr;
    };
    return {
        {"algorithm", report.algorithm},
        {"g", opt(report.g)},
        {"lambda", opt(report.lambda)},
        {"mu", opt(report.mu)},
        {"s", opt(report.s)},
        {"p", opt(report.p)},
        {"H_bits", report.codomain_bits},
        {"numerator_bits", report.numerator_bits},
        {"denominator_bits", report.denominator_bits},
        {"ratio", report.ratio},
        {"ratio_upper", report.ratio_upper},
        {"exact", report.exact},
    };
}

std::int64_t elite_count(double p, std::int64_t s)
{
    if (!(p > 0.0 && p <= 1.0))
        throw DomainError("p must lie in (0, 1]");
    check_swarm(s);
    const auto count = static_cast<std::int64_t>(std::ceil(p * static_cast<double>(s) - 1e-12));
    return std::clamp<std::int64_t>(count, 1, s);
}

EventPrice price_event(const DecisionEvent& event)
{
    event.validate();
    switch (event.kind) {
    case EventKind::CompareWithBest:
        return {entropy::pi(event.first), true};
    case EventKind::TopMuOfLambda:
        return {entropy::log2_binomial(event.first, event.second), true};
    case EventKind::RankedTopMuOfLambda:
        return {entropy::log2_falling_factorial(event.first, event.second), true};
    case EventKind::RingBestOfThree:
        return {std::log2(3.0), false};
    case EventKind::GlobalBestOfSwarm:
        return {std::log2(static_cast<double>(event.first)), false};
    case EventKind::PbestMembership:
        return {entropy::log2_binomial(event.first, elite_count(event.fraction, event.first)), false};
    }
    throw DomainError("unknown event kind");
}

DeVariant parse_de_variant(std::string_view name)
{
    if (name == "rand/1")
        return DeVariant::Rand1;
    if (name == "rand/2")
        return DeVariant::Rand2;
    if (name == "best/1")
        return DeVariant::Best1;
    if (name == "best/2")
        return DeVariant::Best2;
    if (name == "current-to-best/1")
        return DeVariant::CurrentToBest1;
    throw DomainError("unknown DE variant '" + std::string(name) + "'");
}

std::string_view to_string(DeVariant variant)
{
    switch (variant) {
    case DeVariant::Rand1:
        return "rand/1";
    case DeVariant::Rand2:
        return "rand/2";
    case DeVariant::Best1:
        return "best/1";
    case DeVariant::Best2:
        return "best/2";
    case DeVariant::CurrentToBest1:
        return "current-to-best/1";
    }
    return "?";
}

IurReport iur_mc(std::int64_t evaluations, double H)
{
    check_g(evaluations);
    check_codomain(H);
    IurReport report;
    report.algorithm = "mc";
    report.g = evaluations;
    report.codomain_bits = H;
    return finish(report, 0.0, 0.0, static_cast<double>(evaluations) * H);
}

IurReport iur_lj(std::int64_t g, double H)
{
    check_g(g);
    check_codomain(H);
    IurReport report;
    report.algorithm = "lj";
    report.g = g;
    report.codomain_bits = H;
    const double numerator = pi_sum(g);
    return finish(report, numerator, numerator, static_cast<double>(g) * H);
}

namespace {

IurReport selection_ratio(std::string name, std::int64_t g, std::int64_t lambda, std::int64_t mu, double H,
                          double bits_per_generation)
{
    IurReport report;
    report.algorithm = std::move(name);
    report.g = g;
    report.lambda = lambda;
    report.mu = mu;
    report.codomain_bits = H;
    const double numerator = static_cast<double>(g - 1) * bits_per_generation;
    return finish(report, numerator, numerator,
                  static_cast<double>(g) * static_cast<double>(lambda) * H);
}

void check_selection(std::int64_t g, std::int64_t lambda, std::int64_t mu, double H)
{
    check_g(g);
    check_codomain(H);
    if (lambda < 1)
        throw DomainError("lambda must be >= 1");
    if (mu < 0 || mu > lambda)
        throw DomainError("mu must lie in [0, lambda]");
}

} // namespace

IurReport iur_es(std::int64_t g, std::int64_t lambda, std::int64_t mu, double H)
{
    check_selection(g, lambda, mu, H);
    return selection_ratio("es", g, lambda, mu, H, entropy::log2_binomial(lambda, mu));
}

IurReport iur_cmaes(std::int64_t g, std::int64_t lambda, std::int64_t mu, double H)
{
    check_selection(g, lambda, mu, H);
    return selection_ratio("cmaes", g, lambda, mu, H, entropy::log2_falling_factorial(lambda, mu));
}

IurReport iur_pso_bounds(std::int64_t g, std::int64_t s, double H)
{
    check_swarm(s);
    return swarm_interval("pso", g, s, H, static_cast<double>(g - 1) * std::log2(static_cast<double>(s)));
}

IurReport iur_spso_bounds(std::int64_t g, std::int64_t s, double H)
{
    check_swarm(s);
    return swarm_interval("spso", g, s, H,
                          static_cast<double>(s) * static_cast<double>(g - 1) * std::log2(3.0));
}

IurReport iur_de(std::int64_t g, std::int64_t s, double H, DeVariant variant)
{
    switch (variant) {
    case DeVariant::Rand1:
    case DeVariant::Rand2: {
        auto report = swarm_interval("de", g, s, H, 0.0);
        report.exact = true;
        return report;
    }
    case DeVariant::Best1:
    case DeVariant::Best2:
    case DeVariant::CurrentToBest1: {
        auto report = iur_pso_bounds(g, s, H);
        report.algorithm = "de";
        return report;
    }
    }
    throw DomainError("unknown DE variant");
}

IurReport iur_jade_bounds(std::int64_t g, std::int64_t s, double p, double H)
{
    const std::int64_t elite = elite_count(p, s);
    auto report = swarm_interval("jade", g, s, H,
                                 static_cast<double>(g - 1) * entropy::log2_binomial(s, elite));
    report.p = p;
    return report;
}

double comparison_upper_bound(std::int64_t m, double H)
{
    if (m < 1)
        throw DomainError("comparison bound needs m >= 1 evaluations");
    check_codomain(H);
    return std::log2(static_cast<double>(m)) / H;
}

IurReport ledger_total(std::span<const DecisionEvent> events, std::int64_t total_evaluations, double H,
                       std::string algorithm)
{
    if (total_evaluations < 1)
        throw DomainError("ledger needs at least one evaluation");
    check_codomain(H);
    double exact_bits = 0.0;
    double all_bits = 0.0;
    bool exact = true;
    for (const auto& event : events) {
        const EventPrice price = price_event(event);
        all_bits += price.bits;
        if (price.exact)
            exact_bits += price.bits;
        else
            exact = false;
    }
    IurReport report;
    report.algorithm = std::move(algorithm);
    report.codomain_bits = H;
    auto out = finish(report, exact_bits, all_bits, static_cast<double>(total_evaluations) * H);
    out.exact = exact;
    return out;
}

} // namespace iurlab::iur
