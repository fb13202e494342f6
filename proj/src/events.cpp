#include "iurlab/events.hpp"

#include "iurlab/errors.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <vector>

namespace iurlab {

namespace {

constexpr std::array<std::string_view, 6> kKindNames = {
    "CompareWithBest", "TopMuOfLambda",     "RankedTopMuOfLambda",
    "RingBestOfThree", "GlobalBestOfSwarm", "PbestMembership",
};

std::int64_t parse_int(std::string_view text, std::string_view token)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("bad integer in event token '" + std::string(token) + "'");
    return value;
}

double parse_double(std::string_view text, std::string_view token)
{
    std::string copy(text);
    char* end = nullptr;
    const double value = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size())
        throw ParseError("bad number in event token '" + std::string(token) + "'");
    return value;
}

} // namespace

std::string_view to_string(EventKind kind)
{
    return kKindNames[static_cast<std::size_t>(kind)];
}

DecisionEvent DecisionEvent::compare_with_best(std::int64_t history, std::int64_t generation)
{
    return {EventKind::CompareWithBest, history, 0, 0.0, generation};
}

DecisionEvent DecisionEvent::top_mu_of_lambda(std::int64_t lambda, std::int64_t mu,
                                              std::int64_t generation)
{
    return {EventKind::TopMuOfLambda, lambda, mu, 0.0, generation};
}

DecisionEvent DecisionEvent::ranked_top_mu_of_lambda(std::int64_t lambda, std::int64_t mu,
                                                     std::int64_t generation)
{
    return {EventKind::RankedTopMuOfLambda, lambda, mu, 0.0, generation};
}

DecisionEvent DecisionEvent::ring_best_of_three(std::int64_t generation)
{
    return {EventKind::RingBestOfThree, 0, 0, 0.0, generation};
}

DecisionEvent DecisionEvent::global_best_of_swarm(std::int64_t s, std::int64_t generation)
{
    return {EventKind::GlobalBestOfSwarm, s, 0, 0.0, generation};
}

DecisionEvent DecisionEvent::pbest_membership(double p, std::int64_t s, std::int64_t generation)
{
    return {EventKind::PbestMembership, s, 0, p, generation};
}

void DecisionEvent::validate() const
{
    switch (kind) {
    case EventKind::CompareWithBest:
        if (first < 1)
            throw DomainError("CompareWithBest needs history length >= 1");
        break;
    case EventKind::TopMuOfLambda:
    case EventKind::RankedTopMuOfLambda:
        if (first < 1 || second < 1 || second > first)
            throw DomainError("top-mu event needs 1 <= mu <= lambda");
        break;
    case EventKind::RingBestOfThree:
        break;
    case EventKind::GlobalBestOfSwarm:
        if (first < 1)
            throw DomainError("GlobalBestOfSwarm needs s >= 1");
        break;
    case EventKind::PbestMembership:
        if (first < 1)
            throw DomainError("PbestMembership needs s >= 1");
        if (!(fraction > 0.0 && fraction <= 1.0))
            throw DomainError("PbestMembership needs 0 < p <= 1");
        break;
    }
}

std::string DecisionEvent::token() const
{
    std::string out(to_string(kind));
    out += '(';
    switch (kind) {
    case EventKind::CompareWithBest:
    case EventKind::GlobalBestOfSwarm:
        out += std::to_string(first);
        break;
    case EventKind::TopMuOfLambda:
    case EventKind::RankedTopMuOfLambda:
        out += std::to_string(first) + ',' + std::to_string(second);
        break;
    case EventKind::RingBestOfThree:
        break;
    case EventKind::PbestMembership: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", fraction);
        out += std::string(buf) + ',' + std::to_string(first);
        break;
    }
    }
    out += ')';
    return out;
}

DecisionEvent DecisionEvent::parse(std::string_view token, std::int64_t generation)
{
    const auto open = token.find('(');
    if (open == std::string_view::npos || token.empty() || token.back() != ')')
        throw ParseError("malformed event token '" + std::string(token) + "'");
    const std::string_view name = token.substr(0, open);
    const std::string_view body = token.substr(open + 1, token.size() - open - 2);

    std::vector<std::string_view> args;
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            args.push_back(body.substr(start, comma - start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
    }

    for (std::size_t k = 0; k < kKindNames.size(); ++k) {
        if (kKindNames[k] != name)
            continue;
        DecisionEvent event;
        event.kind = static_cast<EventKind>(k);
        event.generation = generation;
        const std::size_t expected = event.kind == EventKind::RingBestOfThree ? 0
                                     : (event.kind == EventKind::CompareWithBest ||
                                        event.kind == EventKind::GlobalBestOfSwarm)
                                         ? 1
                                         : 2;
        if (args.size() != expected)
            throw ParseError("wrong argument count in event token '" + std::string(token) + "'");
        switch (event.kind) {
        case EventKind::CompareWithBest:
        case EventKind::GlobalBestOfSwarm:
            event.first = parse_int(args[0], token);
            break;
        case EventKind::TopMuOfLambda:
        case EventKind::RankedTopMuOfLambda:
            event.first = parse_int(args[0], token);
            event.second = parse_int(args[1], token);
            break;
        case EventKind::RingBestOfThree:
            break;
        case EventKind::PbestMembership:
            event.fraction = parse_double(args[0], token);
            event.first = parse_int(args[1], token);
            break;
        }
        event.validate();
        return event;
    }
    throw ParseError("unknown event kind '" + std::string(name) + "'");
}

} // namespace iurlab
