#include "iurlab/algorithms/config.hpp"

#include "iurlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace iurlab::algorithms {

namespace {

std::string lowercase(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

int minimum_de_population(iur::DeVariant variant)
{
    switch (variant) {
    case iur::DeVariant::Rand1: return 4;
    case iur::DeVariant::Rand2: return 6;
    case iur::DeVariant::Best1: return 3;
    case iur::DeVariant::Best2: return 5;
    case iur::DeVariant::CurrentToBest1: return 3;
    }
    return 6;
}

} // namespace

AlgorithmId parse_algorithm_id(std::string_view name)
{
    const std::string key = lowercase(name);
    if (key == "mc") return AlgorithmId::MC;
    if (key == "lj") return AlgorithmId::LJ;
    if (key == "es") return AlgorithmId::ES;
    if (key == "cmaes" || key == "cma-es") return AlgorithmId::CMAES;
    if (key == "pso") return AlgorithmId::PSO;
    if (key == "spso") return AlgorithmId::SPSO;
    if (key == "de") return AlgorithmId::DE;
    if (key == "jade") return AlgorithmId::JADE;
    throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(AlgorithmId id)
{
    switch (id) {
    case AlgorithmId::MC: return "MC";
    case AlgorithmId::LJ: return "LJ";
    case AlgorithmId::ES: return "ES";
    case AlgorithmId::CMAES: return "CMAES";
    case AlgorithmId::PSO: return "PSO";
    case AlgorithmId::SPSO: return "SPSO";
    case AlgorithmId::DE: return "DE";
    case AlgorithmId::JADE: return "JADE";
    }
    return "?";
}

void OptimizerConfig::validate() const
{
    if (lambda && *lambda < 1)
        throw ConfigError("lambda must be >= 1");
    if (mu && *mu < 1)
        throw ConfigError("mu must be >= 1");
    if (lambda && mu && *mu > *lambda)
        throw ConfigError("mu must not exceed lambda");
    if (algorithm == AlgorithmId::ES && !lambda && mu && *mu > 30)
        throw ConfigError("mu must not exceed lambda");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw ConfigError("gamma must lie in (0, 1)");
    if (!(delta_sigma > 0.0))
        throw ConfigError("delta_sigma must be positive");
    if (!(phi1 >= 0.0) || !(phi2 >= 0.0))
        throw ConfigError("phi1 and phi2 must be non-negative");
    if (algorithm == AlgorithmId::SPSO && !(phi1 + phi2 > 4.0))
        throw ConfigError("constriction needs phi1 + phi2 > 4");
    if (!(F > 0.0))
        throw ConfigError("F must be positive");
    if (!(CR >= 0.0 && CR <= 1.0))
        throw ConfigError("CR must lie in [0, 1]");
    if (!(p > 0.0 && p <= 1.0))
        throw ConfigError("p must lie in (0, 1]");
    if (!(c > 0.0 && c <= 1.0))
        throw ConfigError("c must lie in (0, 1]");
    if (initial_sigma && !(*initial_sigma > 0.0))
        throw ConfigError("initial_sigma must be positive");
    if (swarm_size < 1)
        throw ConfigError("s must be >= 1");
    if (algorithm == AlgorithmId::DE && swarm_size < minimum_de_population(de_variant))
        throw ConfigError("DE/" + std::string(iur::to_string(de_variant)) + " needs s >= " +
                          std::to_string(minimum_de_population(de_variant)));
    if (algorithm == AlgorithmId::JADE && swarm_size < 4)
        throw ConfigError("JADE needs s >= 4");
}

std::string OptimizerConfig::label() const
{
    std::string out(to_string(algorithm));
    switch (algorithm) {
    case AlgorithmId::ES:
    case AlgorithmId::CMAES:
        if (lambda || mu)
            out += "(" + (mu ? std::to_string(*mu) : std::string("-")) + "/" +
                   (lambda ? std::to_string(*lambda) : std::string("-")) + ")";
        break;
    case AlgorithmId::DE:
        if (de_variant != iur::DeVariant::Rand1)
            out += "/" + std::string(iur::to_string(de_variant));
        break;
    default:
        break;
    }
    return out;
}

OptimizerConfig default_config(AlgorithmId id)
{
    OptimizerConfig config;
    config.algorithm = id;
    if (id == AlgorithmId::ES) {
        config.lambda = 30;
        config.mu = 15;
    }
    return config;
}

OptimizerConfig config_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ConfigError("algorithm configuration must be a JSON object");
    static const std::set<std::string> known{"algorithm", "lambda", "mu", "s", "gamma", "delta_sigma",
                                             "phi1", "phi2", "F", "CR", "p", "c", "de_variant",
                                             "initial_sigma"};
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw ConfigError("unknown configuration key '" + item.key() + "'");
    if (!j.contains("algorithm"))
        throw ConfigError("configuration needs an 'algorithm' key");

    try {
        OptimizerConfig config = default_config(parse_algorithm_id(j.at("algorithm").get<std::string>()));
        if (j.contains("lambda")) config.lambda = j.at("lambda").get<int>();
        if (j.contains("mu")) config.mu = j.at("mu").get<int>();
        if (j.contains("s")) config.swarm_size = j.at("s").get<int>();
        if (j.contains("gamma")) config.gamma = j.at("gamma").get<double>();
        if (j.contains("delta_sigma")) config.delta_sigma = j.at("delta_sigma").get<double>();
        if (j.contains("phi1")) config.phi1 = j.at("phi1").get<double>();
        if (j.contains("phi2")) config.phi2 = j.at("phi2").get<double>();
        if (j.contains("F")) config.F = j.at("F").get<double>();
        if (j.contains("CR")) config.CR = j.at("CR").get<double>();
        if (j.contains("p")) config.p = j.at("p").get<double>();
        if (j.contains("c")) config.c = j.at("c").get<double>();
        if (j.contains("de_variant"))
            config.de_variant = iur::parse_de_variant(j.at("de_variant").get<std::string>());
        if (j.contains("initial_sigma")) config.initial_sigma = j.at("initial_sigma").get<double>();
        config.validate();
        return config;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad configuration value: ") + e.what());
    } catch (const ConfigError&) {
        throw;
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

nlohmann::json to_json(const OptimizerConfig& config)
{
    nlohmann::json j{
        {"algorithm", std::string(to_string(config.algorithm))},
        {"s", config.swarm_size},
        {"gamma", config.gamma},
        {"delta_sigma", config.delta_sigma},
        {"phi1", config.phi1},
        {"phi2", config.phi2},
        {"F", config.F},
        {"CR", config.CR},
        {"p", config.p},
        {"c", config.c},
        {"de_variant", std::string(iur::to_string(config.de_variant))},
    };
    if (config.lambda) j["lambda"] = *config.lambda;
    if (config.mu) j["mu"] = *config.mu;
    if (config.initial_sigma) j["initial_sigma"] = *config.initial_sigma;
    return j;
}

} // namespace iurlab::algorithms
