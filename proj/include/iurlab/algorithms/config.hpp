#pragma once

#include "iurlab/iur.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace iurlab::algorithms {

enum class AlgorithmId { MC, LJ, ES, CMAES, PSO, SPSO, DE, JADE };

/// Case-insensitive; accepts "cma-es" for CMAES. Throws ConfigError.
AlgorithmId parse_algorithm_id(std::string_view name);
std::string_view to_string(AlgorithmId id);

/// Parameters of every optimizer. Unused fields are ignored by the others.
///
/// JSON keys: algorithm, lambda, mu, s, gamma, delta_sigma, phi1, phi2, F,
/// CR, p, c, de_variant, initial_sigma. Only `algorithm` is required.
struct OptimizerConfig {
    AlgorithmId algorithm = AlgorithmId::MC;
    /// ES: 30 / 15. CMA-ES: 4 + floor(3 ln d) / lambda / 2.
    std::optional<int> lambda;
    std::optional<int> mu;
    int swarm_size = 40; ///< s, for PSO, SPSO, DE and JADE
    double gamma = 0.99;
    double delta_sigma = 0.5;
    double phi1 = 2.05;
    double phi2 = 2.05;
    double F = 0.5;
    double CR = 0.9;
    double p = 0.05;
    double c = 0.1;
    iur::DeVariant de_variant = iur::DeVariant::Rand1;
    /// CMA-ES and ES initial step size; default is a quarter of the mean box width.
    std::optional<double> initial_sigma;

    /// Throws ConfigError.
    void validate() const;
    /// Short column label, e.g. "CMAES", "ES(15/30)", "DE/best/1".
    std::string label() const;
};

OptimizerConfig default_config(AlgorithmId id);
OptimizerConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OptimizerConfig& config);

} // namespace iurlab::algorithms
