#include "iurlab/core.hpp"

#include "iurlab/errors.hpp"

#include <cmath>

namespace iurlab {

SearchSpace::SearchSpace(Eigen::VectorXd lower, Eigen::VectorXd upper)
    : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.size() < 1)
        throw DomainError("search space dimension must be >= 1");
    if (lower_.size() != upper_.size())
        throw DomainError("search space bounds differ in length");
    if (!(lower_.array() < upper_.array()).all())
        throw DomainError("search space requires lower[j] < upper[j]");
}

SearchSpace SearchSpace::cube(Eigen::Index dimension, double lower, double upper)
{
    if (dimension < 1)
        throw DomainError("search space dimension must be >= 1");
    return SearchSpace(Eigen::VectorXd::Constant(dimension, lower),
                       Eigen::VectorXd::Constant(dimension, upper));
}

ObjectiveProblem::ObjectiveProblem(std::string name, SearchSpace space, Evaluator evaluator,
                                   double optimum_value, double codomain_bits)
    : name_(std::move(name)), space_(std::move(space)), evaluator_(std::move(evaluator)),
      optimum_value_(optimum_value), codomain_bits_(32.0)
{
    if (!evaluator_)
        throw DomainError("objective problem needs an evaluator");
    set_codomain_bits(codomain_bits);
}

void ObjectiveProblem::set_codomain_bits(double bits)
{
    if (!(bits > 0.0) || !std::isfinite(bits))
        throw DomainError("codomain_bits must be a positive finite number");
    codomain_bits_ = bits;
}

} // namespace iurlab
