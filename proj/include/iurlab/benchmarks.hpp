#pragma once

#include "iurlab/core.hpp"
#include "iurlab/random.hpp"

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

/// A 28-function suite in the style of CEC 2013 with seed-generated shifts
/// and rotations on the box [-100, 100]^d.
///
/// A rotated function is f(x) = base(R (x - o)) and an unrotated one is
/// f(x) = base(x - o); every base function has its minimum 0 at the origin.
/// A composition is sum_i w_i(x) (lambda_i g_i(x) + bias_i) where g_i is a
/// base function with its own shift o_i and rotation R_i, and
/// w_i ~ exp(-|x - o_i|^2 / (2 d sigma_i^2)) / |x - o_i|, normalized.
namespace iurlab::benchmarks {

inline constexpr int kFunctionCount = 28;
inline constexpr double kBound = 100.0;
inline constexpr double kShiftBound = 80.0;

enum class BaseFunction {
    Sphere,
    Elliptic,
    BentCigar,
    Discus,
    DifferentPowers,
    Rosenbrock,
    SchafferF7,
    Ackley,
    Weierstrass,
    Griewank,
    Rastrigin,
    NonContinuousRastrigin,
    Schwefel,
    Katsuura,
    Lunacek,
    ExpandedGriewankRosenbrock,
    ExpandedSchafferF6,
};

struct Component {
    BaseFunction base;
    bool rotated;
    double sigma;
    double lambda;
    double bias;
};

struct FunctionInfo {
    int id;
    std::string name;
    bool rotated;                    ///< basic functions only
    BaseFunction base;               ///< basic functions only
    std::vector<Component> components; ///< empty for basic functions

    bool composition() const { return !components.empty(); }
    /// Number of shift/rotation pairs the function needs.
    std::size_t data_blocks() const { return composition() ? components.size() : 1; }
};

/// Static description of f1..f28.
const FunctionInfo& function_info(int id);

// Transforms used inside the base functions.

/// Oscillation transform applied coordinate-wise.
inline double t_osz(double x)
{
    if (x == 0.0)
        return 0.0;
    const double xh = std::log(std::abs(x));
    const double c1 = x > 0.0 ? 10.0 : 5.5;
    const double c2 = x > 0.0 ? 7.9 : 3.1;
    return std::copysign(std::exp(xh + 0.049 * (std::sin(c1 * xh) + std::sin(c2 * xh))), x);
}

template <typename Derived>
Eigen::VectorXd t_osz(const Eigen::MatrixBase<Derived>& x)
{
    return x.unaryExpr([](double v) { return t_osz(v); });
}

/// Asymmetry transform: positive x_i become x_i^(1 + beta (i-1)/(d-1) sqrt(x_i)).
template <typename Derived>
Eigen::VectorXd t_asy(const Eigen::MatrixBase<Derived>& x, double beta)
{
    const Eigen::Index d = x.size();
    Eigen::VectorXd out = x;
    for (Eigen::Index i = 0; i < d; ++i)
        if (out[i] > 0.0)
            out[i] = std::pow(out[i], 1.0 + beta * static_cast<double>(i) / static_cast<double>(d - 1) *
                                                std::sqrt(out[i]));
    return out;
}

/// Diagonal of the ill-conditioning matrix: alpha^((i-1) / (2 (d-1))).
Eigen::VectorXd lambda_diagonal(Eigen::Index d, double alpha);

/// Base function at y = R (x - o). `shift_sign` (+1/-1 per coordinate of
/// the shift) is only used by Lunacek. Requires d >= 2.
double evaluate_base(BaseFunction base, const Eigen::Ref<const Eigen::VectorXd>& y,
                     const Eigen::Ref<const Eigen::VectorXd>& shift_sign);

/// Shifts and rotations of one function; one block per component.
struct FunctionData {
    std::vector<Eigen::VectorXd> shifts;
    std::vector<Eigen::MatrixXd> rotations;
};

struct SuiteData {
    Eigen::Index dimension = 0;
    std::uint64_t seed = 0;
    bool external = false;
    std::vector<FunctionData> functions; ///< index id - 1
};

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the sign of diag(R) folded in).
Eigen::MatrixXd random_rotation(Eigen::Index d, Rng& rng);
/// max |R^T R - I|
double orthogonality_error(const Eigen::MatrixXd& R);

/// Shifts uniform in [-80, 80]^d; rotations from random_rotation for
/// rotated functions and components, identity otherwise. Each function draws
/// from its own stream mix_seed(seed, id). Throws DomainError for d < 2.
SuiteData generate_suite_data(Eigen::Index d, std::uint64_t seed);

/// Throws ValidationError on shape mismatch or a rotation that is not
/// orthogonal within 1e-10.
void validate_suite_data(const SuiteData& data);

/// Text format, whitespace separated, '#' starts a comment line:
///
///     dimension <d>
///     function <id> components <k>
///     shift
///     <d numbers>
///     rotation
///     <d rows of d numbers, row-major>
///     ... k shift/rotation pairs ...
///     end
///
/// with one function block for each of f1..f28 in order.
void write_suite_data(const SuiteData& data, std::ostream& out);
/// Throws ParseError (with line number and block name) or ValidationError.
SuiteData read_suite_data(std::istream& in);
SuiteData load_external_data(const std::filesystem::path& path);

/// Value of f_id at x.
double evaluate_function(const SuiteData& data, int id, const Eigen::Ref<const Eigen::VectorXd>& x);
/// Normalized composition weights of f_id at x (f21..f28).
Eigen::VectorXd composition_weights(const SuiteData& data, int id, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Problem "f<id>" on [-100, 100]^d with optimum value 0.
ObjectiveProblem make_problem(const SuiteData& data, int id);
std::vector<ObjectiveProblem> make_suite(const SuiteData& data);
std::vector<ObjectiveProblem> make_suite(Eigen::Index d, std::uint64_t seed);

/// `{d, seed, functions: [{id, name, shifted, rotated, bias}]}`
nlohmann::json suite_manifest(const SuiteData& data);

} // namespace iurlab::benchmarks
