#include "iurlab/benchmarks.hpp"

#include "iurlab/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <memory>
#include <numbers>

namespace iurlab::benchmarks {

namespace {

using B = BaseFunction;
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
// Coordinate at which z sin(sqrt|z|) peaks.
constexpr double kSchwefelPeak = 4.209687462275036e+002;

std::vector<FunctionInfo> build_table()
{
    auto basic = [](int id, std::string name, bool rotated, B base) {
        return FunctionInfo{id, std::move(name), rotated, base, {}};
    };
    auto composite = [](int id, std::string name, std::vector<Component> components) {
        const bool rotated =
            std::any_of(components.begin(), components.end(), [](const Component& c) { return c.rotated; });
        return FunctionInfo{id, std::move(name), rotated, B::Sphere, std::move(components)};
    };
    return {
        basic(1, "sphere", false, B::Sphere),
        basic(2, "rotated_high_conditioned_elliptic", true, B::Elliptic),
        basic(3, "rotated_bent_cigar", true, B::BentCigar),
        basic(4, "rotated_discus", true, B::Discus),
        basic(5, "different_powers", false, B::DifferentPowers),
        basic(6, "rotated_rosenbrock", true, B::Rosenbrock),
        basic(7, "rotated_schaffers_f7", true, B::SchafferF7),
        basic(8, "rotated_ackley", true, B::Ackley),
        basic(9, "rotated_weierstrass", true, B::Weierstrass),
        basic(10, "rotated_griewank", true, B::Griewank),
        basic(11, "rastrigin", false, B::Rastrigin),
        basic(12, "rotated_rastrigin", true, B::Rastrigin),
        basic(13, "non_continuous_rotated_rastrigin", true, B::NonContinuousRastrigin),
        basic(14, "schwefel", false, B::Schwefel),
        basic(15, "rotated_schwefel", true, B::Schwefel),
        basic(16, "rotated_katsuura", true, B::Katsuura),
        basic(17, "lunacek_bi_rastrigin", false, B::Lunacek),
        basic(18, "rotated_lunacek_bi_rastrigin", true, B::Lunacek),
        basic(19, "expanded_griewank_plus_rosenbrock", false, B::ExpandedGriewankRosenbrock),
        basic(20, "expanded_schaffer_f6", false, B::ExpandedSchafferF6),
        composite(21, "composition_1",
                  {{B::Rosenbrock, true, 10, 1, 0},
                   {B::DifferentPowers, true, 20, 1e-6, 100},
                   {B::BentCigar, true, 30, 1e-26, 200},
                   {B::Discus, true, 40, 1e-6, 300},
                   {B::Elliptic, true, 50, 0.1, 400}}),
        composite(22, "composition_2",
                  {{B::Schwefel, false, 20, 1, 0}, {B::Schwefel, false, 20, 1, 100}, {B::Schwefel, false, 20, 1, 200}}),
        composite(23, "composition_3",
                  {{B::Schwefel, true, 20, 1, 0}, {B::Schwefel, true, 20, 1, 100}, {B::Schwefel, true, 20, 1, 200}}),
        composite(24, "composition_4",
                  {{B::Schwefel, true, 20, 0.25, 0}, {B::Rastrigin, true, 20, 1, 100}, {B::Weierstrass, true, 20, 2.5, 200}}),
        composite(25, "composition_5",
                  {{B::Schwefel, true, 10, 0.25, 0}, {B::Rastrigin, true, 30, 1, 100}, {B::Weierstrass, true, 50, 2.5, 200}}),
        composite(26, "composition_6",
                  {{B::Schwefel, true, 10, 0.25, 0},
                   {B::Rastrigin, true, 10, 1, 100},
                   {B::Elliptic, true, 10, 1e-7, 200},
                   {B::Weierstrass, true, 10, 2.5, 300},
                   {B::Griewank, true, 10, 10, 400}}),
        composite(27, "composition_7",
                  {{B::Griewank, true, 10, 100, 0},
                   {B::Rastrigin, true, 10, 10, 100},
                   {B::Schwefel, true, 10, 2.5, 200},
                   {B::Weierstrass, true, 20, 25, 300},
                   {B::Sphere, true, 20, 0.1, 400}}),
        composite(28, "composition_8",
                  {{B::ExpandedGriewankRosenbrock, true, 10, 2.5, 0},
                   {B::SchafferF7, true, 20, 2.5e-3, 100},
                   {B::Schwefel, true, 30, 2.5, 200},
                   {B::ExpandedSchafferF6, true, 40, 5e-4, 300},
                   {B::Sphere, true, 50, 0.1, 400}}),
    };
}

double sphere(const Eigen::Ref<const Eigen::VectorXd>& z)
{
    return z.squaredNorm();
}

double elliptic(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = t_osz(y);
    const auto d = static_cast<double>(z.size());
    double sum = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i)
        sum += std::pow(10.0, 6.0 * static_cast<double>(i) / (d - 1.0)) * z[i] * z[i];
    return sum;
}

double bent_cigar(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = t_asy(y, 0.5);
    return z[0] * z[0] + 1e6 * z.tail(z.size() - 1).squaredNorm();
}

double discus(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = t_osz(y);
    return 1e6 * z[0] * z[0] + z.tail(z.size() - 1).squaredNorm();
}

double different_powers(const Eigen::Ref<const Eigen::VectorXd>& z)
{
    const auto d = static_cast<double>(z.size());
    double sum = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i)
        sum += std::pow(std::abs(z[i]), 2.0 + 4.0 * static_cast<double>(i) / (d - 1.0));
    return std::sqrt(sum);
}

double rosenbrock_sum(const Eigen::Ref<const Eigen::VectorXd>& z)
{
    double sum = 0.0;
    for (Eigen::Index i = 0; i + 1 < z.size(); ++i) {
        const double a = z[i] * z[i] - z[i + 1];
        const double b = z[i] - 1.0;
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double schaffer_f7(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = lambda_diagonal(y.size(), 10.0).cwiseProduct(t_asy(y, 0.5));
    double sum = 0.0;
    for (Eigen::Index i = 0; i + 1 < z.size(); ++i) {
        const double s = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
        const double root = std::sqrt(s);
        const double wave = std::sin(50.0 * std::pow(s, 0.2));
        sum += root + root * wave * wave;
    }
    sum /= static_cast<double>(z.size() - 1);
    return sum * sum;
}

double ackley(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = lambda_diagonal(y.size(), 10.0).cwiseProduct(t_asy(y, 0.5));
    const auto d = static_cast<double>(z.size());
    const double mean_sq = z.squaredNorm() / d;
    const double mean_cos = z.unaryExpr([](double v) { return std::cos(2.0 * kPi * v); }).sum() / d;
    return -20.0 * std::exp(-0.2 * std::sqrt(mean_sq)) - std::exp(mean_cos) + 20.0 + kE;
}

double weierstrass(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    constexpr double a = 0.5;
    constexpr double b = 3.0;
    constexpr int k_max = 20;
    const Eigen::VectorXd z = lambda_diagonal(y.size(), 10.0).cwiseProduct(t_asy(0.5 * y / 100.0, 0.5));
    double sum = 0.0;
    double offset = 0.0;
    double ak = 1.0;
    double bk = 1.0;
    for (int k = 0; k <= k_max; ++k) {
        const double w = 2.0 * kPi * bk;
        for (Eigen::Index i = 0; i < z.size(); ++i)
            sum += ak * std::cos(w * (z[i] + 0.5));
        offset += ak * std::cos(w * 0.5);
        ak *= a;
        bk *= b;
    }
    return sum - static_cast<double>(z.size()) * offset;
}

double griewank(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = lambda_diagonal(y.size(), 100.0).cwiseProduct(600.0 * y / 100.0);
    double product = 1.0;
    for (Eigen::Index i = 0; i < z.size(); ++i)
        product *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
    return z.squaredNorm() / 4000.0 - product + 1.0;
}

double rastrigin_sum(const Eigen::Ref<const Eigen::VectorXd>& z)
{
    double sum = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i)
        sum += z[i] * z[i] - 10.0 * std::cos(2.0 * kPi * z[i]) + 10.0;
    return sum;
}

double rastrigin(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = lambda_diagonal(y.size(), 10.0).cwiseProduct(t_asy(t_osz(5.12 * y / 100.0), 0.2));
    return rastrigin_sum(z);
}

double non_continuous_rastrigin(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    Eigen::VectorXd stepped = 5.12 * y / 100.0;
    for (Eigen::Index i = 0; i < stepped.size(); ++i)
        if (std::abs(stepped[i]) > 0.5)
            stepped[i] = std::round(2.0 * stepped[i]) / 2.0;
    const Eigen::VectorXd z = lambda_diagonal(y.size(), 10.0).cwiseProduct(t_asy(t_osz(stepped), 0.2));
    return rastrigin_sum(z);
}

double schwefel_term(double z, double d)
{
    if (std::abs(z) <= 500.0)
        return z * std::sin(std::sqrt(std::abs(z)));
    if (z > 500.0) {
        const double folded = 500.0 - std::fmod(z, 500.0);
        return folded * std::sin(std::sqrt(std::abs(folded))) - (z - 500.0) * (z - 500.0) / (10000.0 * d);
    }
    const double folded = std::fmod(std::abs(z), 500.0) - 500.0;
    return folded * std::sin(std::sqrt(std::abs(folded))) - (z + 500.0) * (z + 500.0) / (10000.0 * d);
}

double schwefel(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const auto d = static_cast<double>(y.size());
    const Eigen::VectorXd z =
        lambda_diagonal(y.size(), 10.0).cwiseProduct(1000.0 * y / 100.0).array() + kSchwefelPeak;
    static const double peak = schwefel_term(kSchwefelPeak, 1.0);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i)
        sum += schwefel_term(z[i], d);
    return peak * d - sum;
}

double katsuura(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = lambda_diagonal(y.size(), 100.0).cwiseProduct(5.0 * y / 100.0);
    const auto d = static_cast<double>(z.size());
    const double exponent = 10.0 / std::pow(d, 1.2);
    double product = 1.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        double sum = 0.0;
        double scale = 2.0;
        for (int j = 1; j <= 32; ++j, scale *= 2.0) {
            const double v = scale * z[i];
            sum += std::abs(v - std::round(v)) / scale;
        }
        product *= std::pow(1.0 + static_cast<double>(i + 1) * sum, exponent);
    }
    return 10.0 / (d * d) * product - 10.0 / (d * d);
}

double lunacek(const Eigen::Ref<const Eigen::VectorXd>& y, const Eigen::Ref<const Eigen::VectorXd>& shift_sign)
{
    constexpr double mu0 = 2.5;
    constexpr double depth = 1.0;
    const auto d = static_cast<double>(y.size());
    const double s = 1.0 - 1.0 / (2.0 * std::sqrt(d + 20.0) - 8.2);
    const double mu1 = -std::sqrt((mu0 * mu0 - depth) / s);
    const Eigen::VectorXd xh = (2.0 * shift_sign.cwiseProduct(10.0 * y / 100.0)).array() + mu0;
    const double sphere0 = (xh.array() - mu0).square().sum();
    const double sphere1 = (xh.array() - mu1).square().sum();
    const Eigen::VectorXd z = lambda_diagonal(y.size(), 100.0).cwiseProduct((xh.array() - mu0).matrix());
    const double ripple = z.unaryExpr([](double v) { return std::cos(2.0 * kPi * v); }).sum();
    return std::min(sphere0, depth * d + s * sphere1) + 10.0 * (d - ripple);
}

double expanded_griewank_rosenbrock(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = (5.0 * y / 100.0).array() + 1.0;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double next = z[(i + 1) % z.size()];
        const double a = z[i] * z[i] - next;
        const double b = z[i] - 1.0;
        const double r = 100.0 * a * a + b * b;
        sum += r * r / 4000.0 - std::cos(r) + 1.0;
    }
    return sum;
}

double expanded_schaffer_f6(const Eigen::Ref<const Eigen::VectorXd>& y)
{
    const Eigen::VectorXd z = t_asy(y, 0.5);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double next = z[(i + 1) % z.size()];
        const double r2 = z[i] * z[i] + next * next;
        const double wave = std::sin(std::sqrt(r2));
        const double damp = 1.0 + 0.001 * r2;
        sum += 0.5 + (wave * wave - 0.5) / (damp * damp);
    }
    return sum;
}

/// y = R (x - o) for rotated blocks, x - o otherwise.
Eigen::VectorXd local_coordinates(const FunctionData& data, std::size_t block, bool rotated,
                                  const Eigen::Ref<const Eigen::VectorXd>& x)
{
    if (rotated)
        return data.rotations[block] * (x - data.shifts[block]);
    return x - data.shifts[block];
}

Eigen::VectorXd shift_sign(const Eigen::VectorXd& shift)
{
    return shift.unaryExpr([](double v) { return v < 0.0 ? -1.0 : 1.0; });
}

void check_id(const SuiteData& data, int id)
{
    if (id < 1 || id > kFunctionCount)
        throw DomainError("function id must lie in 1..28");
    if (data.functions.size() != static_cast<std::size_t>(kFunctionCount))
        throw ValidationError("suite data must hold 28 functions");
}

void check_point(const SuiteData& data, const Eigen::Ref<const Eigen::VectorXd>& x)
{
    if (x.size() != data.dimension)
        throw DomainError("point has dimension " + std::to_string(x.size()) + ", suite has " +
                          std::to_string(data.dimension));
}

/// Log of the unnormalized weights; +inf marks a component whose shift is hit exactly.
Eigen::VectorXd log_weights(const FunctionInfo& info, const FunctionData& data,
                            const Eigen::Ref<const Eigen::VectorXd>& x)
{
    const auto d = static_cast<double>(x.size());
    Eigen::VectorXd out(static_cast<Eigen::Index>(info.components.size()));
    for (std::size_t i = 0; i < info.components.size(); ++i) {
        const double dist2 = (x - data.shifts[i]).squaredNorm();
        const double sigma = info.components[i].sigma;
        out[static_cast<Eigen::Index>(i)] = dist2 == 0.0 ? std::numeric_limits<double>::infinity()
                                                         : -0.5 * std::log(dist2) - dist2 / (2.0 * d * sigma * sigma);
    }
    return out;
}

Eigen::VectorXd normalized_weights(const Eigen::VectorXd& logw)
{
    Eigen::VectorXd w(logw.size());
    Eigen::Index hit = -1;
    for (Eigen::Index i = 0; i < logw.size(); ++i)
        if (std::isinf(logw[i]) && logw[i] > 0.0) {
            hit = i;
            break;
        }
    if (hit >= 0) {
        w.setZero();
        w[hit] = 1.0;
        return w;
    }
    const double top = logw.maxCoeff();
    w = (logw.array() - top).exp();
    return w / w.sum();
}

} // namespace

const FunctionInfo& function_info(int id)
{
    static const std::vector<FunctionInfo> table = build_table();
    if (id < 1 || id > kFunctionCount)
        throw DomainError("function id must lie in 1..28");
    return table[static_cast<std::size_t>(id - 1)];
}

Eigen::VectorXd lambda_diagonal(Eigen::Index d, double alpha)
{
    Eigen::VectorXd out(d);
    for (Eigen::Index i = 0; i < d; ++i)
        out[i] = std::pow(alpha, static_cast<double>(i) / (2.0 * static_cast<double>(d - 1)));
    return out;
}

double evaluate_base(BaseFunction base, const Eigen::Ref<const Eigen::VectorXd>& y,
                     const Eigen::Ref<const Eigen::VectorXd>& sign)
{
    if (y.size() < 2)
        throw DomainError("benchmark functions need d >= 2");
    switch (base) {
    case B::Sphere: return sphere(y);
    case B::Elliptic: return elliptic(y);
    case B::BentCigar: return bent_cigar(y);
    case B::Discus: return discus(y);
    case B::DifferentPowers: return different_powers(y);
    case B::Rosenbrock: return rosenbrock_sum(((2.048 * y / 100.0).array() + 1.0).matrix());
    case B::SchafferF7: return schaffer_f7(y);
    case B::Ackley: return ackley(y);
    case B::Weierstrass: return weierstrass(y);
    case B::Griewank: return griewank(y);
    case B::Rastrigin: return rastrigin(y);
    case B::NonContinuousRastrigin: return non_continuous_rastrigin(y);
    case B::Schwefel: return schwefel(y);
    case B::Katsuura: return katsuura(y);
    case B::Lunacek: return lunacek(y, sign);
    case B::ExpandedGriewankRosenbrock: return expanded_griewank_rosenbrock(y);
    case B::ExpandedSchafferF6: return expanded_schaffer_f6(y);
    }
    throw DomainError("unknown base function");
}

double evaluate_function(const SuiteData& data, int id, const Eigen::Ref<const Eigen::VectorXd>& x)
{
    check_id(data, id);
    check_point(data, x);
    const FunctionInfo& info = function_info(id);
    const FunctionData& fd = data.functions[static_cast<std::size_t>(id - 1)];
    if (!info.composition()) {
        const Eigen::VectorXd y = local_coordinates(fd, 0, info.rotated, x);
        if (info.base == B::Lunacek)
            return evaluate_base(info.base, y, shift_sign(fd.shifts[0]));
        return evaluate_base(info.base, y, Eigen::VectorXd::Ones(x.size()));
    }
    const Eigen::VectorXd w = normalized_weights(log_weights(info, fd, x));
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(x.size());
    double total = 0.0;
    for (std::size_t i = 0; i < info.components.size(); ++i) {
        const double wi = w[static_cast<Eigen::Index>(i)];
        if (wi == 0.0)
            continue;
        const Component& c = info.components[i];
        const Eigen::VectorXd y = local_coordinates(fd, i, c.rotated, x);
        total += wi * (c.lambda * evaluate_base(c.base, y, ones) + c.bias);
    }
    return total;
}

Eigen::VectorXd composition_weights(const SuiteData& data, int id, const Eigen::Ref<const Eigen::VectorXd>& x)
{
    check_id(data, id);
    check_point(data, x);
    const FunctionInfo& info = function_info(id);
    if (!info.composition())
        throw DomainError("f" + std::to_string(id) + " is not a composition function");
    return normalized_weights(log_weights(info, data.functions[static_cast<std::size_t>(id - 1)], x));
}

ObjectiveProblem make_problem(const SuiteData& data, int id)
{
    check_id(data, id);
    auto shared = std::make_shared<const SuiteData>(data);
    return ObjectiveProblem(
        "f" + std::to_string(id), SearchSpace::cube(data.dimension, -kBound, kBound),
        [shared, id](const Eigen::Ref<const Eigen::VectorXd>& x) { return evaluate_function(*shared, id, x); }, 0.0);
}

std::vector<ObjectiveProblem> make_suite(const SuiteData& data)
{
    validate_suite_data(data);
    auto shared = std::make_shared<const SuiteData>(data);
    std::vector<ObjectiveProblem> out;
    for (int id = 1; id <= kFunctionCount; ++id)
        out.emplace_back(
            "f" + std::to_string(id), SearchSpace::cube(data.dimension, -kBound, kBound),
            [shared, id](const Eigen::Ref<const Eigen::VectorXd>& x) { return evaluate_function(*shared, id, x); },
            0.0);
    return out;
}

std::vector<ObjectiveProblem> make_suite(Eigen::Index d, std::uint64_t seed)
{
    return make_suite(generate_suite_data(d, seed));
}

nlohmann::json suite_manifest(const SuiteData& data)
{
    nlohmann::json functions = nlohmann::json::array();
    for (int id = 1; id <= kFunctionCount; ++id) {
        const FunctionInfo& info = function_info(id);
        functions.push_back({{"id", id},
                             {"name", info.name},
                             {"shifted", true},
                             {"rotated", info.rotated},
                             {"bias", 0.0}});
    }
    nlohmann::json j{{"d", data.dimension}, {"functions", functions}};
    if (data.external)
        j["seed"] = nullptr;
    else
        j["seed"] = data.seed;
    return j;
}

} // namespace iurlab::benchmarks
