#include "iurlab/experiments.hpp"

#include "iurlab/algorithms/optimizer.hpp"
#include "iurlab/entropy.hpp"
#include "iurlab/errors.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

namespace iurlab::experiments {

namespace {

std::ofstream open_output(const std::filesystem::path& path)
{
    std::error_code ec;
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

/// Runs task(0..count-1) on `jobs` threads; the first exception is rethrown.
template <typename Task>
void parallel_for(std::size_t count, int jobs, Task&& task)
{
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t t = next++; t < count; t = next++) {
            try {
                task(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    const auto workers = std::min(static_cast<std::size_t>(std::max(1, jobs)), count);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& thread : pool)
            thread.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer)
{
    std::ofstream out = open_output(path);
    writer(out);
    finish(out, path);
}

} // namespace

void ExperimentPlan::validate() const
{
    if (dimension < 2)
        throw DomainError("dimension must be >= 2");
    if (budget_multiplier < 1)
        throw DomainError("budget multiplier must be >= 1");
    if (runs < 2)
        throw DomainError("runs must be >= 2 for the statistical tests");
    if (jobs < 1)
        throw DomainError("jobs must be >= 1");
    if (functions.empty())
        throw DomainError("at least one function is needed");
    for (int id : functions)
        if (id < 1 || id > benchmarks::kFunctionCount)
            throw DomainError("function ids must lie in 1..28");
}

nlohmann::json to_json(const ExperimentPlan& plan)
{
    nlohmann::json j{
        {"dim", plan.dimension},
        {"budget_multiplier", plan.budget_multiplier},
        {"budget", plan.budget()},
        {"runs", plan.runs},
        {"seed", plan.base_seed},
        {"suite_seed", plan.suite_seed},
        {"functions", plan.functions},
        {"jobs", plan.jobs},
    };
    if (plan.suite_data)
        j["suite_data"] = plan.suite_data->string();
    return j;
}

ExperimentPlan plan_from_json(const nlohmann::json& j)
{
    ExperimentPlan plan;
    try {
        if (j.contains("dim")) plan.dimension = j.at("dim").get<Eigen::Index>();
        if (j.contains("budget_multiplier")) plan.budget_multiplier = j.at("budget_multiplier").get<std::int64_t>();
        if (j.contains("runs")) plan.runs = j.at("runs").get<int>();
        if (j.contains("seed")) plan.base_seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("suite_seed")) plan.suite_seed = j.at("suite_seed").get<std::uint64_t>();
        if (j.contains("functions")) plan.functions = j.at("functions").get<std::vector<int>>();
        if (j.contains("jobs")) plan.jobs = j.at("jobs").get<int>();
        if (j.contains("suite_data")) plan.suite_data = j.at("suite_data").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad plan value: ") + e.what());
    }
    plan.validate();
    return plan;
}

benchmarks::SuiteData suite_for(const ExperimentPlan& plan)
{
    if (plan.suite_data) {
        benchmarks::SuiteData data = benchmarks::load_external_data(*plan.suite_data);
        if (data.dimension != plan.dimension)
            throw DomainError("suite data has dimension " + std::to_string(data.dimension) + ", plan has " +
                              std::to_string(plan.dimension));
        return data;
    }
    return benchmarks::generate_suite_data(plan.dimension, plan.suite_seed);
}

std::vector<RunTrace> run_cell(const algorithms::OptimizerConfig& config, const ObjectiveProblem& problem,
                               const ExperimentPlan& plan)
{
    plan.validate();
    std::vector<RunTrace> traces(static_cast<std::size_t>(plan.runs));
    parallel_for(traces.size(), plan.jobs, [&](std::size_t r) {
        traces[r] = algorithms::run(config, problem, plan.budget(), plan.base_seed + r);
    });
    return traces;
}

Eigen::MatrixXd ErrorGrid::mean_errors() const
{
    Eigen::MatrixXd out(static_cast<Eigen::Index>(functions.size()), static_cast<Eigen::Index>(configs.size()));
    for (std::size_t f = 0; f < functions.size(); ++f)
        for (std::size_t c = 0; c < configs.size(); ++c) {
            const auto& runs = errors[f][c];
            double sum = 0.0;
            for (double e : runs)
                sum += e;
            out(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(c)) = sum / static_cast<double>(runs.size());
        }
    return out;
}

ErrorGrid run_grid(const std::vector<algorithms::OptimizerConfig>& configs, const ExperimentPlan& plan)
{
    plan.validate();
    if (configs.empty())
        throw DomainError("at least one configuration is needed");
    for (const auto& config : configs)
        config.validate();

    const benchmarks::SuiteData data = suite_for(plan);
    std::vector<ObjectiveProblem> problems;
    ErrorGrid grid;
    for (int id : plan.functions) {
        problems.push_back(benchmarks::make_problem(data, id));
        grid.functions.push_back("f" + std::to_string(id));
    }
    for (const auto& config : configs)
        grid.configs.push_back(config.label());

    const std::size_t F = problems.size();
    const std::size_t C = configs.size();
    const auto R = static_cast<std::size_t>(plan.runs);
    grid.errors.assign(F, std::vector<std::vector<double>>(C, std::vector<double>(R, 0.0)));

    parallel_for(F * C * R, plan.jobs, [&](std::size_t t) {
        const std::size_t f = t / (C * R);
        const std::size_t c = (t / R) % C;
        const std::size_t r = t % R;
        grid.errors[f][c][r] = algorithms::run(configs[c], problems[f], plan.budget(), plan.base_seed + r).final_error();
    });
    return grid;
}

PairComparison compare_pair(const ErrorGrid& grid, std::size_t first, std::size_t second)
{
    if (first >= grid.configs.size() || second >= grid.configs.size())
        throw DomainError("pair index out of range");
    PairComparison pair;
    pair.first = first;
    pair.second = second;
    pair.label = grid.configs[first] + "_vs_" + grid.configs[second];
    for (std::size_t f = 0; f < grid.functions.size(); ++f) {
        const auto result = stats::wilcoxon_rank_sum(grid.errors[f][first], grid.errors[f][second]);
        pair.p.push_back(result.p);
        int outcome = 0;
        if (result.p < stats::kSignificance && result.rank_sum != result.expected)
            outcome = result.a_lower() ? 1 : -1;
        pair.outcome.push_back(outcome);
        pair.wins += outcome > 0;
        pair.losses += outcome < 0;
    }
    return pair;
}

Comparison compare_algorithms(const std::vector<algorithms::OptimizerConfig>& configs, const ExperimentPlan& plan,
                              std::vector<std::pair<std::size_t, std::size_t>> pairs)
{
    if (configs.size() < 2)
        throw DomainError("comparison needs at least 2 configurations");
    Comparison out;
    out.grid = run_grid(configs, plan);
    out.table = stats::average_rankings(out.grid.mean_errors(), out.grid.functions, out.grid.configs);
    if (pairs.empty())
        for (std::size_t c = 1; c < configs.size(); ++c)
            pairs.emplace_back(c, c - 1);
    for (const auto& [first, second] : pairs)
        out.pairs.push_back(compare_pair(out.grid, first, second));
    return out;
}

Sweep sweep_mu_lambda(int lambda, const std::vector<int>& mus, const ExperimentPlan& plan,
                      algorithms::OptimizerConfig base)
{
    if (lambda < 1)
        throw DomainError("lambda must be >= 1");
    if (mus.size() < 2)
        throw DomainError("sweep needs at least 2 mu values");
    std::vector<algorithms::OptimizerConfig> configs;
    for (int mu : mus) {
        if (mu < 1 || mu > lambda)
            throw DomainError("mu values must lie in 1..lambda");
        algorithms::OptimizerConfig config = base;
        config.algorithm = algorithms::AlgorithmId::ES;
        config.lambda = lambda;
        config.mu = mu;
        configs.push_back(config);
    }

    Sweep sweep;
    sweep.lambda = lambda;
    sweep.grid = run_grid(configs, plan);
    sweep.table = stats::average_rankings(sweep.grid.mean_errors(), sweep.grid.functions, sweep.grid.configs);

    std::vector<double> rankings;
    std::vector<double> curve;
    for (std::size_t k = 0; k < mus.size(); ++k) {
        CurvePoint point;
        point.mu = mus[k];
        point.mu_over_lambda = static_cast<double>(mus[k]) / lambda;
        point.average_ranking = sweep.table.average[static_cast<Eigen::Index>(k)];
        point.neg_log_binom = -entropy::log2_binomial(lambda, mus[k]) / lambda;
        rankings.push_back(point.average_ranking);
        curve.push_back(point.neg_log_binom);
        sweep.curve.push_back(point);
    }
    double shift = 0.0;
    for (std::size_t k = 0; k < mus.size(); ++k)
        shift += rankings[k] - curve[k];
    shift /= static_cast<double>(mus.size());
    for (auto& point : sweep.curve)
        point.translated = point.neg_log_binom + shift;
    sweep.spearman = stats::spearman(rankings, curve);
    return sweep;
}

std::string format_value(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_mean_errors_csv(const stats::RankTable& table, std::ostream& out)
{
    out << "function";
    for (const auto& c : table.configs)
        out << "," << c;
    out << "\n";
    for (std::size_t f = 0; f < table.functions.size(); ++f) {
        out << table.functions[f];
        for (Eigen::Index c = 0; c < table.mean_errors.cols(); ++c)
            out << "," << format_value(table.mean_errors(static_cast<Eigen::Index>(f), c));
        out << "\n";
    }
}

void write_rankings_csv(const stats::RankTable& table, std::ostream& out)
{
    out << "function";
    for (const auto& c : table.configs)
        out << "," << c;
    out << "\n";
    for (std::size_t f = 0; f < table.functions.size(); ++f) {
        out << table.functions[f];
        for (Eigen::Index c = 0; c < table.ranks.cols(); ++c)
            out << "," << format_value(table.ranks(static_cast<Eigen::Index>(f), c));
        out << "\n";
    }
    out << "average";
    for (Eigen::Index c = 0; c < table.average.size(); ++c)
        out << "," << format_value(table.average[c]);
    out << "\n";
}

void write_wilcoxon_csv(const ErrorGrid& grid, const std::vector<PairComparison>& pairs, std::ostream& out)
{
    out << "pair,function,p,significant\n";
    for (const auto& pair : pairs)
        for (std::size_t f = 0; f < grid.functions.size(); ++f)
            out << pair.label << "," << grid.functions[f] << "," << format_value(pair.p[f]) << ","
                << (pair.p[f] < stats::kSignificance ? 1 : 0) << "\n";
}

void write_pairs_csv(const std::vector<PairComparison>& pairs, std::ostream& out)
{
    out << "pair,wins,losses\n";
    for (const auto& pair : pairs)
        out << pair.label << "," << pair.wins << "," << pair.losses << "\n";
}

void write_fig2_curve_csv(const Sweep& sweep, std::ostream& out)
{
    out << "mu_over_lambda,avg_ranking,translated_neg_log_binom\n";
    for (const auto& point : sweep.curve)
        out << format_value(point.mu_over_lambda) << "," << format_value(point.average_ranking) << ","
            << format_value(point.translated) << "\n";
}

void write_comparison(const Comparison& comparison, const std::filesystem::path& dir)
{
    write_file(dir / "mean_errors.csv", [&](std::ostream& out) { write_mean_errors_csv(comparison.table, out); });
    write_file(dir / "rankings.csv", [&](std::ostream& out) { write_rankings_csv(comparison.table, out); });
    write_file(dir / "wilcoxon.csv",
               [&](std::ostream& out) { write_wilcoxon_csv(comparison.grid, comparison.pairs, out); });
    write_file(dir / "pairs.csv", [&](std::ostream& out) { write_pairs_csv(comparison.pairs, out); });
}

void write_sweep(const Sweep& sweep, const std::filesystem::path& dir)
{
    write_file(dir / "mean_errors.csv", [&](std::ostream& out) { write_mean_errors_csv(sweep.table, out); });
    write_file(dir / "rankings.csv", [&](std::ostream& out) { write_rankings_csv(sweep.table, out); });
    write_file(dir / "fig2_curve.csv", [&](std::ostream& out) { write_fig2_curve_csv(sweep, out); });
}

} // namespace iurlab::experiments
