// iurlab command-line front end.
//
// Exit codes: 0 success, 1 verification found violations, 2 usage,
// 3 resource/budget, 4 I/O.

#include "iurlab/algorithms/optimizer.hpp"
#include "iurlab/benchmarks.hpp"
#include "iurlab/entropy.hpp"
#include "iurlab/errors.hpp"
#include "iurlab/exact.hpp"
#include "iurlab/experiments.hpp"
#include "iurlab/iur.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace iurlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format(const char* fmt, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t");
    const auto b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

long parse_long(const std::string& token)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(token, &used);
    } catch (const std::exception&) {
        throw UsageError("'" + token + "' is not an integer");
    }
    if (used != token.size())
        throw UsageError("'" + token + "' is not an integer");
    return v;
}

/// "1,2,5", "1-12", "f1,f3" and "1,2,...,10".
std::vector<int> parse_int_list(const std::string& text, bool allow_f_prefix)
{
    std::vector<std::string> tokens;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        tokens.push_back(trim(item));

    std::vector<int> out;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        std::string token = tokens[k];
        if (token == "...") {
            if (out.size() < 2 || k + 1 >= tokens.size())
                throw UsageError("'...' needs two values before it and one after it");
            const int step = out[out.size() - 1] - out[out.size() - 2];
            std::string last_token = tokens[k + 1];
            if (allow_f_prefix && !last_token.empty() && (last_token[0] == 'f' || last_token[0] == 'F'))
                last_token = last_token.substr(1);
            const long last = parse_long(last_token);
            if (step <= 0)
                throw UsageError("'...' needs an increasing sequence");
            for (long v = out.back() + step; v < last; v += step)
                out.push_back(static_cast<int>(v));
            continue;
        }
        if (allow_f_prefix && !token.empty() && (token[0] == 'f' || token[0] == 'F'))
            token = token.substr(1);
        const auto dash = token.find('-', 1);
        if (dash != std::string::npos) {
            const long a = parse_long(token.substr(0, dash));
            const long b = parse_long(token.substr(dash + 1));
            if (b < a)
                throw UsageError("empty range '" + token + "'");
            for (long v = a; v <= b; ++v)
                out.push_back(static_cast<int>(v));
        } else {
            if (token.empty())
                throw UsageError("empty list entry in '" + text + "'");
            out.push_back(static_cast<int>(parse_long(token)));
        }
    }
    if (out.empty())
        throw UsageError("empty list '" + text + "'");
    return out;
}

std::vector<int> parse_functions(const std::string& text)
{
    if (text == "all") {
        std::vector<int> all;
        for (int id = 1; id <= benchmarks::kFunctionCount; ++id)
            all.push_back(id);
        return all;
    }
    return parse_int_list(text, true);
}

json read_json_file(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_text(const fs::path& path, const std::string& text)
{
    std::error_code ec;
    if (path.has_parent_path())
        fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path.string() + "'");
    out << text;
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

void prepare_output(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create output directory '" + dir.string() + "'");
}

// ---------------------------------------------------------------- options

struct PlanOptions {
    long dim = 5;
    long budget_multiplier = 4000;
    long runs = 20;
    std::uint64_t seed = 42;
    std::uint64_t suite_seed = 2013;
    std::string functions = "1-12";
    long jobs = 1;
    std::string suite_data;

    void add_to(CLI::App* app)
    {
        app->add_option("--dim", dim, "Problem dimension")->capture_default_str();
        app->add_option("--budget-multiplier", budget_multiplier, "Evaluation budget per run, in units of d")
            ->capture_default_str();
        app->add_option("--runs", runs, "Independent runs per cell")->capture_default_str();
        app->add_option("--seed", seed, "Base seed; run r uses seed + r")->capture_default_str();
        app->add_option("--suite-seed", suite_seed, "Seed of the generated shifts and rotations")
            ->capture_default_str();
        app->add_option("--functions", functions, "Function ids: 1-12, f1,f5 or all")->capture_default_str();
        app->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
        app->add_option("--suite-data", suite_data, "Shift/rotation data file replacing the generated suite");
    }

    json to_plan_json() const
    {
        experiments::ExperimentPlan plan;
        plan.dimension = dim;
        plan.budget_multiplier = budget_multiplier;
        plan.runs = static_cast<int>(runs);
        plan.base_seed = seed;
        plan.suite_seed = suite_seed;
        plan.functions = parse_functions(functions);
        plan.jobs = static_cast<int>(jobs);
        if (!suite_data.empty())
            plan.suite_data = fs::absolute(suite_data);
        plan.validate();
        return experiments::to_json(plan);
    }
};

std::vector<json> configs_from_names(const std::string& names)
{
    std::vector<json> out;
    std::stringstream ss(names);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto id = algorithms::parse_algorithm_id(trim(item));
        out.push_back(algorithms::to_json(algorithms::default_config(id)));
    }
    if (out.empty())
        throw UsageError("no algorithms given");
    return out;
}

std::vector<json> configs_from_file(const fs::path& path)
{
    const json j = read_json_file(path);
    std::vector<json> out;
    if (j.is_array()) {
        for (const auto& item : j)
            out.push_back(algorithms::to_json(algorithms::config_from_json(item)));
    } else {
        out.push_back(algorithms::to_json(algorithms::config_from_json(j)));
    }
    return out;
}

std::vector<algorithms::OptimizerConfig> parse_configs(const json& list)
{
    std::vector<algorithms::OptimizerConfig> out;
    for (const auto& item : list)
        out.push_back(algorithms::config_from_json(item));
    return out;
}

// ---------------------------------------------------------------- formula

struct FormulaOptions {
    std::string algo;
    std::optional<long> g, lambda, mu, s, m, evals;
    std::optional<double> p;
    double bits = 32.0;
    std::string variant = "rand/1";
};

template <typename T>
T require(const std::optional<T>& value, const char* flag, const std::string& algo)
{
    if (!value)
        throw UsageError("formula --algo " + algo + " needs " + flag);
    return *value;
}

int cmd_formula(const FormulaOptions& o)
{
    const std::string algo = o.algo;
    const double H = o.bits;
    json out;
    if (algo == "bound") {
        const long m = require(o.m, "--m", algo);
        out = {{"algorithm", "comparison_bound"}, {"m", m}, {"H_bits", H}, {"ratio", iur::comparison_upper_bound(m, H)}};
    } else if (algo == "mc") {
        out = iur::to_json(iur::iur_mc(o.evals.value_or(o.g.value_or(1)), H));
    } else if (algo == "lj") {
        out = iur::to_json(iur::iur_lj(require(o.g, "--g", algo), H));
    } else if (algo == "es" || algo == "cmaes") {
        const long g = require(o.g, "--g", algo);
        const long lambda = require(o.lambda, "--lambda", algo);
        const long mu = require(o.mu, "--mu", algo);
        out = iur::to_json(algo == "es" ? iur::iur_es(g, lambda, mu, H) : iur::iur_cmaes(g, lambda, mu, H));
    } else if (algo == "pso" || algo == "spso") {
        const long g = require(o.g, "--g", algo);
        const long s = require(o.s, "--s", algo);
        out = iur::to_json(algo == "pso" ? iur::iur_pso_bounds(g, s, H) : iur::iur_spso_bounds(g, s, H));
    } else if (algo == "de") {
        const long g = require(o.g, "--g", algo);
        const long s = require(o.s, "--s", algo);
        out = iur::to_json(iur::iur_de(g, s, H, iur::parse_de_variant(o.variant)));
    } else if (algo == "jade") {
        const long g = require(o.g, "--g", algo);
        const long s = require(o.s, "--s", algo);
        const double p = require(o.p, "--p", algo);
        out = iur::to_json(iur::iur_jade_bounds(g, s, p, H));
    } else {
        throw UsageError("unknown --algo '" + algo + "'");
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- exact / verify

struct ExactOptions {
    std::string policy = "compare-with-best";
    std::string mode = "orderings";
    std::string feedback = "rank";
    long m = 4;
    long n = 2;
    long g = 3;
};

int cmd_exact(const ExactOptions& o)
{
    exact::FiniteEnsemble ensemble;
    ensemble.points = static_cast<int>(o.m);
    ensemble.values = static_cast<int>(o.n);
    if (o.mode == "orderings")
        ensemble.mode = exact::EnsembleMode::InjectiveOrderings;
    else if (o.mode == "all")
        ensemble.mode = exact::EnsembleMode::AllFunctions;
    else
        throw UsageError("--mode must be 'orderings' or 'all'");

    std::optional<exact::FinitePolicy> policy;
    if (o.policy == "compare-with-best")
        policy = exact::compare_with_best_policy(ensemble.points);
    else if (o.policy == "constant")
        policy = exact::constant_order_policy(ensemble.points);
    else
        throw UsageError("--policy must be 'compare-with-best' or 'constant'");

    const auto result = exact::exact_iur(*policy, ensemble, static_cast<int>(o.g));
    json out = iur::to_json(result.report);
    out["m"] = o.m;
    out["n"] = ensemble.value_count();
    out["mode"] = o.mode;
    out["decision_bits"] = result.decision_bits;
    out["acquired_bits"] = result.acquired_bits;
    out["strict_numerator_bits"] = result.strict_numerator_bits;
    out["functions_enumerated"] = result.functions_enumerated;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct VerifyOptions {
    exact::Theorem1Options theorem1;
    bool no_value_feedback = false;
    long pi_max_g = 6;
    double tolerance = 1e-12;
};

int report_verification(const exact::VerificationSummary& summary)
{
    std::cout << exact::to_json(summary).dump(2) << "\n";
    return summary.violations.empty() ? kExitOk : kExitViolations;
}

// ---------------------------------------------------------------- experiments

json write_manifest(const fs::path& dir, json manifest)
{
    manifest["tool"] = "iurlab";
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
    return manifest;
}

void print_rank_table(const stats::RankTable& table)
{
    std::printf("%-10s", "function");
    for (const auto& c : table.configs)
        std::printf(" %14s", c.c_str());
    std::printf("\n");
    for (std::size_t f = 0; f < table.functions.size(); ++f) {
        std::printf("%-10s", table.functions[f].c_str());
        for (Eigen::Index c = 0; c < table.mean_errors.cols(); ++c)
            std::printf(" %14.6g", table.mean_errors(static_cast<Eigen::Index>(f), c));
        std::printf("\n");
    }
    std::printf("%-10s", "avg rank");
    for (Eigen::Index c = 0; c < table.average.size(); ++c)
        std::printf(" %14.6g", table.average[c]);
    std::printf("\n");
}

int run_bench(const json& manifest, const fs::path& out_dir)
{
    const auto plan = experiments::plan_from_json(manifest.at("plan"));
    const auto config = algorithms::config_from_json(manifest.at("config"));
    const int function = manifest.at("function").get<int>();
    const double H = manifest.value("codomain_bits", 32.0);
    if (function < 1 || function > benchmarks::kFunctionCount)
        throw UsageError("--function must name one of f1..f28");

    prepare_output(out_dir);
    const auto data = experiments::suite_for(plan);
    ObjectiveProblem problem = benchmarks::make_problem(data, function);
    problem.set_codomain_bits(H);
    const auto traces = experiments::run_cell(config, problem, plan);

    std::ostringstream csv;
    csv << "run,seed,final_error,generations,evals,ledger_iur,ledger_iur_upper\n";
    double sum = 0.0;
    for (std::size_t r = 0; r < traces.size(); ++r) {
        const auto& trace = traces[r];
        const auto events = events_of(trace);
        const auto ledger = iur::ledger_total(events, trace.evaluations(), H, config.label());
        csv << r << "," << trace.seed() << "," << experiments::format_value(trace.final_error()) << "," << trace.size()
            << "," << trace.evaluations() << "," << experiments::format_value(ledger.ratio) << ","
            << experiments::format_value(ledger.ratio_upper) << "\n";
        sum += trace.final_error();

        std::ostringstream trace_csv;
        trace.write_csv(trace_csv);
        write_text(out_dir / "traces" / ("run" + std::to_string(r) + ".csv"), trace_csv.str());
    }
    write_text(out_dir / "bench.csv", csv.str());
    write_text(out_dir / "suite.json", benchmarks::suite_manifest(data).dump(2) + "\n");
    write_manifest(out_dir, manifest);

    const auto g = static_cast<std::int64_t>(traces.front().size());
    const auto closed = algorithms::closed_form_iur(config, g, H, plan.dimension);
    std::printf("%s on f%d, d=%ld, budget %lld, %d runs\n", config.label().c_str(), function,
                static_cast<long>(plan.dimension), static_cast<long long>(plan.budget()), plan.runs);
    std::printf("mean error     %.6g\n", sum / static_cast<double>(traces.size()));
    std::printf("generations    %lld\n", static_cast<long long>(g));
    std::printf("IUR            [%.6g, %.6g]\n", closed.ratio, closed.ratio_upper);
    return kExitOk;
}

int run_sweep(const json& manifest, const fs::path& out_dir)
{
    const auto plan = experiments::plan_from_json(manifest.at("plan"));
    const int lambda = manifest.at("lambda").get<int>();
    const auto mus = manifest.at("mus").get<std::vector<int>>();
    const auto base = algorithms::config_from_json(manifest.at("config"));

    prepare_output(out_dir);
    const auto sweep = experiments::sweep_mu_lambda(lambda, mus, plan, base);
    experiments::write_sweep(sweep, out_dir);
    write_manifest(out_dir, manifest);

    std::printf("%-14s %12s %12s\n", "mu/lambda", "avg_ranking", "curve");
    for (const auto& point : sweep.curve)
        std::printf("%-14.6g %12.6g %12.6g\n", point.mu_over_lambda, point.average_ranking, point.translated);
    std::printf("spearman(ranking, -log2 C(lambda,mu)/lambda) = %.6g\n", sweep.spearman);
    return kExitOk;
}

int run_compare(const json& manifest, const fs::path& out_dir)
{
    const auto plan = experiments::plan_from_json(manifest.at("plan"));
    const auto configs = parse_configs(manifest.at("configs"));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& pair : manifest.at("pairs"))
        pairs.emplace_back(pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>());
    for (const auto& [a, b] : pairs)
        if (a >= configs.size() || b >= configs.size())
            throw UsageError("pair index out of range");

    prepare_output(out_dir);
    const auto comparison = experiments::compare_algorithms(configs, plan, pairs);
    experiments::write_comparison(comparison, out_dir);
    write_manifest(out_dir, manifest);

    print_rank_table(comparison.table);
    for (const auto& pair : comparison.pairs)
        std::printf("%s significant wins:losses %d:%d\n", pair.label.c_str(), pair.wins, pair.losses);
    return kExitOk;
}

int run_manifest(const json& manifest, const fs::path& out_dir)
{
    const std::string command = manifest.value("command", "");
    if (command == "bench")
        return run_bench(manifest, out_dir);
    if (command == "sweep")
        return run_sweep(manifest, out_dir);
    if (command == "compare")
        return run_compare(manifest, out_dir);
    throw UsageError("manifest has no replayable command");
}

/// "lj:mc,cmaes:es" by label or algorithm name, resolved against `configs`.
std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const std::string& text, const std::vector<json>& configs)
{
    auto find = [&](const std::string& name) {
        for (std::size_t c = 0; c < configs.size(); ++c) {
            const auto config = algorithms::config_from_json(configs[c]);
            std::string label = config.label();
            std::string wanted = name;
            for (auto* s : {&label, &wanted})
                for (auto& ch : *s)
                    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            if (label == wanted || (wanted == "cma-es" && label == "cmaes"))
                return c;
        }
        throw UsageError("--pairs names '" + name + "', which is not among the algorithms");
    };
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw UsageError("pairs are written first:second");
        out.emplace_back(find(trim(item.substr(0, colon))), find(trim(item.substr(colon + 1))));
    }
    return out;
}

fs::path default_out()
{
    if (const char* env = std::getenv("IURLAB_OUT"); env && *env)
        return env;
    return "iurlab_out";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Information utilization ratio laboratory"};
    app.require_subcommand(0, 1);

    std::string out_dir;
    std::string manifest_path;
    app.add_option("--out", out_dir, "Output directory (default $IURLAB_OUT, else ./iurlab_out)");
    app.add_option("--manifest", manifest_path, "Re-run the command recorded in a manifest.json");

    // formula
    FormulaOptions formula;
    auto* formula_cmd = app.add_subcommand("formula", "Closed-form IUR of one algorithm (JSON)");
    formula_cmd->add_option("--algo", formula.algo, "mc, lj, es, cmaes, pso, spso, de, jade or bound")->required();
    formula_cmd->add_option("--g", formula.g, "Generations");
    formula_cmd->add_option("--lambda", formula.lambda, "Offspring per generation");
    formula_cmd->add_option("--mu", formula.mu, "Parents");
    formula_cmd->add_option("--s", formula.s, "Swarm/population size");
    formula_cmd->add_option("--p", formula.p, "JADE elite fraction");
    formula_cmd->add_option("--m", formula.m, "Evaluations, for --algo bound");
    formula_cmd->add_option("--evals", formula.evals, "Evaluations, for --algo mc");
    formula_cmd->add_option("--codomain-bits", formula.bits, "H(f(x)) in bits")->capture_default_str();
    formula_cmd->add_option("--variant", formula.variant, "DE variant: rand/1, rand/2, best/1, best/2, current-to-best/1")
        ->capture_default_str();

    // exact
    ExactOptions exact_opts;
    auto* exact_cmd = app.add_subcommand("exact", "Brute-force IUR of a policy on a finite ensemble (JSON)");
    exact_cmd->add_option("--policy", exact_opts.policy, "compare-with-best or constant")->capture_default_str();
    exact_cmd->add_option("--mode", exact_opts.mode, "orderings (all m! rankings) or all (all n^m functions)")
        ->capture_default_str();
    exact_cmd->add_option("--m", exact_opts.m, "Points")->capture_default_str();
    exact_cmd->add_option("--n", exact_opts.n, "Values, for --mode all")->capture_default_str();
    exact_cmd->add_option("--g", exact_opts.g, "Evaluations")->capture_default_str();

    // verify
    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive checks on finite problems");
    verify_cmd->require_subcommand(1);
    auto* theorem1_cmd = verify_cmd->add_subcommand("theorem1", "0 <= IUR <= 1 for deterministic policies");
    theorem1_cmd->add_option("--max-m", verify.theorem1.max_m, "Largest search space")->capture_default_str();
    theorem1_cmd->add_option("--max-n", verify.theorem1.max_n, "Largest codomain")->capture_default_str();
    theorem1_cmd->add_option("--max-g", verify.theorem1.max_g, "Most evaluations")->capture_default_str();
    theorem1_cmd->add_option("--exhaustive-limit", verify.theorem1.exhaustive_limit,
                             "Sample policies above this many per configuration")
        ->capture_default_str();
    theorem1_cmd->add_option("--samples", verify.theorem1.samples, "Sampled policies per configuration")
        ->capture_default_str();
    theorem1_cmd->add_option("--seed", verify.theorem1.seed, "Sampling seed")->capture_default_str();
    theorem1_cmd->add_flag("--rank-only", verify.no_value_feedback, "Skip value-feedback policies");
    auto* pi_cmd = verify_cmd->add_subcommand("pi", "Enumerated indicator entropy against pi(g)");
    pi_cmd->add_option("--max-g", verify.pi_max_g, "Largest g (<= 10)")->capture_default_str();
    pi_cmd->add_option("--tolerance", verify.tolerance, "Allowed absolute error")->capture_default_str();

    // bench
    PlanOptions bench_plan;
    std::string bench_algo = "cmaes";
    std::string bench_config;
    std::string bench_function = "f1";
    double bench_bits = 32.0;
    auto* bench_cmd = app.add_subcommand("bench", "Seeded runs of one algorithm on one function");
    bench_cmd->add_option("--algo", bench_algo, "Algorithm with default settings")->capture_default_str();
    bench_cmd->add_option("--config", bench_config, "JSON algorithm configuration file (overrides --algo)");
    bench_cmd->add_option("--function", bench_function, "f1..f28")->capture_default_str();
    bench_cmd->add_option("--codomain-bits", bench_bits, "H(f(x)) in bits")->capture_default_str();
    bench_plan.add_to(bench_cmd);

    // sweep
    PlanOptions sweep_plan;
    long sweep_lambda = 10;
    std::string sweep_mus = "1-10";
    std::string sweep_config;
    auto* sweep_cmd = app.add_subcommand("sweep", "(mu, lambda)-ES over mu with the -log2 C(lambda, mu)/lambda curve");
    sweep_cmd->add_option("--lambda", sweep_lambda, "Offspring per generation")->capture_default_str();
    sweep_cmd->add_option("--mus", sweep_mus, "mu values: 1-10, 1,2,5 or 1,2,...,10")->capture_default_str();
    sweep_cmd->add_option("--config", sweep_config, "JSON ES configuration for the other settings");
    sweep_plan.add_to(sweep_cmd);

    // compare
    PlanOptions compare_plan;
    std::string compare_algos = "mc,lj,es,cmaes";
    std::string compare_configs;
    std::string compare_pairs;
    auto* compare_cmd = app.add_subcommand("compare", "Average rankings and pairwise Wilcoxon tests");
    compare_cmd->add_option("--algos", compare_algos, "Algorithms with default settings")->capture_default_str();
    compare_cmd->add_option("--configs", compare_configs, "JSON file with an array of configurations");
    compare_cmd->add_option("--pairs", compare_pairs, "Tested pairs first:second,... (default: each vs the previous)");
    compare_plan.add_to(compare_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const fs::path out = out_dir.empty() ? default_out() : fs::path(out_dir);
    try {
        if (!manifest_path.empty()) {
            if (!app.get_subcommands().empty())
                throw UsageError("--manifest replaces the subcommand");
            return run_manifest(read_json_file(manifest_path), out);
        }
        if (formula_cmd->parsed())
            return cmd_formula(formula);
        if (exact_cmd->parsed())
            return cmd_exact(exact_opts);
        if (theorem1_cmd->parsed()) {
            verify.theorem1.include_value_feedback = !verify.no_value_feedback;
            return report_verification(exact::verify_theorem1(verify.theorem1));
        }
        if (pi_cmd->parsed())
            return report_verification(exact::verify_pi_lemma(static_cast<int>(verify.pi_max_g), verify.tolerance));
        if (bench_cmd->parsed()) {
            json config = bench_config.empty() ? configs_from_names(bench_algo).front()
                                               : configs_from_file(bench_config).front();
            const auto ids = parse_functions(bench_function);
            if (ids.size() != 1)
                throw UsageError("bench runs exactly one function");
            const json manifest{{"command", "bench"},
                                {"plan", bench_plan.to_plan_json()},
                                {"config", config},
                                {"function", ids.front()},
                                {"codomain_bits", bench_bits}};
            return run_bench(manifest, out);
        }
        if (sweep_cmd->parsed()) {
            json base = sweep_config.empty() ? algorithms::to_json(algorithms::default_config(algorithms::AlgorithmId::ES))
                                             : configs_from_file(sweep_config).front();
            const json manifest{{"command", "sweep"},
                                {"plan", sweep_plan.to_plan_json()},
                                {"lambda", sweep_lambda},
                                {"mus", parse_int_list(sweep_mus, false)},
                                {"config", base}};
            return run_sweep(manifest, out);
        }
        if (compare_cmd->parsed()) {
            const std::vector<json> configs =
                compare_configs.empty() ? configs_from_names(compare_algos) : configs_from_file(compare_configs);
            if (configs.size() < 2)
                throw UsageError("compare needs at least two algorithms");
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            if (compare_pairs.empty()) {
                for (std::size_t c = 1; c < configs.size(); ++c)
                    pairs.emplace_back(c, c - 1);
            } else {
                pairs = parse_pairs(compare_pairs, configs);
            }
            json pair_list = json::array();
            for (const auto& [a, b] : pairs)
                pair_list.push_back({a, b});
            const json manifest{{"command", "compare"},
                                {"plan", compare_plan.to_plan_json()},
                                {"configs", configs},
                                {"pairs", pair_list}};
            return run_compare(manifest, out);
        }
        std::cout << app.help();
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const SizeError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "i/o error: " << e.what() << " (line " << e.line() << ")\n";
        return kExitIo;
    } catch (const ValidationError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: malformed manifest: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
