#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

const fs::path& scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "iurlab_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli(const std::string& args)
{
    const fs::path captured = scratch() / "stdout.txt";
    const std::string command = std::string("\"") + IURLAB_BINARY + "\" " + args + " > \"" + captured.string() +
                                "\" 2> \"" + (scratch() / "stderr.txt").string() + "\"";
    const int status = std::system(command.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(captured)};
}

} // namespace

TEST(Cli, FormulaPrintsJson)
{
    const auto r = cli("formula --algo es --g 100 --lambda 30 --mu 15 --codomain-bits 32");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j.at("ratio").get<double>(), 0.02805906097727719, 1e-15);
    EXPECT_TRUE(j.at("exact").get<bool>());
}

TEST(Cli, FormulaIntervalAndBound)
{
    const auto pso = nlohmann::json::parse(cli("formula --algo pso --g 100 --s 40").out);
    EXPECT_FALSE(pso.at("exact").get<bool>());
    EXPECT_NEAR(pso.at("ratio_upper").get<double>(), 0.010599555972707769, 1e-15);
    const auto jade = nlohmann::json::parse(cli("formula --algo jade --g 3 --s 10 --p 0.2 --codomain-bits 32").out);
    EXPECT_NEAR(jade.at("ratio").get<double>(), 0.019982248271400934, 1e-15);
    EXPECT_NEAR(jade.at("ratio_upper").get<double>(), 0.03142360888875442, 1e-15);
    const auto mc = cli("formula --algo mc");
    ASSERT_EQ(mc.code, 0);
    EXPECT_EQ(nlohmann::json::parse(mc.out).at("ratio").get<double>(), 0.0);
    const auto bound = nlohmann::json::parse(cli("formula --algo bound --m 100").out);
    EXPECT_NEAR(bound.at("ratio").get<double>(), 0.20762050593046014, 1e-15);
}

TEST(Cli, ExactOrderings)
{
    const auto r = cli("exact --policy compare-with-best --mode orderings --m 4 --g 3");
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(nlohmann::json::parse(r.out).at("ratio").get<double>(), 0.4183885547052492, 1e-12);
}

TEST(Cli, VerifyPass)
{
    EXPECT_EQ(cli("verify pi --max-g 5").code, 0);
    EXPECT_EQ(cli("verify theorem1 --max-m 3 --max-n 2 --max-g 2").code, 0);
}

TEST(Cli, ViolationsExitOne)
{
    EXPECT_EQ(cli("verify pi --max-g 3 --tolerance -1").code, 1);
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(cli("formula --algo es --g 10").code, 2);
    EXPECT_EQ(cli("formula --algo nope --g 10").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, OversizedEnumerationExitsThree)
{
    EXPECT_EQ(cli("exact --mode all --m 9 --n 9 --g 3").code, 3);
    EXPECT_EQ(cli("verify pi --max-g 11").code, 3);
    EXPECT_EQ(cli("verify theorem1 --max-m 20").code, 3);
}

TEST(Cli, IoErrorsExitFour)
{
    const std::string out = " --out \"" + (scratch() / "io").string() + "\" ";
    EXPECT_EQ(cli(out + "bench --suite-data \"" + (scratch() / "missing.txt").string() + "\" --runs 2").code, 4);
    const fs::path bad = scratch() / "bad_suite.txt";
    std::ofstream(bad) << "dimension 2\nfunction 1 components x\n";
    EXPECT_EQ(cli(out + "bench --dim 2 --suite-data \"" + bad.string() + "\" --runs 2").code, 4);

    const fs::path blocker = scratch() / "not_a_directory";
    std::ofstream(blocker) << "x";
    EXPECT_EQ(cli("--out \"" + (blocker / "sub").string() +
                  "\" bench --algo mc --function f1 --dim 2 --budget-multiplier 10 --runs 2")
                  .code,
              4);
}

TEST(Cli, OutputDirectoryFromEnvironment)
{
    const fs::path dir = scratch() / "from_env";
    ASSERT_EQ(setenv("IURLAB_OUT", dir.string().c_str(), 1), 0);
    const auto r = cli("bench --algo mc --function f2 --dim 2 --budget-multiplier 10 --runs 2");
    unsetenv("IURLAB_OUT");
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(fs::exists(dir / "bench.csv"));
}

TEST(Cli, BenchWritesArtifactsAndReplays)
{
    const fs::path out = scratch() / "bench";
    const auto r = cli("--out \"" + out.string() +
                       "\" bench --algo lj --function f1 --dim 2 --budget-multiplier 50 --runs 3 --seed 9");
    ASSERT_EQ(r.code, 0);
    for (const char* f : {"bench.csv", "suite.json", "manifest.json", "traces/run0.csv", "traces/run2.csv"})
        EXPECT_TRUE(fs::exists(out / f)) << f;
    const std::string first = slurp(out / "bench.csv");

    const fs::path replay = scratch() / "replay";
    ASSERT_EQ(cli("--out \"" + replay.string() + "\" --manifest \"" + (out / "manifest.json").string() + "\"").code, 0);
    EXPECT_EQ(slurp(replay / "bench.csv"), first);
    EXPECT_EQ(slurp(replay / "traces/run1.csv"), slurp(out / "traces/run1.csv"));
}

TEST(Cli, CmaesSolvesSphere)
{
    const fs::path out = scratch() / "cmaes_f1";
    ASSERT_EQ(cli("--out \"" + out.string() +
                  "\" bench --algo cmaes --function f1 --dim 5 --budget-multiplier 10000 --runs 20")
                  .code,
              0);
    std::ifstream in(out / "bench.csv");
    std::string line;
    std::getline(in, line);
    double total = 0.0;
    int runs = 0;
    while (std::getline(in, line)) {
        // run,seed,final_error,...
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        total += std::stod(line.substr(second + 1));
        ++runs;
    }
    ASSERT_EQ(runs, 20);
    EXPECT_LE(total / runs, 1e-8);
}

TEST(Cli, CompareAndSweepWriteCsv)
{
    const fs::path cmp = scratch() / "compare";
    ASSERT_EQ(cli("--out \"" + cmp.string() +
                  "\" compare --algos mc,lj --dim 2 --budget-multiplier 50 --runs 3 --functions 1,2")
                  .code,
              0);
    EXPECT_NE(slurp(cmp / "pairs.csv").find("LJ_vs_MC"), std::string::npos);

    const fs::path sweep = scratch() / "sweep";
    ASSERT_EQ(cli("--out \"" + sweep.string() +
                  "\" sweep --lambda 4 --mus 1-4 --dim 2 --budget-multiplier 100 --runs 2 --functions 1")
                  .code,
              0);
    EXPECT_TRUE(fs::exists(sweep / "fig2_curve.csv"));

    const fs::path ten = scratch() / "sweep10";
    ASSERT_EQ(cli("--out \"" + ten.string() +
                  "\" sweep --lambda 10 --mus 1,2,...,10 --dim 2 --budget-multiplier 100 --runs 2 --functions 1")
                  .code,
              0);
    const std::string curve = slurp(ten / "fig2_curve.csv");
    EXPECT_EQ(std::count(curve.begin(), curve.end(), '\n'), 11);
}
