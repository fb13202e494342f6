#include "iurlab/errors.hpp"
#include "iurlab/random.hpp"
#include "iurlab/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

using namespace iurlab;
using namespace iurlab::stats;

namespace {

// Two-sided p by listing every split of the pooled ranks.
double brute_force_p(std::size_t na, std::size_t nb, double observed)
{
    const std::size_t n = na + nb;
    std::vector<int> choose(n, 0);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(na), 1);
    std::sort(choose.begin(), choose.end());
    std::uint64_t total = 0, low = 0, high = 0;
    do {
        double w = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (choose[i])
                w += static_cast<double>(i + 1);
        ++total;
        low += w <= observed;
        high += w >= observed;
    } while (std::next_permutation(choose.begin(), choose.end()));
    const double tail = static_cast<double>(std::min(low, high)) / static_cast<double>(total);
    return std::min(1.0, 2.0 * tail);
}

} // namespace

TEST(Wilcoxon, SeparatedSamples)
{
    const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
    const auto r = wilcoxon_rank_sum(a, b);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.p, 0.1);
    EXPECT_TRUE(r.a_lower());
    EXPECT_EQ(r.rank_sum, 6.0);
}

TEST(Wilcoxon, ExactMatchesEnumeration)
{
    Rng rng(17);
    for (std::size_t na = 2; na <= 6; ++na)
        for (std::size_t nb = 2; nb <= 6; ++nb)
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<double> pooled(na + nb);
                std::iota(pooled.begin(), pooled.end(), 0.0);
                for (std::size_t i = pooled.size(); i > 1; --i)
                    std::swap(pooled[i - 1], pooled[rng.index(i)]);
                const std::vector<double> a(pooled.begin(), pooled.begin() + static_cast<std::ptrdiff_t>(na));
                const std::vector<double> b(pooled.begin() + static_cast<std::ptrdiff_t>(na), pooled.end());
                const auto r = wilcoxon_rank_sum(a, b, WilcoxonMethod::Exact);
                ASSERT_NEAR(r.p, brute_force_p(na, nb, r.rank_sum), 1e-12) << na << "," << nb;
            }
}

TEST(Wilcoxon, AutoSwitchesToNormal)
{
    std::vector<double> a(10), b(10);
    std::iota(a.begin(), a.end(), 0.0);
    std::iota(b.begin(), b.end(), 5.0);
    EXPECT_FALSE(wilcoxon_rank_sum(a, b).exact);
    const std::vector<double> tied_a{1, 1, 2}, tied_b{2, 3, 3};
    EXPECT_FALSE(wilcoxon_rank_sum(tied_a, tied_b).exact);
    EXPECT_THROW(wilcoxon_rank_sum(tied_a, tied_b, WilcoxonMethod::Exact), DataError);
}

TEST(Wilcoxon, NormalApproximationReference)
{
    // 20 vs 20 interleaved with a shift: z from the tie-free formula with continuity correction
    std::vector<double> a(20), b(20);
    for (int i = 0; i < 20; ++i) {
        a[i] = i;
        b[i] = i + 7.5;
    }
    const auto r = wilcoxon_rank_sum(a, b, WilcoxonMethod::Normal);
    const double mean = 20.0 * 41.0 / 2.0;
    const double sd = std::sqrt(20.0 * 20.0 * 41.0 / 12.0);
    const double z = (std::abs(r.rank_sum - mean) - 0.5) / sd;
    EXPECT_NEAR(r.p, std::erfc(z / std::sqrt(2.0)), 1e-12);
}

TEST(Wilcoxon, IdenticalSamples)
{
    const std::vector<double> a{2, 2, 2}, b{2, 2, 2};
    EXPECT_EQ(wilcoxon_rank_sum(a, b).p, 1.0);
}

TEST(Wilcoxon, RejectsBadInput)
{
    const std::vector<double> one{1}, two{1, 2}, nan{1, std::numeric_limits<double>::quiet_NaN()};
    EXPECT_THROW(wilcoxon_rank_sum(one, two), DataError);
    EXPECT_THROW(wilcoxon_rank_sum(two, nan), DataError);
}

TEST(Ranks, Midranks)
{
    const std::vector<double> v{10, 20, 10, 5};
    EXPECT_EQ(midranks(v), (std::vector<double>{2.5, 4, 2.5, 1}));
}

TEST(Ranks, Spearman)
{
    const std::vector<double> x{1, 2, 3, 4}, y{10, 20, 30, 40}, z{4, 3, 2, 1}, c{1, 1, 1, 1};
    EXPECT_NEAR(spearman(x, y), 1.0, 1e-15);
    EXPECT_NEAR(spearman(x, z), -1.0, 1e-15);
    EXPECT_EQ(spearman(x, c), 0.0);
}

TEST(Ranks, AverageRankings)
{
    Eigen::MatrixXd errors(2, 3);
    errors << 1, 2, 3,
              5, 5, 0;
    const auto table = average_rankings(errors, {"f1", "f2"}, {"A", "B", "C"});
    EXPECT_EQ(table.ranks(1, 0), 2.5);
    EXPECT_EQ(table.ranks(1, 2), 1.0);
    EXPECT_DOUBLE_EQ(table.average[0], 1.75);
    EXPECT_DOUBLE_EQ(table.average[1], 2.25);
    EXPECT_DOUBLE_EQ(table.average[2], 2.0);
    EXPECT_DOUBLE_EQ(table.average.sum(), 6.0);
    EXPECT_THROW(average_rankings(Eigen::MatrixXd(2, 1), {"f1", "f2"}, {"A"}), DataError);
}
