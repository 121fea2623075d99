#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ohg/error.hpp"
#include "ohg/stats.hpp"

using namespace ohg;

TEST(ChiSquare, SurvivalKnownQuantiles) {
    // upper 5% points of chi-square tables
    EXPECT_NEAR(chi_square_sf(3.841458820694124, 1), 0.05, 1e-12);
    EXPECT_NEAR(chi_square_sf(11.070497693516351, 5), 0.05, 1e-12);
    EXPECT_NEAR(chi_square_sf(2.0, 2), std::exp(-1.0), 1e-14);
    EXPECT_DOUBLE_EQ(chi_square_sf(0.0, 4), 1.0);
}

TEST(PoolBins, MergesSmallExpectations) {
    const std::vector<double> expected{1, 1, 10, 2, 2, 2};
    const auto starts = pool_bins(expected, 5.0);
    // {1,1,10} reaches 12 first, then {2,2,2}=6
    EXPECT_EQ(starts, (std::vector<std::size_t>{0, 3}));
}

TEST(PoolBins, ShortTailJoinsLastBin) {
    const std::vector<double> expected{10, 10, 1};
    EXPECT_EQ(pool_bins(expected, 5.0), (std::vector<std::size_t>{0, 1}));
}

TEST(Pearson, ExactFitHasZeroStatistic) {
    const std::vector<double> obs{10, 20, 30};
    const auto r = pearson_chi_square(obs, obs);
    EXPECT_DOUBLE_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.dof, 2);
    EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(Pearson, HandComputedStatistic) {
    const std::vector<double> obs{12, 8};
    const std::vector<double> exp{10, 10};
    const auto r = pearson_chi_square(obs, exp);
    EXPECT_NEAR(r.statistic, 0.8, 1e-12);
    EXPECT_EQ(r.dof, 1);
    EXPECT_NEAR(r.p_value, chi_square_sf(0.8, 1), 1e-15);
}

TEST(Pearson, EstimatedParametersReduceDof) {
    const std::vector<double> obs{10, 20, 30, 40};
    EXPECT_EQ(pearson_chi_square(obs, obs, 5.0, 1).dof, 2);
}

TEST(Pearson, RejectsMismatchedInput) {
    const std::vector<double> a{1, 2};
    const std::vector<double> b{1, 2, 3};
    EXPECT_THROW(pearson_chi_square(a, b), Error);
}

TEST(TwoSample, IdenticalSamples) {
    const std::vector<double> a{100, 200, 300};
    const auto r = two_sample_chi_square(a, a);
    EXPECT_DOUBLE_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.dof, 2);
}

TEST(TwoSample, HandComputedTable) {
    // 2x2 table {{30, 10}, {20, 40}}: chi2 = 100 (30*40 - 10*20)^2 / (40*60*50*50)
    const std::vector<double> a{30, 10};
    const std::vector<double> b{20, 40};
    const auto r = two_sample_chi_square(a, b);
    EXPECT_NEAR(r.statistic, 100.0 * 1000.0 * 1000.0 / (40.0 * 60 * 50 * 50), 1e-12);
    EXPECT_EQ(r.dof, 1);
}

TEST(FitLine, ExactLine) {
    const std::vector<double> x{1, 2, 3, 4};
    const std::vector<double> y{3, 5, 7, 9};
    const auto f = fit_line(x, y);
    EXPECT_NEAR(f.slope, 2.0, 1e-12);
    EXPECT_NEAR(f.intercept, 1.0, 1e-12);
}

TEST(FitLine, DegenerateInput) {
    const std::vector<double> x{1, 1};
    const std::vector<double> y{2, 3};
    EXPECT_THROW(fit_line(x, y), Error);
}
