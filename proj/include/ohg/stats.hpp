#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ohg {

// Upper tail Pr(X >= x) for X ~ chi-square(dof).
double chi_square_sf(double x, double dof);

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    int bins = 0;  // after pooling
};

// Adjacent bins are merged left to right until each has expected count
// >= min_expected; a short trailing remainder joins the last bin.
// Returns the merged bin boundaries as indices into the input.
std::vector<std::size_t> pool_bins(std::span<const double> expected, double min_expected);

// Pearson goodness of fit of observed counts against expected counts.
// `estimated_params` reduces the degrees of freedom.
ChiSquareResult pearson_chi_square(std::span<const double> observed, std::span<const double> expected,
                                   double min_expected = 5.0, int estimated_params = 0);

// Two-sample test of homogeneity (2 x k contingency table); bins with a
// combined expectation below min_expected are pooled.
ChiSquareResult two_sample_chi_square(std::span<const double> a, std::span<const double> b,
                                      double min_expected = 5.0);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Ordinary least squares y = slope * x + intercept.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace ohg
