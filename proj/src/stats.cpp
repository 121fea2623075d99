#include "ohg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "ohg/error.hpp"

namespace ohg {

double chi_square_sf(double x, double dof) {
    if (dof <= 0) throw Error(ErrorCategory::InvalidArgument, "chi-square needs positive dof");
    if (x <= 0) return 1.0;
    if (std::isinf(x)) return 0.0;
    return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

std::vector<std::size_t> pool_bins(std::span<const double> expected, double min_expected) {
    // boundaries[b] is the first input index of merged bin b
    std::vector<std::size_t> boundaries;
    double acc = 0.0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        acc += expected[i];
        if (acc >= min_expected) {
            boundaries.push_back(start);
            start = i + 1;
            acc = 0.0;
        }
    }
    // a short tail after the last boundary is absorbed by the last bin
    if (boundaries.empty() && !expected.empty()) boundaries.push_back(0);
    return boundaries;
}

namespace {

std::vector<double> merge(std::span<const double> values, const std::vector<std::size_t>& boundaries) {
    std::vector<double> out(boundaries.size(), 0.0);
    for (std::size_t b = 0; b < boundaries.size(); ++b) {
        const std::size_t end = b + 1 < boundaries.size() ? boundaries[b + 1] : values.size();
        for (std::size_t i = boundaries[b]; i < end; ++i) out[b] += values[i];
    }
    return out;
}

}  // namespace

ChiSquareResult pearson_chi_square(std::span<const double> observed, std::span<const double> expected,
                                   double min_expected, int estimated_params) {
    if (observed.size() != expected.size()) {
        throw Error(ErrorCategory::InvalidArgument, "observed and expected lengths differ");
    }
    const auto boundaries = pool_bins(expected, min_expected);
    const auto obs = merge(observed, boundaries);
    const auto exp = merge(expected, boundaries);

    ChiSquareResult r;
    r.bins = static_cast<int>(obs.size());
    for (std::size_t b = 0; b < obs.size(); ++b) {
        if (exp[b] > 0) {
            const double d = obs[b] - exp[b];
            r.statistic += d * d / exp[b];
        } else if (obs[b] > 0) {
            r.statistic = std::numeric_limits<double>::infinity();
        }
    }
    r.dof = r.bins - 1 - estimated_params;
    r.p_value = r.dof > 0 ? chi_square_sf(r.statistic, r.dof) : 1.0;
    return r;
}

ChiSquareResult two_sample_chi_square(std::span<const double> a, std::span<const double> b,
                                      double min_expected) {
    if (a.size() != b.size()) throw Error(ErrorCategory::InvalidArgument, "sample histograms differ in length");
    const double total_a = std::accumulate(a.begin(), a.end(), 0.0);
    const double total_b = std::accumulate(b.begin(), b.end(), 0.0);
    const double total = total_a + total_b;
    ChiSquareResult r;
    if (total_a == 0 || total_b == 0) return r;

    // pool on the smaller of the two expected counts per bin
    std::vector<double> smaller(a.size());
    const double share = std::min(total_a, total_b) / total;
    for (std::size_t i = 0; i < a.size(); ++i) smaller[i] = (a[i] + b[i]) * share;
    const auto boundaries = pool_bins(smaller, min_expected);
    const auto ma = merge(a, boundaries);
    const auto mb = merge(b, boundaries);

    r.bins = static_cast<int>(ma.size());
    for (std::size_t i = 0; i < ma.size(); ++i) {
        const double col = ma[i] + mb[i];
        const double ea = col * total_a / total;
        const double eb = col * total_b / total;
        if (ea > 0) r.statistic += (ma[i] - ea) * (ma[i] - ea) / ea;
        if (eb > 0) r.statistic += (mb[i] - eb) * (mb[i] - eb) / eb;
    }
    r.dof = r.bins - 1;
    r.p_value = r.dof > 0 ? chi_square_sf(r.statistic, r.dof) : 1.0;
    return r;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(ErrorCategory::InvalidArgument, "line fit needs two or more paired points");
    }
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw Error(ErrorCategory::InvalidArgument, "line fit needs distinct x values");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

}  // namespace ohg
