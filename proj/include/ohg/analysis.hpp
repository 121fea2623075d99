#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ohg/hypergraph.hpp"

namespace ohg {

// Oracle: all unordered pairs {X, Y} of disjoint non-empty vertex sets over
// n vertices, found by a double loop over bit masks keeping pairs whose first
// set has the smaller minimal vertex. Independent of the closed forms and of
// for_each_complete_edge.
inline constexpr int kBruteForceMaxN = 12;
std::vector<OrientedHyperedge> brute_force_enumerate(int n);

std::vector<std::uint64_t> degree_sequence(const OrientedHypergraph& g);
// Entry for every s in [2, n], zeros included.
std::map<int, std::uint64_t> size_histogram(const OrientedHypergraph& g);

// Edges of the complete hypergraph containing two fixed vertices:
// 2 * 3^(n-2) - 2^(n-2). Sets the covariance between two vertex degrees.
double pair_degree_total(int n);

enum class Verdict { ConsistentWithRandom, Rejected };

struct DistributionSummary {
    std::string method;
    std::vector<long> support;
    std::vector<std::uint64_t> empirical_counts;
    std::vector<double> theoretical_pmf;
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    Verdict verdict = Verdict::ConsistentWithRandom;
};

struct FitOptions {
    double significance = 0.01;
    double min_expected = 5.0;
};

struct RandomnessReport {
    int n = 0;
    std::uint64_t observed_edges = 0;
    std::uint64_t observed_degree_sum = 0;
    double observed_ratio = 0.0;
    double theoretical_ratio = 0.0;
    double asymptotic_ratio = 1.5;
    double simple_graph_ratio = 0.0;
    double p_hat = 0.0;
    double p_used = 0.0;
    bool p_estimated = true;
    DistributionSummary size_fit;
    DistributionSummary degree_fit;
    Verdict verdict = Verdict::ConsistentWithRandom;
    std::vector<std::string> flags;
};

// Size histogram against the multinomial with probabilities u_s/u_r (Pearson,
// pooled bins), and vertex degrees against Binomial(u_n, p) through a
// dispersion statistic that accounts for the shared edges between vertices.
// Each test runs at significance/2 so the combined verdict holds the
// nominal level.
RandomnessReport fit_randomness(const OrientedHypergraph& g, std::optional<double> p = std::nullopt,
                                const FitOptions& options = {});

// |E| / (d(G) / n). Throws on an edge-less hypergraph.
double ratio_diagnostic(const OrientedHypergraph& g);

struct CalibrationResult {
    int trials = 0;
    int rejections = 0;
    double rejection_rate() const { return trials == 0 ? 0.0 : static_cast<double>(rejections) / trials; }
};

// Samples `trials` instances of G(n, p) and counts how often fit_randomness
// rejects. Trial t uses seed derive_seed(base_seed, t); the result does not
// depend on `jobs`.
CalibrationResult calibrate_fit(int n, double p, int trials, std::uint64_t base_seed, int jobs = 1,
                                bool supply_p = false, const FitOptions& options = {});

std::string verdict_name(Verdict v);
nlohmann::json to_json(const DistributionSummary& summary);
nlohmann::json to_json(const RandomnessReport& report);
std::string to_text(const RandomnessReport& report);

}  // namespace ohg
