#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ohg/combinatorics.hpp"
#include "ohg/hypergraph.hpp"
#include "ohg/log_value.hpp"

namespace ohg {

// ---------------------------------------------------------------------------
// Probability families and parameters

// p(n) = n^alpha / beta^n, evaluated in log space.
struct ProbabilityFamily {
    double alpha = 0.0;
    double beta = 1.0;

    double log_p(double n) const;
    // Throws InvalidArgument when p(n) leaves [0, 1].
    LogValue p(double n) const;
};

struct RandomModelParams {
    int n = 2;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Random streams
//
// Every draw comes from std::mt19937_64. A run seed is split into independent
// streams with SplitMix64: stream k is seeded with splitmix64(seed + k * gamma).
// The exhaustive sampler uses stream 0; the per-size sampler uses stream s for
// edges of size s.

using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;
Engine make_stream(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0, 1) with 53 random bits.
double uniform01(Engine& rng);
// Uniform integer in [0, bound); bound > 0.
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound);
BigCount uniform_below(Engine& rng, const BigCount& bound);

// ---------------------------------------------------------------------------
// Edge ranking
//
// Edges of size s are numbered 0 .. size_count(n, s) - 1 as
//   index = q * (2^(s-1) - 1) + b,
// where q is the colexicographic rank of the s-subset and the bits of b + 1,
// read over the subset's non-minimal members in increasing order, select the
// right side. The minimal member always sits on the left.

OrientedHyperedge unrank_edge(int n, int s, const BigCount& index);
OrientedHyperedge unrank_edge(int n, int s, std::uint64_t index);
std::pair<int, BigCount> rank_edge(const OrientedHyperedge& e);

// ---------------------------------------------------------------------------
// Sampling G(n, p)

enum class SamplerStrategy { Auto, Exhaustive, PerSize };

inline constexpr int kExhaustiveSamplerMaxN = 14;
inline constexpr double kMaxExpectedSampleEdges = 1e7;
inline constexpr double kPoissonMinPopulation = 1e12;
inline constexpr double kPoissonMaxMean = 1e6;

struct PoissonSwitch {
    int size = 0;
    double mean = 0.0;
    double total_variation_bound = 0.0;  // <= p
};

struct SampleMetadata {
    SamplerStrategy strategy = SamplerStrategy::Auto;
    std::vector<PoissonSwitch> poisson_sizes;
};

struct SampleResult {
    OrientedHypergraph graph;
    SampleMetadata metadata;
};

// Every admissible edge is present independently with probability p.
// Deterministic for a fixed (params, strategy).
SampleResult sample_with_metadata(const RandomModelParams& params,
                                  SamplerStrategy strategy = SamplerStrategy::Auto);
OrientedHypergraph sample(const RandomModelParams& params,
                          SamplerStrategy strategy = SamplerStrategy::Auto);

// ---------------------------------------------------------------------------
// Expectations and distributions

LogValue expected_edges(double n, LogValue p);
LogValue expected_edges_of_size(double n, int s, LogValue p);
LogValue expected_degree(double n, LogValue p);
inline LogValue expected_edges(double n, double p) { return expected_edges(n, LogValue::from_double(p)); }
inline LogValue expected_edges_of_size(double n, int s, double p) {
    return expected_edges_of_size(n, s, LogValue::from_double(p));
}
inline LogValue expected_degree(double n, double p) { return expected_degree(n, LogValue::from_double(p)); }

// u_s / u_r; independent of p.
double size_probability(int n, int s);

// E[R] / E[D] in closed form; p cancels. Tends to 3/2.
double ratio_R_over_D(double n);
// The simple-graph G(n, p) counterpart, n / 2.
double simple_graph_ratio(double n);

// alpha ln n + n ln(3 / beta), the large-n form of ln E[R].
double log_expected_edges_asymptote(double n, const ProbabilityFamily& fam);

// Binomial pmfs, log-gamma based. Zero outside the support.
double binomial_pmf(double trials, double k, double p);
double pmf_edges(int n, double p, double r);
double pmf_edges_of_size(int n, int s, double p, double r);
double pmf_degree(int n, double p, double d);

// ---------------------------------------------------------------------------
// Curves

enum class CurveKind { TotalEdges, EdgesOfSize, VertexDegree, RatioRD };

struct CurvePoint {
    double n = 0.0;
    LogValue value;
};

struct ExpectationCurve {
    CurveKind kind = CurveKind::TotalEdges;
    int size = 0;  // EdgesOfSize only
    std::vector<CurvePoint> points;
};

ExpectationCurve expectation_curve(CurveKind kind, const ProbabilityFamily& fam,
                                   const std::vector<double>& n_values, int size = 0);

std::string curve_kind_name(CurveKind kind);
nlohmann::json to_json(const ExpectationCurve& curve);
// Columns: n,log_value,sign
std::string to_csv(const ExpectationCurve& curve);

// ---------------------------------------------------------------------------
// Extrema

enum class ExtremumVariable { NMax, SMax };

struct ExtremumResult {
    ExtremumVariable variable = ExtremumVariable::NMax;
    double value = 0.0;  // real root
    double residual = 0.0;
    int iterations = 0;
    long integer_value = 0;  // integer argmax of E[R_s] next to the root
    std::string assumption;
};

inline constexpr double kExtremumTolerance = 1e-9;

// Root of alpha/n + ln(n / (3 (n - s))) = 0 for the beta = 3 family.
ExtremumResult solve_n_max(int s, double alpha);
// Root of 2^(s-1) ln 2 / (2^(s-1) - 1) + ln((n - s)/s) = 0.
ExtremumResult solve_s_max(long n);

double n_max_equation(double n, double s, double alpha);
double s_max_equation(double s, double n);

nlohmann::json to_json(const ExtremumResult& result);

}  // namespace ohg
