#include "ohg/random_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "ohg/error.hpp"

namespace ohg {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// Probability families

double ProbabilityFamily::log_p(double n) const {
    if (!(beta > 0.0)) throw Error(ErrorCategory::InvalidArgument, "probability family requires beta > 0");
    if (!(n > 0.0)) throw Error(ErrorCategory::InvalidArgument, "probability family requires n > 0");
    return alpha * std::log(n) - n * std::log(beta);
}

LogValue ProbabilityFamily::p(double n) const {
    const double lp = log_p(n);
    if (lp > 1e-12) {
        std::ostringstream msg;
        msg << "p = n^alpha / beta^n exceeds 1 at n=" << n << " (alpha=" << alpha << ", beta=" << beta
            << ")";
        throw Error(ErrorCategory::InvalidArgument, msg.str());
    }
    return LogValue::from_log(std::min(lp, 0.0));
}

// ---------------------------------------------------------------------------
// Random streams

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(seed + stream * 0x9E3779B97F4A7C15ULL);
}

Engine make_stream(std::uint64_t seed, std::uint64_t stream) { return Engine(derive_seed(seed, stream)); }

double uniform01(Engine& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorCategory::InvalidArgument, "uniform_below requires bound > 0");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

BigCount uniform_below(Engine& rng, const BigCount& bound) {
    if (bound <= 0) throw Error(ErrorCategory::InvalidArgument, "uniform_below requires bound > 0");
    const unsigned bits = mp::msb(bound) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned spare = words * 64 - bits;
    for (;;) {
        BigCount x = 0;
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t chunk = rng();
            if (w == 0) chunk >>= spare;
            x = (x << 64) | chunk;
        }
        if (x < bound) return x;
    }
}

// ---------------------------------------------------------------------------
// Edge ranking

namespace {

constexpr int kU64PascalRows = 64;

const std::array<std::array<std::uint64_t, kU64PascalRows + 1>, kU64PascalRows + 1>& u64_pascal() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kU64PascalRows + 1>, kU64PascalRows + 1> t{};
        for (int r = 0; r <= kU64PascalRows; ++r) {
            t[r][0] = 1;
            for (int k = 1; k <= r; ++k) t[r][k] = t[r - 1][k - 1] + (k <= r - 1 ? t[r - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

void check_size(int n, int s) {
    if (n < 2 || n > kMaxDenseVertices) {
        throw Error(ErrorCategory::ResourceLimit,
                    "edge ranking supports n in [2, " + std::to_string(kMaxDenseVertices) + "]");
    }
    if (s < 2 || s > n) {
        throw Error(ErrorCategory::OutOfRange,
                    "edge size " + std::to_string(s) + " outside [2, " + std::to_string(n) + "]");
    }
}

template <class Int, class Choose>
OrientedHyperedge unrank_impl(int n, int s, Int index, Choose choose) {
    const Int bipartitions = (Int(1) << (s - 1)) - 1;
    Int subset_rank = index / bipartitions;
    const Int b = index % bipartitions;

    // colexicographic unranking, largest element first
    std::vector<int> members(static_cast<std::size_t>(s));
    int c = n - 1;
    for (int k = s; k >= 1; --k) {
        while (choose(c, k) > subset_rank) --c;
        members[static_cast<std::size_t>(k - 1)] = c;
        subset_rank -= choose(c, k);
        --c;
    }

    VertexSet left(n);
    VertexSet right(n);
    left.insert(members[0]);
    const Int selector = b + 1;
    for (int t = 0; t < s - 1; ++t) {
        const bool on_right = ((selector >> t) & 1) != 0;
        (on_right ? right : left).insert(members[static_cast<std::size_t>(t + 1)]);
    }
    return OrientedHyperedge(left, right);
}

bool fits_u64(int n, int s) {
    if (n > kU64PascalRows) return false;
    std::uint64_t count = 0;
    return !__builtin_mul_overflow(u64_pascal()[n][s], (std::uint64_t{1} << (s - 1)) - 1, &count);
}

}  // namespace

OrientedHyperedge unrank_edge(int n, int s, const BigCount& index) {
    check_size(n, s);
    const BigCount count = size_count(n, s);
    if (index < 0 || index >= count) {
        throw Error(ErrorCategory::OutOfRange,
                    "edge index " + index.str() + " outside [0, " + count.str() + ")");
    }
    if (fits_u64(n, s)) return unrank_edge(n, s, index.convert_to<std::uint64_t>());
    return unrank_impl<BigCount>(n, s, index,
                                 [](int c, int k) -> const BigCount& { return binomial_table(c, k); });
}

OrientedHyperedge unrank_edge(int n, int s, std::uint64_t index) {
    check_size(n, s);
    if (!fits_u64(n, s)) return unrank_edge(n, s, BigCount(index));
    const auto& pascal = u64_pascal();
    const std::uint64_t count = ((std::uint64_t{1} << (s - 1)) - 1) * pascal[n][s];
    if (index >= count) {
        throw Error(ErrorCategory::OutOfRange,
                    "edge index " + std::to_string(index) + " outside [0, " + std::to_string(count) + ")");
    }
    return unrank_impl<std::uint64_t>(n, s, index, [&](int c, int k) -> std::uint64_t {
        return (c < 0 || k > c) ? 0 : pascal[c][k];
    });
}

std::pair<int, BigCount> rank_edge(const OrientedHyperedge& e) {
    const int n = e.universe_size();
    const auto members = e.members().members();
    const int s = static_cast<int>(members.size());
    check_size(n, s);

    BigCount subset_rank = 0;
    for (int k = 1; k <= s; ++k) subset_rank += binomial_table(members[static_cast<std::size_t>(k - 1)], k);

    // canonical storage keeps the minimal member on the left
    BigCount selector = 0;
    for (int t = 0; t < s - 1; ++t) {
        if (e.right().contains(members[static_cast<std::size_t>(t + 1)])) selector |= BigCount(1) << t;
    }
    const BigCount bipartitions = (BigCount(1) << (s - 1)) - 1;
    return {s, subset_rank * bipartitions + (selector - 1)};
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

constexpr int kExhaustiveHardCap = 18;

void check_params(const RandomModelParams& params) {
    if (params.n < 2 || params.n > kMaxDenseVertices) {
        throw Error(ErrorCategory::ResourceLimit,
                    "sampling supports n in [2, " + std::to_string(kMaxDenseVertices) + "], got " +
                        std::to_string(params.n));
    }
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw Error(ErrorCategory::InvalidArgument, "edge probability must lie in [0, 1]");
    }
    if (params.p > 0.0 &&
        std::log(params.p) + log_total_edges(params.n) > std::log(kMaxExpectedSampleEdges)) {
        throw Error(ErrorCategory::ResourceLimit,
                    "expected edge count p*u_r exceeds the sampling limit of 1e7 edges");
    }
}

void sample_exhaustive(const RandomModelParams& params, OrientedHypergraph& g) {
    if (params.n > kExhaustiveHardCap) {
        throw Error(ErrorCategory::ResourceLimit,
                    "exhaustive sampler limited to n <= " + std::to_string(kExhaustiveHardCap));
    }
    Engine rng = make_stream(params.seed, 0);
    const double p = params.p;
    const int n = params.n;
    // Edges are drawn in ascending order, so the result needs no sorting.
    std::vector<OrientedHyperedge> drawn;
    const double total = total_edges(n).convert_to<double>();
    drawn.reserve(static_cast<std::size_t>(std::min(total, p * total + 4.0 * std::sqrt(total) + 16.0)));
    for_each_edge_mask(n, [&](std::uint64_t left, std::uint64_t right) {
        if (uniform01(rng) < p) drawn.emplace_back(VertexSet::from_mask(n, left), VertexSet::from_mask(n, right));
    });
    g.insert_all(std::move(drawn));
}

// Draws `count` distinct indices in [0, population) and inserts their edges.
void insert_distinct_u64(int n, int s, std::uint64_t population, std::uint64_t count, Engine& rng,
                         OrientedHypergraph& g) {
    if (count == 0) return;
    const bool complement = count > population / 2;
    const std::uint64_t draws = complement ? population - count : count;
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(draws) * 2);
    while (chosen.size() < draws) chosen.insert(uniform_below(rng, population));
    if (complement) {
        std::vector<OrientedHyperedge> edges;
        edges.reserve(static_cast<std::size_t>(count));
        for (std::uint64_t idx = 0; idx < population; ++idx) {
            if (!chosen.contains(idx)) edges.push_back(unrank_edge(n, s, idx));
        }
        std::sort(edges.begin(), edges.end());
        g.insert_all(std::move(edges));
    } else {
        std::vector<OrientedHyperedge> edges;
        edges.reserve(static_cast<std::size_t>(count));
        for (std::uint64_t idx : chosen) edges.push_back(unrank_edge(n, s, idx));
        std::sort(edges.begin(), edges.end());
        g.insert_all(std::move(edges));
    }
}

void insert_distinct_big(int n, int s, const BigCount& population, std::uint64_t count, Engine& rng,
                         OrientedHypergraph& g) {
    std::set<BigCount> chosen;
    while (chosen.size() < count) chosen.insert(uniform_below(rng, population));
    for (const auto& idx : chosen) g.insert(unrank_edge(n, s, idx));
}

void sample_per_size(const RandomModelParams& params, OrientedHypergraph& g, SampleMetadata& meta) {
    const int n = params.n;
    const double p = params.p;
    if (p == 0.0) return;
    for (int s = 2; s <= n; ++s) {
        Engine rng = make_stream(params.seed, static_cast<std::uint64_t>(s));
        const BigCount population = size_count(n, s);
        const double population_d = population.convert_to<double>();
        const double mean = p * population_d;
        const bool fits = population <= std::numeric_limits<std::int64_t>::max();

        std::uint64_t count = 0;
        if (p == 1.0 && fits) {
            count = population.convert_to<std::uint64_t>();
        } else if (mean <= 0.0) {
            count = 0;
        } else if (!fits || (population_d > kPoissonMinPopulation && mean < kPoissonMaxMean)) {
            std::poisson_distribution<long long> draw(mean);
            count = static_cast<std::uint64_t>(draw(rng));
            meta.poisson_sizes.push_back({s, mean, p});
        } else {
            std::binomial_distribution<long long> draw(population.convert_to<long long>(), p);
            count = static_cast<std::uint64_t>(draw(rng));
        }
        if (BigCount(count) > population) count = population.convert_to<std::uint64_t>();

        if (population <= std::numeric_limits<std::uint64_t>::max()) {
            insert_distinct_u64(n, s, population.convert_to<std::uint64_t>(), count, rng, g);
        } else {
            insert_distinct_big(n, s, population, count, rng, g);
        }
    }
}

}  // namespace

SampleResult sample_with_metadata(const RandomModelParams& params, SamplerStrategy strategy) {
    check_params(params);
    if (strategy == SamplerStrategy::Auto) {
        strategy = params.n <= kExhaustiveSamplerMaxN ? SamplerStrategy::Exhaustive : SamplerStrategy::PerSize;
    }
    SampleResult result{OrientedHypergraph(params.n), {}};
    result.metadata.strategy = strategy;
    if (strategy == SamplerStrategy::Exhaustive) {
        sample_exhaustive(params, result.graph);
    } else {
        sample_per_size(params, result.graph, result.metadata);
    }
    return result;
}

OrientedHypergraph sample(const RandomModelParams& params, SamplerStrategy strategy) {
    return sample_with_metadata(params, strategy).graph;
}

// ---------------------------------------------------------------------------
// Expectations and distributions

namespace {

void check_n(double n) {
    if (!(n >= 2.0)) throw Error(ErrorCategory::InvalidArgument, "expectations require n >= 2");
}

}  // namespace

LogValue expected_edges(double n, LogValue p) {
    check_n(n);
    return p * LogValue::from_log(log_total_edges(n));
}

LogValue expected_edges_of_size(double n, int s, LogValue p) {
    check_n(n);
    if (s < 2 || s > n) {
        throw Error(ErrorCategory::OutOfRange, "edge size " + std::to_string(s) + " outside [2, n]");
    }
    return p * LogValue::from_log(log_size_count(n, s));
}

LogValue expected_degree(double n, LogValue p) {
    check_n(n);
    return p * LogValue::from_log(log_per_vertex_total(n));
}

double size_probability(int n, int s) {
    if (n < 2) throw Error(ErrorCategory::InvalidArgument, "size_probability requires n >= 2");
    if (s < 2 || s > n) {
        throw Error(ErrorCategory::OutOfRange, "edge size " + std::to_string(s) + " outside [2, n]");
    }
    return std::exp(log_size_count(n, s) - log_total_edges(n));
}

double ratio_R_over_D(double n) {
    check_n(n);
    const double r = std::pow(2.0 / 3.0, n);
    return 0.5 * (1.0 - 2.0 * r + std::pow(3.0, -n)) / (1.0 / 3.0 - 0.5 * r);
}

double simple_graph_ratio(double n) { return n / 2.0; }

double log_expected_edges_asymptote(double n, const ProbabilityFamily& fam) {
    return fam.alpha * std::log(n) + n * std::log(3.0 / fam.beta);
}

namespace {

double log_choose(double trials, double k) {
    const double m = std::min(k, trials - k);
    if (trials < 1e15 || m > 1e6) return std::lgamma(trials + 1) - std::lgamma(k + 1) - std::lgamma(trials - k + 1);
    // lgamma differences lose all precision once trials dwarfs k
    double acc = 0.0;
    for (double t = 1; t <= m; ++t) acc += std::log((trials - m + t) / t);
    return acc;
}

double population_as_double(int n, const BigCount& exact, double log_value) {
    if (n <= kMaxDenseVertices) return exact.convert_to<double>();
    const double v = std::exp(log_value);
    if (std::isinf(v)) throw Error(ErrorCategory::ResourceLimit, "pmf population exceeds double range");
    return v;
}

}  // namespace

double binomial_pmf(double trials, double k, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCategory::InvalidArgument, "pmf probability outside [0, 1]");
    if (k < 0 || k > trials || k != std::floor(k)) return 0.0;
    if (p == 0.0) return k == 0 ? 1.0 : 0.0;
    if (p == 1.0) return k == trials ? 1.0 : 0.0;
    return std::exp(log_choose(trials, k) + k * std::log(p) + (trials - k) * std::log1p(-p));
}

double pmf_edges(int n, double p, double r) {
    check_n(n);
    const double trials =
        population_as_double(n, n <= kMaxDenseVertices ? total_edges(n) : BigCount(0), log_total_edges(n));
    return binomial_pmf(trials, r, p);
}

double pmf_edges_of_size(int n, int s, double p, double r) {
    check_n(n);
    if (s < 2 || s > n) return 0.0;
    const double trials =
        population_as_double(n, n <= kMaxDenseVertices ? size_count(n, s) : BigCount(0), log_size_count(n, s));
    return binomial_pmf(trials, r, p);
}

double pmf_degree(int n, double p, double d) {
    check_n(n);
    const double trials = population_as_double(n, n <= kMaxDenseVertices ? per_vertex_total(n) : BigCount(0),
                                               log_per_vertex_total(n));
    return binomial_pmf(trials, d, p);
}

// ---------------------------------------------------------------------------
// Curves

ExpectationCurve expectation_curve(CurveKind kind, const ProbabilityFamily& fam,
                                   const std::vector<double>& n_values, int size) {
    ExpectationCurve curve;
    curve.kind = kind;
    curve.size = size;
    if (kind == CurveKind::EdgesOfSize && size < 2) {
        throw Error(ErrorCategory::InvalidArgument, "edges-of-size curve requires s >= 2");
    }
    curve.points.reserve(n_values.size());
    for (double n : n_values) {
        LogValue v;
        switch (kind) {
            case CurveKind::TotalEdges: v = expected_edges(n, fam.p(n)); break;
            case CurveKind::EdgesOfSize:
                v = n < size ? LogValue::zero() : expected_edges_of_size(n, size, fam.p(n));
                break;
            case CurveKind::VertexDegree: v = expected_degree(n, fam.p(n)); break;
            case CurveKind::RatioRD: v = LogValue::from_double(ratio_R_over_D(n)); break;
        }
        curve.points.push_back({n, v});
    }
    return curve;
}

std::string curve_kind_name(CurveKind kind) {
    switch (kind) {
        case CurveKind::TotalEdges: return "total_edges";
        case CurveKind::EdgesOfSize: return "edges_of_size";
        case CurveKind::VertexDegree: return "vertex_degree";
        case CurveKind::RatioRD: return "ratio_r_over_d";
    }
    return "unknown";
}

nlohmann::json to_json(const ExpectationCurve& curve) {
    nlohmann::json j;
    j["kind"] = curve_kind_name(curve.kind);
    if (curve.kind == CurveKind::EdgesOfSize) j["size"] = curve.size;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& pt : curve.points) {
        nlohmann::json jp{{"n", pt.n}, {"sign", pt.value.sign}};
        if (pt.value.is_zero()) {
            jp["log_value"] = nullptr;
        } else {
            jp["log_value"] = pt.value.log_abs;
        }
        pts.push_back(jp);
    }
    j["points"] = pts;
    return j;
}

std::string to_csv(const ExpectationCurve& curve) {
    std::ostringstream out;
    out.precision(17);
    out << "n,log_value,sign\n";
    for (const auto& pt : curve.points) {
        out << pt.n << ',';
        if (pt.value.is_zero()) {
            out << "-inf";
        } else {
            out << pt.value.log_abs;
        }
        out << ',' << pt.value.sign << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Extrema

double n_max_equation(double n, double s, double alpha) {
    return alpha / n + std::log(n) - std::log(3.0) - std::log(n - s);
}

double s_max_equation(double s, double n) {
    const double ln2 = std::numbers::ln2;
    // 2^(s-1) / (2^(s-1) - 1) written to stay finite for large s
    return ln2 / -std::expm1(-(s - 1) * ln2) + std::log((n - s) / s);
}

namespace {

template <class F>
ExtremumResult bisect(F f, double lo, double hi, ExtremumVariable variable) {
    double flo = f(lo);
    ExtremumResult r;
    r.variable = variable;
    int it = 0;
    double mid = 0.5 * (lo + hi);
    double fmid = f(mid);
    for (; it < 400; ++it) {
        mid = 0.5 * (lo + hi);
        fmid = f(mid);
        if (fmid == 0.0 || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::abs(mid)) break;
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    r.value = mid;
    r.residual = fmid;
    r.iterations = it + 1;
    return r;
}

}  // namespace

ExtremumResult solve_n_max(int s, double alpha) {
    if (s < 2) throw Error(ErrorCategory::InvalidArgument, "solve_n_max requires s >= 2");
    auto f = [&](double n) { return n_max_equation(n, s, alpha); };
    const double lo = s + 1.0;
    double hi = 100.0 * s + 1000.0;
    for (int expand = 0; expand < 60 && f(lo) > 0 && f(hi) > 0; ++expand) hi *= 2;
    if ((f(lo) > 0) == (f(hi) > 0)) {
        std::ostringstream msg;
        msg << "n_max equation has no sign change on [" << lo << ", " << hi << "] for s=" << s
            << ", alpha=" << alpha;
        throw Error(ErrorCategory::NoRoot, msg.str());
    }
    ExtremumResult r = bisect(f, lo, hi, ExtremumVariable::NMax);

    // integer argmax of ln E[R_s] = alpha ln n - n ln 3 + ln u_s(n)
    const ProbabilityFamily fam{alpha, 3.0};
    auto log_expectation = [&](double n) {
        if (n <= s) return -std::numeric_limits<double>::infinity();
        return fam.log_p(n) + log_size_count(n, s);
    };
    const double below = std::floor(r.value);
    const double above = std::ceil(r.value);
    r.integer_value = static_cast<long>(log_expectation(above) > log_expectation(below) ? above : below);
    r.assumption = "p = n^alpha / 3^n; stationarity condition uses the Stirling form of C(n, s)";
    return r;
}

ExtremumResult solve_s_max(long n) {
    if (n < 4) throw Error(ErrorCategory::InvalidArgument, "solve_s_max requires n >= 4");
    const double nd = static_cast<double>(n);
    auto f = [&](double s) { return s_max_equation(s, nd); };
    ExtremumResult r = bisect(f, 2.0, nd - 1.0, ExtremumVariable::SMax);

    const long below = static_cast<long>(std::floor(r.value));
    const long above = static_cast<long>(std::ceil(r.value));
    bool take_above;
    if (n <= 4000) {
        take_above = size_count(static_cast<int>(n), static_cast<int>(above)) >
                     size_count(static_cast<int>(n), static_cast<int>(below));
    } else {
        take_above = log_size_count(nd, static_cast<double>(above)) > log_size_count(nd, static_cast<double>(below));
    }
    r.integer_value = take_above ? above : below;
    r.assumption = "p independent of s; the maximizing size is the same for every such p";
    return r;
}

nlohmann::json to_json(const ExtremumResult& result) {
    return {{"variable", result.variable == ExtremumVariable::NMax ? "n_max" : "s_max"},
            {"value", result.value},
            {"integer_value", result.integer_value},
            {"residual", result.residual},
            {"iterations", result.iterations},
            {"assumption", result.assumption}};
}

}  // namespace ohg
