// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ohg/analysis.hpp"
#include "ohg/combinatorics.hpp"
#include "ohg/random_model.hpp"
#include "ohg/reaction_io.hpp"
#include "ohg/stats.hpp"

using namespace ohg;

namespace {

// Tolerances and budgets
constexpr double kRatioTolerance = 1e-8;
constexpr double kMonteCarloRelTolerance = 0.01;
constexpr double kResidualTolerance = 1e-9;
constexpr double kPowerSlopeTolerance = 0.05;
constexpr double kLinearSlopeTolerance = 0.01;
constexpr double kSamplerSignificance = 1e-3;
constexpr double kMaxRejectionRate = 0.02;

constexpr double kBudgetCounting = 1e-3;
constexpr double kBudgetOracle = 60;
constexpr double kBudgetRatio = 30;
constexpr double kBudgetExtrema = 1;
constexpr double kBudgetSlopes = 5;
constexpr double kBudgetSampler = 120;
constexpr double kBudgetCalibration = 300;
constexpr double kBudgetParser = 30;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = elapsed <= budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %2d %s: %s; %.3f s (budget %g s)%s\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                elapsed, budget_s, in_time ? "" : " OVER BUDGET");
    std::fflush(stdout);
}

template <typename... T>
std::string cat(const T&... parts) {
    std::ostringstream s;
    s.precision(10);
    (s << ... << parts);
    return s.str();
}

Outcome counting_regression() {
    const long totals[] = {1, 6, 25, 90};
    const long impossible[] = {3, 30, 171, 810};
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
        if (total_edges(n) != totals[n - 2] || impossible_pairs(n) != impossible[n - 2]) {
            o.pass = false;
            o.detail += cat("mismatch at n=", n, " ");
        }
    }
    if (o.pass) o.detail = "u_r(2..5) = 1 6 25 90, z(2..5) = 3 30 171 810";
    return o;
}

Outcome oracle_equivalence() {
    for (int n = 2; n <= 10; ++n) {
        const auto edges = brute_force_enumerate(n);
        std::map<int, long> sizes;
        std::map<BlockIndex, long> blocks;
        long touching = 0;
        for (const auto& e : edges) {
            ++sizes[edge_size(e)];
            ++blocks[block_of(e)];
            if (e.touches(0)) ++touching;
        }
        if (total_edges(n) != static_cast<long>(edges.size())) return {false, cat("total differs at n=", n)};
        if (per_vertex_total(n) != touching) return {false, cat("per-vertex total differs at n=", n)};
        for (int s = 2; s <= n; ++s) {
            if (size_count(n, s) != sizes[s]) return {false, cat("size ", s, " differs at n=", n)};
        }
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                const long seen = i <= j ? blocks[{i, j}] : blocks[{j, i}];
                if (block_count(n, i, j) != seen) return {false, cat("block ", i, ",", j, " differs at n=", n)};
            }
        }
    }
    return {true, "n = 2..10 exact, 28501 edges at n=10"};
}

Outcome size_degree_identity() {
    std::mt19937_64 rng(2718);
    int checked = 0;
    for (int k = 0; k < 1000; ++k) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const double p = 0.05 * static_cast<double>(1 + rng() % 19);
        const auto g = sample({n, p, rng()});
        if (hypergraph_size(g) != hypergraph_degree(g)) return {false, cat("differs at instance ", k)};
        ++checked;
    }
    return {true, cat(checked, " instances, n in [2,12], p in {0.05..0.95}")};
}

Outcome toy_regression() {
    const auto parsed = parse_reactions(
        "r1: A -> B\n"
        "r2: A + C -> D\n"
        "r3: B + C -> D\n"
        "r4: B + C -> A + D\n");
    const auto built = build_hypergraph(parsed.records);
    const auto& g = built.graph;
    const auto s = hypergraph_size(g);
    const auto d = hypergraph_degree(g);
    const auto degrees = degree_sequence(g);
    const auto hist = size_histogram(g);
    const BigCount bound = per_vertex_total(4) * 4;
    const bool ok = s == 12 && d == 12 && degrees == std::vector<std::uint64_t>{3, 3, 3, 3} &&
                    hist == std::map<int, std::uint64_t>{{2, 1}, {3, 2}, {4, 1}} && bound == 76 && BigCount(s) <= bound;
    return {ok, cat("s=", s, " d=", d, " degrees=[", degrees[0], ",", degrees[1], ",", degrees[2], ",", degrees[3],
                    "] histogram={2:", hist.at(2), ",3:", hist.at(3), ",4:", hist.at(4), "} bound=", bound)};
}

Outcome ratio_law() {
    const double gap = std::fabs(ratio_R_over_D(50) - 1.5);
    constexpr int kSamples = 100000;
    double edges = 0;
    double degree_sum = 0;
    for (int k = 0; k < kSamples; ++k) {
        const auto g = sample({8, 0.3, derive_seed(5150, static_cast<std::uint64_t>(k))});
        edges += static_cast<double>(g.edge_count());
        degree_sum += static_cast<double>(hypergraph_degree(g));
    }
    const double empirical = (edges / kSamples) / (degree_sum / kSamples / 8.0);
    const double closed = ratio_R_over_D(8);
    const double rel = std::fabs(empirical / closed - 1.0);
    return {gap <= kRatioTolerance && rel <= kMonteCarloRelTolerance,
            cat("|ratio(50)-1.5|=", gap, " Monte Carlo ", empirical, " vs ", closed, " (rel ", rel, ")")};
}

Outcome extremum_reproduction() {
    const auto smax = solve_s_max(100);
    bool ok = smax.integer_value == 67 && std::fabs(smax.residual) <= kResidualTolerance;
    std::string detail = cat("s_max(100)=", smax.integer_value, " n_max=");
    const long expected[] = {76, 151, 226, 301};
    for (int k = 0; k < 4; ++k) {
        const auto r = solve_n_max(50 * (k + 1), 2.0);
        ok = ok && r.integer_value == expected[k] && std::fabs(r.residual) <= kResidualTolerance;
        detail += cat(r.integer_value, k < 3 ? "," : "");
    }
    return {ok, detail};
}

Outcome asymptotic_slopes() {
    std::vector<double> ns;
    for (int k = 0; k <= 40; ++k) ns.push_back(std::round(1e3 * std::pow(100.0, k / 40.0)));
    std::vector<double> log_n;
    for (double n : ns) log_n.push_back(std::log(n));

    bool ok = true;
    std::string detail = "beta=3 slopes";
    for (double alpha : {-1.0, 0.0, 1.0, 2.0}) {
        const auto curve = expectation_curve(CurveKind::TotalEdges, {alpha, 3.0}, ns);
        std::vector<double> y;
        for (const auto& pt : curve.points) y.push_back(pt.value.log_abs);
        const double slope = fit_line(log_n, y).slope;
        ok = ok && std::fabs(slope - alpha) <= kPowerSlopeTolerance;
        detail += cat(" ", slope);
    }
    detail += "; beta=1 slopes";
    for (double alpha : {0.0, -1.0, -2.0, -3.0}) {
        const auto curve = expectation_curve(CurveKind::TotalEdges, {alpha, 1.0}, ns);
        std::vector<double> y;
        for (const auto& pt : curve.points) y.push_back(pt.value.log_abs);
        const double slope = fit_line(ns, y).slope;
        ok = ok && std::fabs(slope - std::log(3.0)) <= kLinearSlopeTolerance;
        detail += cat(" ", slope);
    }
    return {ok, detail};
}

Outcome sampler_fidelity() {
    constexpr int kSamples = 100000;
    constexpr int n = 6;
    // R_s histograms per size class, one per strategy
    std::vector<std::map<std::uint64_t, double>> exhaustive(n + 1);
    std::vector<std::map<std::uint64_t, double>> per_size(n + 1);
    for (int k = 0; k < kSamples; ++k) {
        const auto a = sample({n, 0.3, derive_seed(11, static_cast<std::uint64_t>(k))}, SamplerStrategy::Exhaustive);
        const auto b = sample({n, 0.3, derive_seed(22, static_cast<std::uint64_t>(k))}, SamplerStrategy::PerSize);
        for (const auto& [s, c] : size_histogram(a)) exhaustive[s][c] += 1;
        for (const auto& [s, c] : size_histogram(b)) per_size[s][c] += 1;
    }
    // Bonferroni over the five size classes keeps the family-wise level
    const double per_test = kSamplerSignificance / (n - 1);
    bool ok = true;
    std::string detail = "p-values";
    for (int s = 2; s <= n; ++s) {
        std::set<std::uint64_t> support;
        for (const auto& [v, c] : exhaustive[s]) support.insert(v);
        for (const auto& [v, c] : per_size[s]) support.insert(v);
        std::vector<double> x;
        std::vector<double> y;
        for (auto v : support) {
            x.push_back(exhaustive[s].count(v) ? exhaustive[s][v] : 0.0);
            y.push_back(per_size[s].count(v) ? per_size[s][v] : 0.0);
        }
        const auto r = two_sample_chi_square(x, y);
        ok = ok && r.p_value >= per_test;
        detail += cat(" s", s, "=", r.p_value);
    }

    // rank/unrank bijection, n <= 8
    for (int m = 2; m <= 8 && ok; ++m) {
        std::set<OrientedHyperedge> seen;
        for (int s = 2; s <= m; ++s) {
            const auto count = size_count(m, s).convert_to<std::uint64_t>();
            for (std::uint64_t i = 0; i < count; ++i) {
                const auto e = unrank_edge(m, s, i);
                const auto [rs, ri] = rank_edge(e);
                if (rs != s || ri != i) return {false, cat("rank(unrank) broken at n=", m, " s=", s, " i=", i)};
                seen.insert(e);
            }
        }
        if (BigCount(seen.size()) != total_edges(m)) return {false, cat("unrank not onto at n=", m)};
    }
    detail += "; bijection n<=8 verified";
    return {ok, detail};
}

Outcome calibration() {
    const auto c = calibrate_fit(8, 0.3, 1000, 77, 1);
    auto adversarial = complete_hypergraph(6);
    for (const auto& e : brute_force_enumerate(6)) {
        if (edge_size(e) == 2) adversarial.erase(e);
    }
    const auto r = fit_randomness(adversarial);
    const bool ok = c.rejection_rate() <= kMaxRejectionRate && r.verdict == Verdict::Rejected;
    return {ok, cat("rejection rate ", c.rejection_rate(), " (", c.rejections, "/1000); adversarial ",
                    verdict_name(r.verdict), " (size fit p=", r.size_fit.p_value, ")")};
}

std::string random_name(std::mt19937_64& rng) {
    static const std::string alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_(),-";
    std::string s;
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) s += alphabet[rng() % alphabet.size()];
    // names never start or end with '-' and are never pure integers
    if (s.front() == '-') s.insert(s.begin(), 'x');
    if (s.back() == '-') s.push_back('x');
    if (s.find_first_not_of("0123456789") == std::string::npos) s.push_back('m');
    return s;
}

Outcome parser_round_trip() {
    std::mt19937_64 rng(4242);
    int failures_seen = 0;
    std::string first_failure;
    for (int k = 0; k < 10000; ++k) {
        ReactionRecord r;
        r.source_line = 1;
        if (rng() % 2) r.id = random_name(rng);
        auto fill = [&](std::vector<std::string>& side) {
            for (int t = 1 + static_cast<int>(rng() % 5); t > 0; --t) {
                auto nm = random_name(rng);
                if (std::find(side.begin(), side.end(), nm) == side.end()) side.push_back(nm);
            }
        };
        fill(r.educts);
        fill(r.products);
        switch (rng() % 3) {
            case 0: r.catalyst = random_name(rng); break;
            case 1: r.arrow = ArrowKind::Reversible; break;
            default: break;
        }
        const auto text = format_reaction(r);
        bool same = false;
        try {
            const auto parsed = parse_reactions(text);
            same = parsed.records.size() == 1 && parsed.records[0] == r && parsed.warnings.empty();
        } catch (const std::exception&) {
        }
        if (!same && failures_seen++ == 0) first_failure = text;
    }

    const auto split =
        build_hypergraph(parse_reactions("A + B -> B + C").records, AutocatalyticPolicy::SplitViaIntermediate);
    const auto& names = split.names;
    bool split_ok = split.graph.vertex_count() == 4 && split.graph.edge_count() == 2 && names.index_of("Z_0");
    if (split_ok) {
        const int a = *names.index_of("A");
        const int b = *names.index_of("B");
        const int c = *names.index_of("C");
        const int z = *names.index_of("Z_0");
        split_ok = split.graph.contains({VertexSet(4, {a, b}), VertexSet(4, {z})}) &&
                   split.graph.contains({VertexSet(4, {z}), VertexSet(4, {b, c})});
    }
    std::string detail = cat(10000 - failures_seen, "/10000 round-trips; split A+B->Z, Z->B+C ",
                             split_ok ? "ok" : "wrong");
    if (failures_seen > 0) detail += " first failure: " + first_failure;
    return {failures_seen == 0 && split_ok, detail};
}

}  // namespace

int main() {
    report(1, "Counting regression", kBudgetCounting, counting_regression);
    report(2, "Oracle equivalence", kBudgetOracle, oracle_equivalence);
    report(3, "Size/degree identity", kBudgetOracle, size_degree_identity);
    report(4, "Toy-space regression", kBudgetOracle, toy_regression);
    report(5, "Ratio law", kBudgetRatio, ratio_law);
    report(6, "Extremum reproduction", kBudgetExtrema, extremum_reproduction);
    report(7, "Asymptotic slopes", kBudgetSlopes, asymptotic_slopes);
    report(8, "Sampler fidelity", kBudgetSampler, sampler_fidelity);
    report(9, "Randomness test calibration", kBudgetCalibration, calibration);
    report(10, "Parser round-trip", kBudgetParser, parser_round_trip);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
