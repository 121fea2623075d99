#include "ohg/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "ohg/combinatorics.hpp"
#include "ohg/error.hpp"
#include "ohg/random_model.hpp"
#include "ohg/stats.hpp"

namespace ohg {

std::vector<OrientedHyperedge> brute_force_enumerate(int n) {
    if (n < 2 || n > kBruteForceMaxN) {
        throw Error(ErrorCategory::ResourceLimit,
                    "brute-force enumeration supports n in [2, " + std::to_string(kBruteForceMaxN) + "]");
    }
    std::vector<OrientedHyperedge> out;
    const std::uint32_t limit = 1U << n;
    for (std::uint32_t x = 1; x < limit; ++x) {
        for (std::uint32_t y = 1; y < limit; ++y) {
            if ((x & y) != 0) continue;
            if (std::countr_zero(x) >= std::countr_zero(y)) continue;
            out.emplace_back(VertexSet::from_mask(n, x), VertexSet::from_mask(n, y));
        }
    }
    return out;
}

std::vector<std::uint64_t> degree_sequence(const OrientedHypergraph& g) {
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : g.edges()) {
        for (int v : e.members().members()) ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

std::map<int, std::uint64_t> size_histogram(const OrientedHypergraph& g) {
    std::map<int, std::uint64_t> h;
    for (int s = 2; s <= g.vertex_count(); ++s) h[s] = 0;
    for (const auto& e : g.edges()) ++h[edge_size(e)];
    return h;
}

double pair_degree_total(int n) {
    if (n < 2) throw Error(ErrorCategory::InvalidArgument, "pair_degree_total requires n >= 2");
    return 2.0 * std::pow(3.0, n - 2) - std::pow(2.0, n - 2);
}

double ratio_diagnostic(const OrientedHypergraph& g) {
    if (g.edge_count() == 0) {
        throw Error(ErrorCategory::InvalidArgument, "ratio diagnostic undefined for an edge-less hypergraph");
    }
    const std::uint64_t degree_sum = hypergraph_degree(g);
    return static_cast<double>(g.edge_count() * static_cast<std::uint64_t>(g.vertex_count())) /
           static_cast<double>(degree_sum);
}

namespace {

DistributionSummary fit_sizes(const OrientedHypergraph& g, double per_test_alpha, double min_expected) {
    const int n = g.vertex_count();
    const auto hist = size_histogram(g);
    const BigCount total = total_edges(n);
    const double edges = static_cast<double>(g.edge_count());

    DistributionSummary d;
    d.method = "pearson_chi_square_pooled";
    std::vector<double> observed;
    std::vector<double> expected;
    for (const auto& [s, count] : hist) {
        const double prob = static_cast<double>(size_count(n, s).convert_to<long double>() /
                                                total.convert_to<long double>());
        d.support.push_back(s);
        d.empirical_counts.push_back(count);
        d.theoretical_pmf.push_back(prob);
        observed.push_back(static_cast<double>(count));
        expected.push_back(edges * prob);
    }
    const auto r = pearson_chi_square(observed, expected, min_expected);
    d.statistic = r.statistic;
    d.dof = r.dof;
    d.p_value = r.p_value;
    d.verdict = r.p_value < per_test_alpha ? Verdict::Rejected : Verdict::ConsistentWithRandom;
    return d;
}

DistributionSummary fit_degrees(const OrientedHypergraph& g, double p, bool p_supplied, double per_test_alpha) {
    const int n = g.vertex_count();
    const auto deg = degree_sequence(g);

    DistributionSummary d;
    d.method = "binomial_dispersion_exchangeable";
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto v : deg) ++counts[v];
    for (const auto& [value, c] : counts) {
        d.support.push_back(static_cast<long>(value));
        d.empirical_counts.push_back(c);
        d.theoretical_pmf.push_back(pmf_degree(n, p, static_cast<double>(value)));
    }

    const double u_n = per_vertex_total(n).convert_to<double>();
    const double u_pair = pair_degree_total(n);
    const double mean = static_cast<double>(std::accumulate(deg.begin(), deg.end(), std::uint64_t{0})) / n;
    double spread = 0.0;
    for (auto v : deg) spread += (static_cast<double>(v) - mean) * (static_cast<double>(v) - mean);
    const double level_gap = mean - p * u_n;

    // Var(d_v) = q u_n, Cov(d_u, d_v) = q u_pair with q = p(1-p).
    const double q = p * (1.0 - p);
    const double within_var = q * (u_n - u_pair);
    const double mean_var = q * (u_n + (n - 1) * u_pair) / n;

    auto ratio = [](double num, double den) {
        if (den > 0) return num / den;
        return num <= 1e-9 ? 0.0 : std::numeric_limits<double>::infinity();
    };
    d.statistic = ratio(spread, within_var);
    d.dof = n - 1;
    if (p_supplied) {
        d.statistic += ratio(level_gap * level_gap, mean_var);
        d.dof = n;
    }
    if (std::isinf(d.statistic)) {
        d.p_value = 0.0;
    } else {
        d.p_value = d.dof > 0 ? chi_square_sf(d.statistic, d.dof) : 1.0;
    }
    d.verdict = d.p_value < per_test_alpha ? Verdict::Rejected : Verdict::ConsistentWithRandom;
    return d;
}

}  // namespace

RandomnessReport fit_randomness(const OrientedHypergraph& g, std::optional<double> p, const FitOptions& options) {
    if (p && !(*p >= 0.0 && *p <= 1.0)) {
        throw Error(ErrorCategory::InvalidArgument, "edge probability must lie in [0, 1]");
    }
    if (!(options.significance > 0.0 && options.significance < 1.0)) {
        throw Error(ErrorCategory::InvalidArgument, "significance must lie in (0, 1)");
    }
    const int n = g.vertex_count();
    if (n < 2) throw Error(ErrorCategory::InvalidArgument, "randomness test requires n >= 2");

    RandomnessReport r;
    r.n = n;
    r.observed_edges = g.edge_count();
    r.observed_degree_sum = hypergraph_degree(g);
    r.theoretical_ratio = ratio_R_over_D(n);
    r.simple_graph_ratio = simple_graph_ratio(n);
    r.p_hat = static_cast<double>(static_cast<long double>(r.observed_edges) / total_edges(n).convert_to<long double>());
    r.p_estimated = !p.has_value();
    r.p_used = p.value_or(r.p_hat);

    if (r.observed_edges == 0) {
        r.flags.emplace_back("no_edges");
        r.verdict = Verdict::Rejected;
        for (auto* fit : {&r.size_fit, &r.degree_fit}) {
            fit->method = "not_applicable";
            fit->p_value = 0.0;
            fit->verdict = Verdict::Rejected;
        }
        return r;
    }

    r.observed_ratio = ratio_diagnostic(g);
    const double per_test_alpha = options.significance / 2.0;
    r.size_fit = fit_sizes(g, per_test_alpha, options.min_expected);
    r.degree_fit = fit_degrees(g, r.p_used, p.has_value(), per_test_alpha);
    if (r.size_fit.dof <= 0) r.flags.emplace_back("size_fit_uninformative");
    if (r.degree_fit.dof <= 0) r.flags.emplace_back("degree_fit_uninformative");
    const bool rejected = r.size_fit.verdict == Verdict::Rejected || r.degree_fit.verdict == Verdict::Rejected;
    r.verdict = rejected ? Verdict::Rejected : Verdict::ConsistentWithRandom;
    return r;
}

CalibrationResult calibrate_fit(int n, double p, int trials, std::uint64_t base_seed, int jobs, bool supply_p,
                                const FitOptions& options) {
    if (trials < 0) throw Error(ErrorCategory::InvalidArgument, "trials must be non-negative");
    jobs = std::max(1, std::min(jobs, std::max(trials, 1)));
    std::vector<char> rejected(static_cast<std::size_t>(trials), 0);
    auto worker = [&](int first) {
        for (int t = first; t < trials; t += jobs) {
            const RandomModelParams params{n, p, derive_seed(base_seed, static_cast<std::uint64_t>(t))};
            const auto g = sample(params);
            const auto report = fit_randomness(g, supply_p ? std::optional<double>(p) : std::nullopt, options);
            rejected[static_cast<std::size_t>(t)] = report.verdict == Verdict::Rejected ? 1 : 0;
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker, j);
    worker(0);
    for (auto& t : pool) t.join();

    CalibrationResult c;
    c.trials = trials;
    c.rejections = static_cast<int>(std::count(rejected.begin(), rejected.end(), 1));
    return c;
}

std::string verdict_name(Verdict v) {
    return v == Verdict::Rejected ? "rejected" : "consistent_with_random";
}

nlohmann::json to_json(const DistributionSummary& d) {
    return {{"method", d.method},
            {"support", d.support},
            {"empirical_counts", d.empirical_counts},
            {"theoretical_pmf", d.theoretical_pmf},
            {"statistic", d.statistic},
            {"dof", d.dof},
            {"p_value", d.p_value},
            {"verdict", verdict_name(d.verdict)}};
}

nlohmann::json to_json(const RandomnessReport& r) {
    return {{"n", r.n},
            {"observed_edges", r.observed_edges},
            {"observed_degree_sum", r.observed_degree_sum},
            {"observed_ratio", r.observed_ratio},
            {"theoretical_ratio", r.theoretical_ratio},
            {"asymptotic_ratio", r.asymptotic_ratio},
            {"simple_graph_ratio", r.simple_graph_ratio},
            {"p_hat", r.p_hat},
            {"p_used", r.p_used},
            {"p_estimated", r.p_estimated},
            {"size_fit", to_json(r.size_fit)},
            {"degree_fit", to_json(r.degree_fit)},
            {"verdict", verdict_name(r.verdict)},
            {"flags", r.flags}};
}

std::string to_text(const RandomnessReport& r) {
    std::ostringstream out;
    out << std::setprecision(6);
    out << "vertices            " << r.n << '\n';
    out << "edges               " << r.observed_edges << '\n';
    out << "degree sum          " << r.observed_degree_sum << '\n';
    out << "p (" << (r.p_estimated ? "estimated" : "given") << ")       " << r.p_used << '\n';
    out << "ratio |E|/mean deg  " << r.observed_ratio << "  (random model " << r.theoretical_ratio
        << ", limit 1.5, simple graph " << r.simple_graph_ratio << ")\n";
    out << "size fit            chi2=" << r.size_fit.statistic << " dof=" << r.size_fit.dof
        << " p=" << r.size_fit.p_value << "  " << verdict_name(r.size_fit.verdict) << '\n';
    out << "degree fit          chi2=" << r.degree_fit.statistic << " dof=" << r.degree_fit.dof
        << " p=" << r.degree_fit.p_value << "  " << verdict_name(r.degree_fit.verdict) << '\n';
    out << "verdict             " << verdict_name(r.verdict) << '\n';
    for (const auto& f : r.flags) out << "flag                " << f << '\n';
    return out.str();
}

}  // namespace ohg
