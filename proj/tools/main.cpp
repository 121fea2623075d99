// ohg: command-line front end for the oriented hypergraph library.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "ohg/analysis.hpp"
#include "ohg/combinatorics.hpp"
#include "ohg/error.hpp"
#include "ohg/random_model.hpp"
#include "ohg/reaction_io.hpp"

namespace {

using namespace ohg;

// Used when neither --seed, OHG_SEED nor --entropy is given.
constexpr std::uint64_t kDefaultSeed = 20210901;
constexpr const char* kSeedEnv = "OHG_SEED";

enum class Format { Json, Csv, Text };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCategory::Io, "cannot open " + path + " for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string fmt_double(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

void require_format(Format f, std::initializer_list<Format> allowed, const char* cmd) {
    for (auto a : allowed) {
        if (a == f) return;
    }
    throw Error(ErrorCategory::InvalidArgument, std::string("output format not supported by ") + cmd);
}

// ---------------------------------------------------------------------------

struct CountArgs {
    int n = 0;
    bool blocks = false;
};

std::string run_count(const CountArgs& a, Format f) {
    const auto report = full_report(a.n, a.blocks);
    if (f == Format::Json) return to_json(report).dump(2);
    if (f == Format::Csv) return to_csv(report);
    std::ostringstream out;
    out << "n                 " << report.n << '\n';
    out << "total_edges       " << report.total_edges << '\n';
    out << "per_vertex_total  " << report.per_vertex_total << '\n';
    out << "max_size_degree   " << report.max_size_degree << '\n';
    out << "impossible_pairs  " << report.impossible_pairs << '\n';
    for (const auto& [s, c] : report.per_size) out << "size " << s << "  " << c << '\n';
    if (report.per_block) {
        for (const auto& [b, c] : *report.per_block) out << "block " << b.i << ':' << b.j << "  " << c << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------

struct ProbabilityArgs {
    std::optional<double> p;
    std::optional<double> alpha;
    std::optional<double> beta;

    double resolve(int n) const {
        if (p.has_value() == (alpha.has_value() || beta.has_value())) {
            throw Error(ErrorCategory::InvalidArgument, "give exactly one of --p or --alpha/--beta");
        }
        if (p) return *p;
        if (!alpha || !beta) throw Error(ErrorCategory::InvalidArgument, "--alpha and --beta go together");
        return ProbabilityFamily{*alpha, *beta}.p(n).value();
    }
};

struct SeedArgs {
    std::optional<std::uint64_t> seed;
    bool entropy = false;

    // --entropy, then --seed, then OHG_SEED, then the default constant
    std::uint64_t resolve() const {
        if (entropy) {
            if (seed) throw Error(ErrorCategory::InvalidArgument, "--seed and --entropy exclude each other");
            std::random_device rd;
            return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        }
        if (seed) return *seed;
        if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                const auto v = std::stoull(env, &used, 0);
                if (used == std::string(env).size()) return v;
            } catch (const std::exception&) {
            }
            throw Error(ErrorCategory::InvalidArgument, std::string(kSeedEnv) + " is not an unsigned integer");
        }
        return kDefaultSeed;
    }
};

struct SampleArgs {
    int n = 0;
    ProbabilityArgs prob;
    SeedArgs seed;
    int count = 1;
    int jobs = 1;
    std::string output_dir;
    std::string strategy = "auto";
};

std::string strategy_name(SamplerStrategy s) {
    switch (s) {
        case SamplerStrategy::Exhaustive: return "exhaustive";
        case SamplerStrategy::PerSize: return "per_size";
        case SamplerStrategy::Auto: return "auto";
    }
    return "auto";
}

std::string run_sample(const SampleArgs& a, Format f) {
    if (a.count < 1) throw Error(ErrorCategory::InvalidArgument, "--count must be positive");
    const double p = a.prob.resolve(a.n);
    const std::uint64_t seed = a.seed.resolve();
    const std::map<std::string, SamplerStrategy> strategies{
        {"auto", SamplerStrategy::Auto}, {"exhaustive", SamplerStrategy::Exhaustive}, {"per-size", SamplerStrategy::PerSize}};
    const auto strategy = strategies.at(a.strategy);
    if (!a.output_dir.empty()) std::filesystem::create_directories(a.output_dir);

    // replicate k always uses derive_seed(seed, k); jobs only split the work
    struct Summary {
        std::uint64_t seed = 0;
        std::size_t edges = 0;
        std::uint64_t degree_sum = 0;
        std::map<int, std::uint64_t> sizes;
        SampleMetadata meta;
        std::string file;
    };
    std::vector<Summary> rows(static_cast<std::size_t>(a.count));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(a.count));
    const int jobs = std::max(1, std::min(a.jobs, a.count));
    auto worker = [&](int first) {
        for (int k = first; k < a.count; k += jobs) {
            auto& row = rows[static_cast<std::size_t>(k)];
            try {
                row.seed = derive_seed(seed, static_cast<std::uint64_t>(k));
                const auto r = sample_with_metadata({a.n, p, row.seed}, strategy);
                row.edges = r.graph.edge_count();
                row.degree_sum = hypergraph_degree(r.graph);
                row.sizes = size_histogram(r.graph);
                row.meta = r.metadata;
                if (!a.output_dir.empty()) {
                    std::ostringstream name;
                    name << "sample_" << std::setw(5) << std::setfill('0') << k << ".json";
                    const auto path = std::filesystem::path(a.output_dir) / name.str();
                    write_hypergraph_file(path, r.graph);
                    row.file = path.string();
                }
            } catch (...) {
                failures[static_cast<std::size_t>(k)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker, j);
    worker(0);
    for (auto& t : pool) t.join();
    for (const auto& e : failures) {
        if (e) std::rethrow_exception(e);
    }

    double mean_edges = 0;
    for (const auto& r : rows) mean_edges += static_cast<double>(r.edges);
    mean_edges /= a.count;

    if (f == Format::Csv) {
        std::ostringstream out;
        out << "replicate,seed,edges,degree_sum,strategy,poisson_sizes,file\n";
        for (std::size_t k = 0; k < rows.size(); ++k) {
            out << k << ',' << rows[k].seed << ',' << rows[k].edges << ',' << rows[k].degree_sum << ','
                << strategy_name(rows[k].meta.strategy) << ',' << rows[k].meta.poisson_sizes.size() << ','
                << rows[k].file << '\n';
        }
        return out.str();
    }
    if (f == Format::Text) {
        std::ostringstream out;
        out << "n " << a.n << "  p " << fmt_double(p) << "  seed " << seed << "  replicates " << a.count << '\n';
        out << "mean edges " << fmt_double(mean_edges) << "  expected " << fmt_double(expected_edges(a.n, p).value())
            << '\n';
        for (std::size_t k = 0; k < rows.size(); ++k) {
            out << "replicate " << k << "  edges " << rows[k].edges << "  degree_sum " << rows[k].degree_sum << '\n';
        }
        return out.str();
    }
    nlohmann::json j;
    j["n"] = a.n;
    j["p"] = p;
    j["seed"] = seed;
    j["expected_edges"] = expected_edges(a.n, p).value();
    j["mean_edges"] = mean_edges;
    nlohmann::json reps = nlohmann::json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        nlohmann::json sizes = nlohmann::json::object();
        for (const auto& [s, c] : rows[k].sizes) sizes[std::to_string(s)] = c;
        nlohmann::json poisson = nlohmann::json::array();
        for (const auto& sw : rows[k].meta.poisson_sizes) {
            poisson.push_back({{"size", sw.size}, {"mean", sw.mean}, {"total_variation_bound", sw.total_variation_bound}});
        }
        nlohmann::json rep{{"replicate", k},
                           {"seed", rows[k].seed},
                           {"edges", rows[k].edges},
                           {"degree_sum", rows[k].degree_sum},
                           {"size_histogram", sizes},
                           {"strategy", strategy_name(rows[k].meta.strategy)},
                           {"poisson_sizes", poisson}};
        if (!rows[k].file.empty()) rep["file"] = rows[k].file;
        reps.push_back(rep);
    }
    j["replicates"] = reps;
    return j.dump(2);
}

// ---------------------------------------------------------------------------

struct CurveArgs {
    double alpha = 0.0;
    double beta = 3.0;
    double n_min = 10;
    double n_max = 1000;
    int points = 50;
    bool log_spaced = false;
    std::vector<int> sizes;
};

std::vector<double> curve_grid(const CurveArgs& a) {
    if (!(a.n_min >= 2) || !(a.n_max >= a.n_min) || a.points < 1) {
        throw Error(ErrorCategory::InvalidArgument, "curve range needs 2 <= n-min <= n-max and points >= 1");
    }
    std::vector<double> ns;
    for (int k = 0; k < a.points; ++k) {
        const double t = a.points == 1 ? 0.0 : static_cast<double>(k) / (a.points - 1);
        double n = a.log_spaced ? std::exp(std::log(a.n_min) + t * (std::log(a.n_max) - std::log(a.n_min)))
                                : a.n_min + t * (a.n_max - a.n_min);
        n = std::round(n);
        if (ns.empty() || n != ns.back()) ns.push_back(n);
    }
    return ns;
}

std::string log_cell(const LogValue& v) { return v.is_zero() ? "" : fmt_double(v.log_abs); }

std::string run_curves(const CurveArgs& a, Format f) {
    require_format(f, {Format::Json, Format::Csv}, "curves");
    const ProbabilityFamily fam{a.alpha, a.beta};
    const auto ns = curve_grid(a);
    for (int s : a.sizes) {
        if (s < 2) throw Error(ErrorCategory::InvalidArgument, "--sizes entries must be >= 2");
    }
    const auto total = expectation_curve(CurveKind::TotalEdges, fam, ns);
    const auto degree = expectation_curve(CurveKind::VertexDegree, fam, ns);
    const auto ratio = expectation_curve(CurveKind::RatioRD, fam, ns);
    std::vector<ExpectationCurve> by_size;
    for (int s : a.sizes) by_size.push_back(expectation_curve(CurveKind::EdgesOfSize, fam, ns, s));

    auto p_of_size = [](double n, int s) -> std::string {
        if (n < s) return "0";
        // u_s / u_r in log space so large n stays finite
        return fmt_double(std::exp(log_size_count(n, s) - log_total_edges(n)));
    };

    if (f == Format::Json) {
        nlohmann::json j;
        j["alpha"] = a.alpha;
        j["beta"] = a.beta;
        nlohmann::json curves = nlohmann::json::array({to_json(total), to_json(degree), to_json(ratio)});
        for (const auto& c : by_size) curves.push_back(to_json(c));
        j["curves"] = curves;
        nlohmann::json probs = nlohmann::json::array();
        for (int s : a.sizes) {
            nlohmann::json pts = nlohmann::json::array();
            for (double n : ns) pts.push_back({{"n", n}, {"p", std::stod(p_of_size(n, s))}});
            probs.push_back({{"size", s}, {"points", pts}});
        }
        j["size_probability"] = probs;
        return j.dump(2);
    }
    std::ostringstream out;
    out << "n,log_expected_edges,log_expected_degree,ratio_r_over_d,simple_graph_ratio";
    for (int s : a.sizes) out << ",log_expected_edges_size_" << s << ",size_probability_" << s;
    out << '\n';
    for (std::size_t k = 0; k < ns.size(); ++k) {
        out << fmt_double(ns[k]) << ',' << log_cell(total.points[k].value) << ',' << log_cell(degree.points[k].value)
            << ',' << fmt_double(ratio.points[k].value.value()) << ',' << fmt_double(simple_graph_ratio(ns[k]));
        for (std::size_t i = 0; i < a.sizes.size(); ++i) {
            out << ',' << log_cell(by_size[i].points[k].value) << ',' << p_of_size(ns[k], a.sizes[i]);
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------

struct ExtremaArgs {
    std::vector<double> n_max;  // s alpha
    std::optional<long> s_max;
};

std::string run_extrema(const ExtremaArgs& a, Format f) {
    require_format(f, {Format::Json, Format::Text}, "extrema");
    if (a.n_max.empty() == !a.s_max.has_value()) {
        throw Error(ErrorCategory::InvalidArgument, "give exactly one of --n-max S ALPHA or --s-max N");
    }
    ExtremumResult r;
    if (a.s_max) {
        r = solve_s_max(*a.s_max);
    } else {
        const double s = a.n_max[0];
        if (s != std::floor(s)) throw Error(ErrorCategory::InvalidArgument, "--n-max size must be an integer");
        r = solve_n_max(static_cast<int>(s), a.n_max[1]);
    }
    if (f == Format::Json) return to_json(r).dump(2);
    std::ostringstream out;
    out << (r.variable == ExtremumVariable::NMax ? "n_max" : "s_max") << ' ' << r.integer_value << "  root "
        << fmt_double(r.value) << "  residual " << r.residual << "  iterations " << r.iterations << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

struct IngestArgs {
    std::string input;
    std::string policy = "reject";
    std::string output;
    std::string matrix;
    bool dense = false;
};

AutocatalyticPolicy parse_policy(const std::string& s) {
    return s == "split" ? AutocatalyticPolicy::SplitViaIntermediate : AutocatalyticPolicy::Reject;
}

BuiltHypergraph load_reactions(const std::string& path, AutocatalyticPolicy policy) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCategory::Io, "cannot open " + path);
    const auto parsed = parse_reactions(in);
    for (const auto& w : parsed.warnings) {
        std::cerr << "warning: " << path << ':' << w.line << ':' << w.column << ": " << w.message << '\n';
    }
    return build_hypergraph(parsed.records, policy);
}

BuiltHypergraph load_any(const std::string& path, AutocatalyticPolicy policy) {
    if (std::filesystem::path(path).extension() == ".json") return read_hypergraph_file(path);
    return load_reactions(path, policy);
}

std::string run_ingest(const IngestArgs& a, Format f) {
    require_format(f, {Format::Json, Format::Text}, "ingest");
    const auto built = load_reactions(a.input, parse_policy(a.policy));
    if (!a.matrix.empty()) {
        const auto m = export_matrix(built.graph, a.dense);
        const bool csv = std::filesystem::path(a.matrix).extension() == ".csv";
        emit(csv ? to_csv(m, built.names) : to_json(m, built.names).dump(2), a.matrix);
    }
    if (f == Format::Text) {
        std::ostringstream out;
        out << "substances " << built.graph.vertex_count() << "  reactions " << built.graph.edge_count()
            << "  size " << hypergraph_size(built.graph) << '\n';
        for (const auto& e : built.graph.edges()) {
            out << hypervertex_label(e.left(), built.names) << " -- " << hypervertex_label(e.right(), built.names);
            if (!e.label().empty()) out << "  [" << e.label() << ']';
            out << '\n';
        }
        return out.str();
    }
    return write_hypergraph(built.graph, built.names).dump(2);
}

// ---------------------------------------------------------------------------

struct TestArgs {
    std::string input;
    std::string policy = "reject";
    std::optional<int> sample_n;
    ProbabilityArgs prob;
    SeedArgs seed;
    double significance = 0.01;
    double min_expected = 5.0;
    int calibrate = 0;
    int jobs = 1;
};

std::string run_test(const TestArgs& a, Format f) {
    require_format(f, {Format::Json, Format::Text}, "test");
    const FitOptions options{a.significance, a.min_expected};
    if (a.calibrate > 0) {
        if (!a.sample_n || !a.prob.p) {
            throw Error(ErrorCategory::InvalidArgument, "--calibrate needs --sample-n and --p");
        }
        const auto c = calibrate_fit(*a.sample_n, *a.prob.p, a.calibrate, a.seed.resolve(), a.jobs, false, options);
        nlohmann::json j{{"n", *a.sample_n},
                         {"p", *a.prob.p},
                         {"trials", c.trials},
                         {"rejections", c.rejections},
                         {"rejection_rate", c.rejection_rate()},
                         {"significance", a.significance}};
        if (f == Format::Json) return j.dump(2);
        std::ostringstream out;
        out << "rejected " << c.rejections << " of " << c.trials << " (rate " << c.rejection_rate()
            << ", nominal " << a.significance << ")\n";
        return out.str();
    }

    OrientedHypergraph g(2);
    std::optional<double> p;
    if (a.sample_n) {
        if (!a.input.empty()) throw Error(ErrorCategory::InvalidArgument, "give an input file or --sample-n, not both");
        const double sp = a.prob.resolve(*a.sample_n);
        g = sample({*a.sample_n, sp, a.seed.resolve()});
        p = sp;
    } else {
        if (a.input.empty()) throw Error(ErrorCategory::InvalidArgument, "test needs an input file or --sample-n");
        g = load_any(a.input, parse_policy(a.policy)).graph;
        if (a.prob.p) p = a.prob.p;
        else if (a.prob.alpha || a.prob.beta) p = a.prob.resolve(g.vertex_count());
    }
    const auto report = fit_randomness(g, p, options);
    return f == Format::Json ? to_json(report).dump(2) : to_text(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Oriented hypergraphs and their random model"};
    app.require_subcommand(1);
    std::string format_name = "json";
    std::string output;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("-o,--output", output, "Write the result here instead of stdout");

    CountArgs count;
    auto* cmd_count = app.add_subcommand("count", "Exact counts for the complete oriented hypergraph");
    cmd_count->add_option("--n", count.n, "Number of vertices")->required();
    cmd_count->add_flag("--blocks", count.blocks, "Include the per-block table (n <= 64)");

    SampleArgs samp;
    auto* cmd_sample = app.add_subcommand("sample", "Draw instances of G(n, p)");
    cmd_sample->add_option("--n", samp.n, "Number of vertices")->required();
    auto* opt_p = cmd_sample->add_option("--p", samp.prob.p, "Edge probability");
    auto* opt_alpha = cmd_sample->add_option("--alpha", samp.prob.alpha, "Family exponent, p = n^alpha / beta^n");
    auto* opt_beta = cmd_sample->add_option("--beta", samp.prob.beta, "Family base");
    opt_p->excludes(opt_alpha)->excludes(opt_beta);
    auto* opt_seed = cmd_sample->add_option("--seed", samp.seed.seed, "Seed (default: $OHG_SEED or 20210901)");
    cmd_sample->add_flag("--entropy", samp.seed.entropy, "Seed from the system entropy source")->excludes(opt_seed);
    cmd_sample->add_option("--count", samp.count, "Number of replicates")->capture_default_str();
    cmd_sample->add_option("--jobs", samp.jobs, "Worker threads")->capture_default_str();
    cmd_sample->add_option("--output-dir", samp.output_dir, "Write each replicate as hypergraph JSON here");
    cmd_sample->add_option("--strategy", samp.strategy, "Sampler")
        ->check(CLI::IsMember({"auto", "exhaustive", "per-size"}))
        ->capture_default_str();

    CurveArgs curves;
    auto* cmd_curves = app.add_subcommand("curves", "Expectation curves for p = n^alpha / beta^n");
    cmd_curves->add_option("--alpha", curves.alpha, "Family exponent")->required();
    cmd_curves->add_option("--beta", curves.beta, "Family base")->required();
    cmd_curves->add_option("--n-min", curves.n_min, "Smallest n")->capture_default_str();
    cmd_curves->add_option("--n-max", curves.n_max, "Largest n")->capture_default_str();
    cmd_curves->add_option("--points", curves.points, "Number of grid points")->capture_default_str();
    cmd_curves->add_flag("--log-spaced", curves.log_spaced, "Space n geometrically");
    cmd_curves->add_option("--sizes", curves.sizes, "Edge sizes for E[R_s] and P(s)")->delimiter(',');

    ExtremaArgs extrema;
    auto* cmd_extrema = app.add_subcommand("extrema", "Solve for n_max or s_max");
    auto* opt_nmax = cmd_extrema->add_option("--n-max", extrema.n_max, "S ALPHA")->expected(2);
    cmd_extrema->add_option("--s-max", extrema.s_max, "N")->excludes(opt_nmax);

    IngestArgs ingest;
    auto* cmd_ingest = app.add_subcommand("ingest", "Parse a reaction file into a hypergraph");
    cmd_ingest->add_option("input", ingest.input, "Reaction file")->required();
    cmd_ingest->add_option("--policy", ingest.policy, "Autocatalytic reactions")
        ->check(CLI::IsMember({"reject", "split"}))
        ->capture_default_str();
    cmd_ingest->add_option("--matrix", ingest.matrix, "Also write the matrix classification (.csv or .json)");
    cmd_ingest->add_flag("--dense", ingest.dense, "List every matrix cell (n <= 10)");

    TestArgs test;
    auto* cmd_test = app.add_subcommand("test", "Randomness test for an observed or sampled hypergraph");
    cmd_test->add_option("input", test.input, "Reaction file or hypergraph JSON");
    cmd_test->add_option("--policy", test.policy, "Autocatalytic reactions")
        ->check(CLI::IsMember({"reject", "split"}))
        ->capture_default_str();
    cmd_test->add_option("--sample-n", test.sample_n, "Test a fresh G(n, p) sample instead of a file");
    auto* opt_tp = cmd_test->add_option("--p", test.prob.p, "Known edge probability (estimated otherwise)");
    auto* opt_ta = cmd_test->add_option("--alpha", test.prob.alpha, "Family exponent");
    auto* opt_tb = cmd_test->add_option("--beta", test.prob.beta, "Family base");
    opt_tp->excludes(opt_ta)->excludes(opt_tb);
    auto* opt_tseed = cmd_test->add_option("--seed", test.seed.seed, "Seed (default: $OHG_SEED or 20210901)");
    cmd_test->add_flag("--entropy", test.seed.entropy, "Seed from the system entropy source")->excludes(opt_tseed);
    cmd_test->add_option("--significance", test.significance, "Overall test level")->capture_default_str();
    cmd_test->add_option("--min-expected", test.min_expected, "Bin pooling threshold")->capture_default_str();
    cmd_test->add_option("--calibrate", test.calibrate, "Report the rejection rate over this many samples");
    cmd_test->add_option("--jobs", test.jobs, "Worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const Format f = kFormats.at(format_name);
        std::string text;
        if (*cmd_count) text = run_count(count, f);
        else if (*cmd_sample) text = run_sample(samp, f);
        else if (*cmd_curves) text = run_curves(curves, f);
        else if (*cmd_extrema) text = run_extrema(extrema, f);
        else if (*cmd_ingest) text = run_ingest(ingest, f);
        else if (*cmd_test) text = run_test(test, f);
        emit(text, output);
    } catch (const ohg::Error& e) {
        std::cerr << "error: " << ohg::category_name(e.category()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
