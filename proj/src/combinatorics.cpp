#include "ohg/combinatorics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ohg/error.hpp"

namespace ohg {

namespace mp = boost::multiprecision;

namespace {

void require_n(int n, int min_n, const char* what) {
    if (n < min_n) {
        throw Error(ErrorCategory::InvalidArgument,
                    std::string(what) + " requires n >= " + std::to_string(min_n) + ", got " +
                        std::to_string(n));
    }
}

void require_block(int n, int i, int j, const char* what) {
    require_n(n, 2, what);
    if (i < 1 || i > n - 1 || j < 1 || j > n - 1) {
        throw Error(ErrorCategory::OutOfRange,
                    std::string(what) + ": block (" + std::to_string(i) + "," +
                        std::to_string(j) + ") outside [1, n-1]");
    }
}

BigCount pow_int(unsigned base, int exponent) { return mp::pow(BigCount(base), static_cast<unsigned>(exponent)); }

std::vector<std::vector<BigCount>> build_pascal(int rows) {
    std::vector<std::vector<BigCount>> t(static_cast<std::size_t>(rows) + 1);
    for (int r = 0; r <= rows; ++r) {
        auto& row = t[static_cast<std::size_t>(r)];
        row.assign(static_cast<std::size_t>(r) + 1, BigCount(1));
        for (int k = 1; k < r; ++k) {
            row[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k - 1)] +
                                               t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k)];
        }
    }
    return t;
}

}  // namespace

BigCount binomial(long n, long k) {
    if (n < 0) throw Error(ErrorCategory::InvalidArgument, "binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    if (n <= kMaxDenseVertices) return binomial_table(static_cast<int>(n), static_cast<int>(k));
    k = std::min(k, n - k);
    BigCount r = 1;
    for (long t = 1; t <= k; ++t) {
        r *= n - k + t;
        r /= t;  // exact: r is C(n-k+t, t) after the division
    }
    return r;
}

const BigCount& binomial_table(int n, int k) {
    static const std::vector<std::vector<BigCount>> table = build_pascal(kMaxDenseVertices);
    static const BigCount zero = 0;
    if (n < 0 || n > kMaxDenseVertices) {
        throw Error(ErrorCategory::OutOfRange, "binomial table covers n <= 128");
    }
    if (k < 0 || k > n) return zero;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigCount block_count(int n, int i, int j) {
    require_block(n, i, j, "block_count");
    if (i + j > n) return 0;
    BigCount c = binomial(n, i) * binomial(n - i, j);
    if (i == j) c /= 2;
    return c;
}

BigCount size_count(int n, int s) {
    require_n(n, 2, "size_count");
    if (s < 2 || s > n) {
        throw Error(ErrorCategory::OutOfRange,
                    "size_count: size " + std::to_string(s) + " outside [2, " + std::to_string(n) + "]");
    }
    return (pow_int(2, s - 1) - 1) * binomial(n, s);
}

BigCount per_vertex_block_count(int n, int i, int j) {
    require_block(n, i, j, "per_vertex_block_count");
    if (i + j > n) return 0;
    BigCount numerator;
    if (i != j) {
        numerator = BigCount(i + j) * binomial(n, i + j) * binomial(i + j, j);
    } else {
        numerator = BigCount(i) * binomial(n, 2 * i) * binomial(2 * i, i);
    }
    BigCount quotient;
    BigCount remainder;
    mp::divide_qr(numerator, BigCount(n), quotient, remainder);
    if (remainder != 0) {
        throw Error(ErrorCategory::InvariantViolation,
                    "per_vertex_block_count: non-integral result at n=" + std::to_string(n));
    }
    return quotient;
}

BigCount per_vertex_total(int n) {
    require_n(n, 2, "per_vertex_total");
    return pow_int(3, n - 1) - pow_int(2, n - 1);
}

BigCount total_edges(int n) {
    require_n(n, 2, "total_edges");
    return (pow_int(3, n) - pow_int(2, n + 1) + 1) / 2;
}

BigCount impossible_pairs(int n) {
    require_n(n, 2, "impossible_pairs");
    return (2 * pow_int(4, n) - pow_int(3, n) - 6 * pow_int(2, n) + 7) / 2;
}

double log_binomial(double n, double k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double log_total_edges(double n) {
    const double ln2 = std::numbers::ln2;
    const double ln3 = std::log(3.0);
    // 1/2 3^n (1 - 2 (2/3)^n + 3^-n)
    const double tail = -2.0 * std::exp(n * (ln2 - ln3)) + std::exp(-n * ln3);
    return n * ln3 - ln2 + std::log1p(tail);
}

double log_size_count(double n, double s) {
    const double ln2 = std::numbers::ln2;
    const double log_bipartitions = (s - 1) * ln2 + std::log1p(-std::exp(-(s - 1) * ln2));
    return log_bipartitions + log_binomial(n, s);
}

double log_per_vertex_total(double n) {
    const double ln3 = std::log(3.0);
    return (n - 1) * ln3 + std::log1p(-std::exp((n - 1) * (std::numbers::ln2 - ln3)));
}

LogValue log_impossible_pairs(double n) {
    const double ln2 = std::numbers::ln2;
    const LogValue half = LogValue::from_double(0.5);
    return half * (LogValue::from_log(ln2 + 2 * n * ln2) - LogValue::from_log(n * std::log(3.0)) -
                   LogValue::from_log(std::log(6.0) + n * ln2) + LogValue::from_double(7.0));
}

LogValue growth_rate_edges(double n) {
    const double ln2 = std::numbers::ln2;
    const double ln3 = std::log(3.0);
    const LogValue a = LogValue::from_log(n * ln3 + std::log(ln3));
    const LogValue b = LogValue::from_log((n + 1) * ln2 + std::log(ln2));
    return LogValue::from_double(0.5) * (a - b);
}

LogValue growth_rate_impossible(double n) {
    const double ln2 = std::numbers::ln2;
    const double ln3 = std::log(3.0);
    const LogValue a = LogValue::from_log(2 * n * ln2 + std::log(4 * ln2));  // 4^n ln 16
    const LogValue b = LogValue::from_log(n * ln3 + std::log(ln3));          // 3^n ln 3
    const LogValue c = LogValue::from_log(n * ln2 + std::log(6 * ln2));      // 2^n ln 64
    return LogValue::from_double(0.5) * (a - b - c);
}

CountReport full_report(int n, bool include_blocks) {
    require_n(n, 2, "full_report");
    if (n > kMaxReportSizes) {
        throw Error(ErrorCategory::ResourceLimit,
                    "full_report: per-size map limited to n <= " + std::to_string(kMaxReportSizes));
    }
    if (include_blocks && n > kMaxReportBlocks) {
        throw Error(ErrorCategory::ResourceLimit,
                    "full_report: per-block map limited to n <= " + std::to_string(kMaxReportBlocks));
    }
    CountReport r;
    r.n = n;
    r.total_edges = total_edges(n);
    r.per_vertex_total = per_vertex_total(n);
    r.impossible_pairs = impossible_pairs(n);
    r.max_size_degree = r.per_vertex_total * n;

    // C(n, s) and 2^(s-1) advanced incrementally; one pass over the row.
    BigCount choose = BigCount(n) * (n - 1) / 2;
    BigCount pow2 = 2;
    for (int s = 2; s <= n; ++s) {
        r.per_size.emplace(s, (pow2 - 1) * choose);
        choose = choose * (n - s) / (s + 1);
        pow2 <<= 1;
    }

    if (include_blocks) {
        std::map<BlockIndex, BigCount> blocks;
        for (int i = 1; i <= n - 1; ++i) {
            for (int j = 1; j <= n - 1; ++j) blocks.emplace(BlockIndex{i, j}, block_count(n, i, j));
        }
        r.per_block = std::move(blocks);
    }
    return r;
}

nlohmann::json to_json(const CountReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["total_edges"] = report.total_edges.str();
    nlohmann::json sizes = nlohmann::json::object();
    for (const auto& [s, c] : report.per_size) sizes[std::to_string(s)] = c.str();
    j["per_size"] = sizes;
    if (report.per_block) {
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& [b, c] : *report.per_block) {
            blocks.push_back({{"i", b.i}, {"j", b.j}, {"count", c.str()}});
        }
        j["per_block"] = blocks;
    }
    j["per_vertex_total"] = report.per_vertex_total.str();
    j["impossible_pairs"] = report.impossible_pairs.str();
    j["max_size_degree"] = report.max_size_degree.str();
    return j;
}

std::string to_csv(const CountReport& report) {
    std::ostringstream out;
    out << "kind,index,count\n";
    out << "total_edges,," << report.total_edges.str() << '\n';
    for (const auto& [s, c] : report.per_size) out << "size," << s << ',' << c.str() << '\n';
    if (report.per_block) {
        for (const auto& [b, c] : *report.per_block) {
            out << "block," << b.i << ':' << b.j << ',' << c.str() << '\n';
        }
    }
    out << "per_vertex_total,," << report.per_vertex_total.str() << '\n';
    out << "impossible_pairs,," << report.impossible_pairs.str() << '\n';
    out << "max_size_degree,," << report.max_size_degree.str() << '\n';
    return out.str();
}

}  // namespace ohg
