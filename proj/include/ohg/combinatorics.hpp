#pragma once

#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "ohg/hypergraph.hpp"
#include "ohg/log_value.hpp"

namespace ohg {

// Exact non-negative count. Counts in this library grow like 3^n.
using BigCount = boost::multiprecision::cpp_int;

// Exact closed-form counts for the complete oriented hypergraph over n
// vertices. Three distinct "u" quantities are kept apart by name:
//   block_count            edges in block M_{i,j}
//   per_vertex_block_count edges of block M_{i,j} containing a fixed vertex
//   per_vertex_total       edges containing a fixed vertex (max degree)

BigCount binomial(long n, long k);
BigCount block_count(int n, int i, int j);
BigCount size_count(int n, int s);
BigCount per_vertex_block_count(int n, int i, int j);
BigCount per_vertex_total(int n);
BigCount total_edges(int n);
// Evaluates 1/2 (2*4^n - 3^n - 6*2^n + 7), which equals (2^n-2)^2 - total_edges(n):
// every cell of the (2^n-2)x(2^n-2) hypervertex matrix minus one triangle of
// possible pairs.
BigCount impossible_pairs(int n);

// C(n, k) for n <= kMaxDenseVertices from a shared Pascal table.
const BigCount& binomial_table(int n, int k);

// Natural-log magnitudes for n beyond exact/double range. Real n is accepted
// where the closed form has a real extension.
double log_binomial(double n, double k);
double log_total_edges(double n);
double log_size_count(double n, double s);
double log_per_vertex_total(double n);
LogValue log_impossible_pairs(double n);

// d u_r / dn and d z / dn from the printed closed forms.
LogValue growth_rate_edges(double n);
LogValue growth_rate_impossible(double n);

struct CountReport {
    int n = 0;
    BigCount total_edges;
    std::map<int, BigCount> per_size;
    // All (i, j) with 1 <= i, j <= n-1; present only when requested.
    std::optional<std::map<BlockIndex, BigCount>> per_block;
    BigCount per_vertex_total;
    BigCount impossible_pairs;
    BigCount max_size_degree;
};

inline constexpr int kMaxReportBlocks = 64;
inline constexpr int kMaxReportSizes = 20000;

CountReport full_report(int n, bool include_blocks = false);

nlohmann::json to_json(const CountReport& report);
// Columns: kind,index,count. Counts are decimal strings.
std::string to_csv(const CountReport& report);

}  // namespace ohg
