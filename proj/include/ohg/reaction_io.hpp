#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ohg/combinatorics.hpp"
#include "ohg/error.hpp"
#include "ohg/hypergraph.hpp"

namespace ohg {

// ---------------------------------------------------------------------------
// Reaction text format
//
//   reaction := [id ':'] side arrow side
//   arrow    := '->' | '<->' | '-[' name ']->'
//   side     := term ('+' term)*
//   term     := [integer] name        (a leading coefficient is dropped)
//
// Names use letters, digits and _ ( ) , - ; a '-' that starts '->' or '-['
// ends the name. '#' starts a comment; blank lines are skipped.

enum class ArrowKind { Forward, Reversible };

struct ReactionRecord {
    std::optional<std::string> id;
    std::vector<std::string> educts;
    std::vector<std::string> products;
    std::optional<std::string> catalyst;
    // Kept as metadata only; '->' and '<->' build the same oriented edge.
    ArrowKind arrow = ArrowKind::Forward;
    int source_line = 0;

    bool operator==(const ReactionRecord&) const = default;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

struct ParseWarning {
    int line = 0;
    int column = 0;
    std::string message;
};

struct ParseResult {
    std::vector<ReactionRecord> records;
    std::vector<ParseWarning> warnings;
};

ParseResult parse_reactions(std::istream& in);
ParseResult parse_reactions(std::string_view text);

std::string format_reaction(const ReactionRecord& record);
std::string format_reactions(const std::vector<ReactionRecord>& records);

// ---------------------------------------------------------------------------
// Records to hypergraph

enum class AutocatalyticPolicy { Reject, SplitViaIntermediate };

struct BuiltHypergraph {
    OrientedHypergraph graph;
    NameTable names;
};

// Substances are interned in order of first appearance. A catalyst becomes
// the edge label and is not a vertex. Under SplitViaIntermediate a record
// whose sides overlap becomes {educts}-{Z_k} and {Z_k}-{products} with a
// fresh vertex Z_k flagged as an intermediate.
BuiltHypergraph build_hypergraph(const std::vector<ReactionRecord>& records,
                                 AutocatalyticPolicy policy = AutocatalyticPolicy::Reject);

// ---------------------------------------------------------------------------
// Hypergraph JSON: {n, names, intermediates, edges: [{left, right, label}]}

nlohmann::json write_hypergraph(const OrientedHypergraph& g, const NameTable& names = {});
BuiltHypergraph read_hypergraph(const nlohmann::json& doc);

void write_hypergraph_file(const std::filesystem::path& path, const OrientedHypergraph& g,
                           const NameTable& names = {});
BuiltHypergraph read_hypergraph_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Adjacency-matrix classification

enum class CellClass { Realized, Possible, Impossible };

struct MatrixCell {
    std::uint32_t row = 0;  // index into MatrixExport::ordering
    std::uint32_t col = 0;
    CellClass cls = CellClass::Impossible;
};

struct MatrixBlockSummary {
    int i = 0;
    int j = 0;
    std::uint64_t realized = 0;
    std::uint64_t possible = 0;  // disjoint but not realized
    std::uint64_t impossible = 0;
};

struct MatrixExport {
    int n = 0;
    // All 2^n - 2 hypervertices sorted by (size, members).
    std::vector<VertexSet> ordering;
    // Realized cells in both orientations; every cell when dense.
    std::vector<MatrixCell> entries;
    bool dense = false;
    std::vector<MatrixBlockSummary> blocks;  // ordered (i, j), 1 <= i, j <= n-1
    std::uint64_t realized_cells = 0;
    std::uint64_t possible_cells = 0;
    std::uint64_t impossible_cells = 0;
    // impossible_cells + one triangle of disjoint cells (realized or not);
    // equals impossible_pairs(n).
    BigCount impossible_pairs_convention;
};

inline constexpr int kMatrixExportMaxN = 14;
inline constexpr int kDenseMatrixMaxN = 10;

MatrixExport export_matrix(const OrientedHypergraph& g, bool dense = false);
CellClass classify_cell(const VertexSet& row, const VertexSet& col, const OrientedHypergraph& g);

std::string hypervertex_label(const VertexSet& s, const NameTable& names);
nlohmann::json to_json(const MatrixExport& m, const NameTable& names = {});
// Columns: row_label,col_label,class with class in {1, 0-possible, 0-impossible}.
std::string to_csv(const MatrixExport& m, const NameTable& names = {});

}  // namespace ohg
