#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ohg/reaction_io.hpp"

namespace ohg {

CellClass classify_cell(const VertexSet& row, const VertexSet& col, const OrientedHypergraph& g) {
    switch (classify_pair(row, col, g)) {
        case PairClass::Realized: return CellClass::Realized;
        case PairClass::PossibleUnrealized: return CellClass::Possible;
        case PairClass::Impossible: return CellClass::Impossible;
    }
    return CellClass::Impossible;
}

MatrixExport export_matrix(const OrientedHypergraph& g, bool dense) {
    const int n = g.vertex_count();
    if (n < 2 || n > kMatrixExportMaxN) {
        throw Error(ErrorCategory::ResourceLimit,
                    "matrix export supports n in [2, " + std::to_string(kMatrixExportMaxN) + "]");
    }
    if (dense && n > kDenseMatrixMaxN) {
        throw Error(ErrorCategory::ResourceLimit,
                    "dense matrix export supports n <= " + std::to_string(kDenseMatrixMaxN));
    }
    MatrixExport m;
    m.n = n;
    m.dense = dense;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) m.ordering.push_back(VertexSet::from_mask(n, mask));
    std::sort(m.ordering.begin(), m.ordering.end(), VertexSet::size_lex_less);

    std::unordered_map<VertexSet, std::uint32_t> index;
    for (std::uint32_t k = 0; k < m.ordering.size(); ++k) index.emplace(m.ordering[k], k);

    // Per-block tallies, sized (n-1) x (n-1), 1-based sizes mapped to 0-based slots.
    const auto side = static_cast<std::size_t>(n - 1);
    std::vector<std::uint64_t> realized(side * side, 0);
    for (const auto& e : g.edges()) {
        const auto a = static_cast<std::size_t>(e.left().size() - 1);
        const auto b = static_cast<std::size_t>(e.right().size() - 1);
        ++realized[a * side + b];
        ++realized[b * side + a];
    }

    if (dense) {
        m.entries.reserve(m.ordering.size() * m.ordering.size());
        for (std::uint32_t r = 0; r < m.ordering.size(); ++r) {
            for (std::uint32_t c = 0; c < m.ordering.size(); ++c) {
                m.entries.push_back({r, c, classify_cell(m.ordering[r], m.ordering[c], g)});
            }
        }
    } else {
        for (const auto& e : g.edges()) {
            const auto l = index.at(e.left());
            const auto r = index.at(e.right());
            m.entries.push_back({l, r, CellClass::Realized});
            m.entries.push_back({r, l, CellClass::Realized});
        }
        std::sort(m.entries.begin(), m.entries.end(), [](const MatrixCell& x, const MatrixCell& y) {
            return x.row != y.row ? x.row < y.row : x.col < y.col;
        });
    }

    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            const auto rows = binomial_table(n, i).convert_to<std::uint64_t>();
            const auto cols = binomial_table(n, j).convert_to<std::uint64_t>();
            const std::uint64_t disjoint =
                i + j <= n ? rows * binomial_table(n - i, j).convert_to<std::uint64_t>() : 0;
            const std::uint64_t real = realized[static_cast<std::size_t>(i - 1) * side + static_cast<std::size_t>(j - 1)];
            m.blocks.push_back({i, j, real, disjoint - real, rows * cols - disjoint});
            m.realized_cells += real;
            m.possible_cells += disjoint - real;
            m.impossible_cells += rows * cols - disjoint;
        }
    }
    m.impossible_pairs_convention = BigCount(m.impossible_cells) + total_edges(n);
    return m;
}

std::string hypervertex_label(const VertexSet& s, const NameTable& names) {
    std::string out;
    for (int v : s.members()) {
        if (!out.empty()) out += '+';
        if (static_cast<std::size_t>(v) < names.size()) {
            out += names.names[static_cast<std::size_t>(v)];
        } else {
            out += std::to_string(v);
        }
    }
    return out;
}

namespace {

std::string cell_code(CellClass c) {
    switch (c) {
        case CellClass::Realized: return "1";
        case CellClass::Possible: return "0-possible";
        case CellClass::Impossible: return "0-impossible";
    }
    return "0-impossible";
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

nlohmann::json to_json(const MatrixExport& m, const NameTable& names) {
    nlohmann::json ordering = nlohmann::json::array();
    for (const auto& s : m.ordering) ordering.push_back(hypervertex_label(s, names));
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& c : m.entries) entries.push_back({c.row, c.col, cell_code(c.cls)});
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : m.blocks) {
        blocks.push_back({{"i", b.i}, {"j", b.j}, {"realized", b.realized}, {"possible", b.possible},
                          {"impossible", b.impossible}});
    }
    return {{"n", m.n},
            {"dense", m.dense},
            {"ordering", ordering},
            {"entries", entries},
            {"blocks", blocks},
            {"realized_cells", m.realized_cells},
            {"possible_cells", m.possible_cells},
            {"impossible_cells", m.impossible_cells},
            {"impossible_pairs_convention", m.impossible_pairs_convention.str()}};
}

std::string to_csv(const MatrixExport& m, const NameTable& names) {
    std::ostringstream out;
    out << "row_label,col_label,class\n";
    for (const auto& c : m.entries) {
        out << csv_quote(hypervertex_label(m.ordering[c.row], names)) << ','
            << csv_quote(hypervertex_label(m.ordering[c.col], names)) << ',' << cell_code(c.cls) << '\n';
    }
    return out.str();
}

}  // namespace ohg
