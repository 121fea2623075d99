#include <algorithm>
#include <fstream>
#include <set>

#include "ohg/reaction_io.hpp"

namespace ohg {

namespace {

struct PendingEdge {
    std::vector<int> left;
    std::vector<int> right;
    std::string label;
};

std::string fresh_intermediate(NameTable& names, int& counter) {
    for (;;) {
        std::string candidate = "Z_" + std::to_string(counter++);
        if (!names.index_of(candidate)) return candidate;
    }
}

}  // namespace

BuiltHypergraph build_hypergraph(const std::vector<ReactionRecord>& records, AutocatalyticPolicy policy) {
    if (records.empty()) {
        throw Error(ErrorCategory::InvalidArgument, "no reactions: cannot build a hypergraph over an empty universe");
    }
    NameTable names;
    std::vector<PendingEdge> pending;
    int intermediate_counter = 0;

    for (const auto& r : records) {
        if (r.educts.empty() || r.products.empty()) {
            throw Error(ErrorCategory::InvariantViolation,
                        "reaction at line " + std::to_string(r.source_line) + " has an empty side");
        }
        std::vector<int> left;
        std::vector<int> right;
        for (const auto& name : r.educts) left.push_back(names.add(name));
        for (const auto& name : r.products) right.push_back(names.add(name));

        std::vector<std::string> shared;
        for (int v : left) {
            if (std::find(right.begin(), right.end(), v) != right.end()) shared.push_back(names.names[static_cast<std::size_t>(v)]);
        }
        const std::string label = r.catalyst.value_or("");
        if (shared.empty()) {
            pending.push_back({std::move(left), std::move(right), label});
            continue;
        }
        if (policy == AutocatalyticPolicy::Reject) {
            std::string list;
            for (const auto& s : shared) list += (list.empty() ? "" : ", ") + s;
            throw Error(ErrorCategory::InvariantViolation,
                        "reaction at line " + std::to_string(r.source_line) +
                            " has substances on both sides (" + list + "); use the split policy to ingest it");
        }
        const int z = names.add(fresh_intermediate(names, intermediate_counter), true);
        pending.push_back({std::move(left), {z}, label});
        pending.push_back({{z}, std::move(right), label});
    }

    const int n = static_cast<int>(names.size());
    if (n < 2) throw Error(ErrorCategory::InvalidArgument, "a hypergraph with edges needs at least two substances");
    BuiltHypergraph out{OrientedHypergraph(n), std::move(names)};
    for (const auto& p : pending) {
        OrientedHyperedge e(VertexSet(n, p.left), VertexSet(n, p.right), p.label);
        if (e.left().is_full() || e.right().is_full()) {
            throw Error(ErrorCategory::InvariantViolation, "a reaction side may not hold every substance");
        }
        out.graph.insert(std::move(e));
    }
    return out;
}

nlohmann::json write_hypergraph(const OrientedHypergraph& g, const NameTable& names) {
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["names"] = names.names;
    std::vector<int> intermediates;
    for (std::size_t i = 0; i < names.intermediate.size(); ++i) {
        if (names.intermediate[i]) intermediates.push_back(static_cast<int>(i));
    }
    doc["intermediates"] = intermediates;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"left", e.left().members()}, {"right", e.right().members()}, {"label", e.label()}});
    }
    doc["edges"] = edges;
    return doc;
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCategory::InvalidArgument, "malformed hypergraph document: " + what);
}

VertexSet read_side(const nlohmann::json& arr, int n, const char* which) {
    if (!arr.is_array()) malformed(std::string("edge '") + which + "' must be an array");
    VertexSet s(n);
    for (const auto& v : arr) {
        if (!v.is_number_integer()) malformed(std::string("edge '") + which + "' holds a non-integer");
        const auto idx = v.get<long long>();
        if (idx < 0 || idx >= n) {
            throw Error(ErrorCategory::OutOfRange,
                        "vertex index " + std::to_string(idx) + " outside [0, " + std::to_string(n) + ")");
        }
        s.insert(static_cast<int>(idx));
    }
    return s;
}

}  // namespace

BuiltHypergraph read_hypergraph(const nlohmann::json& doc) {
    if (!doc.is_object()) malformed("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) malformed("missing integer 'n'");
    const auto n = doc["n"].get<long long>();
    if (n < 1 || n > kMaxDenseVertices) {
        throw Error(ErrorCategory::ResourceLimit, "vertex count " + std::to_string(n) + " outside [1, 128]");
    }
    NameTable names;
    if (doc.contains("names")) {
        if (!doc["names"].is_array()) malformed("'names' must be an array");
        for (const auto& nm : doc["names"]) {
            if (!nm.is_string()) malformed("'names' must hold strings");
            names.names.push_back(nm.get<std::string>());
        }
        if (!names.names.empty() && static_cast<long long>(names.names.size()) != n) {
            malformed("'names' length differs from n");
        }
        if (std::set<std::string>(names.names.begin(), names.names.end()).size() != names.names.size()) {
            malformed("'names' holds duplicates");
        }
        names.intermediate.assign(names.names.size(), false);
    }
    if (doc.contains("intermediates")) {
        if (!doc["intermediates"].is_array()) malformed("'intermediates' must be an array");
        for (const auto& v : doc["intermediates"]) {
            if (!v.is_number_integer()) malformed("'intermediates' must hold integers");
            const auto idx = v.get<long long>();
            if (idx < 0 || idx >= static_cast<long long>(names.names.size())) {
                throw Error(ErrorCategory::OutOfRange, "intermediate index " + std::to_string(idx) + " has no name");
            }
            names.intermediate[static_cast<std::size_t>(idx)] = true;
        }
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) malformed("missing array 'edges'");

    BuiltHypergraph out{OrientedHypergraph(static_cast<int>(n)), std::move(names)};
    for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("left") || !e.contains("right")) malformed("edge needs 'left' and 'right'");
        VertexSet left = read_side(e["left"], static_cast<int>(n), "left");
        VertexSet right = read_side(e["right"], static_cast<int>(n), "right");
        std::string label;
        if (e.contains("label")) {
            if (!e["label"].is_string()) malformed("edge 'label' must be a string");
            label = e["label"].get<std::string>();
        }
        // OrientedHyperedge rejects empty or overlapping sides
        out.graph.insert(OrientedHyperedge(left, right, std::move(label)));
    }
    return out;
}

void write_hypergraph_file(const std::filesystem::path& path, const OrientedHypergraph& g, const NameTable& names) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCategory::Io, "cannot open " + path.string() + " for writing");
    out << write_hypergraph(g, names).dump(2) << '\n';
    if (!out) throw Error(ErrorCategory::Io, "failed writing " + path.string());
}

BuiltHypergraph read_hypergraph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCategory::Io, "cannot open " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCategory::Syntax, path.string() + ": " + e.what());
    }
    return read_hypergraph(doc);
}

}  // namespace ohg
