#include "ohg/hypergraph.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

#include "ohg/error.hpp"

namespace ohg {

OrientedHyperedge::OrientedHyperedge(VertexSet a, VertexSet b, std::string label)
    : label_(std::move(label)) {
    if (a.universe_size() != b.universe_size()) {
        throw Error(ErrorCategory::InvariantViolation,
                    "hyperedge sides live in different universes");
    }
    if (a.empty() || b.empty()) {
        throw Error(ErrorCategory::InvariantViolation, "hyperedge side is empty");
    }
    if (a.intersects(b)) {
        throw Error(ErrorCategory::InvariantViolation, "hyperedge sides are not disjoint");
    }
    if (b.min_element() < a.min_element()) std::swap(a, b);
    left_ = a;
    right_ = b;
}

OrientedHypergraph::OrientedHypergraph(int n) : n_(n) {
    if (n < 1 || n > kMaxDenseVertices) {
        throw Error(ErrorCategory::ResourceLimit,
                    "hypergraph vertex count " + std::to_string(n) +
                        " outside the supported range [1, " +
                        std::to_string(kMaxDenseVertices) + "]");
    }
}

void OrientedHypergraph::check_universe(const OrientedHyperedge& e) const {
    if (e.universe_size() != n_) {
        throw Error(ErrorCategory::InvariantViolation,
                    "edge universe " + std::to_string(e.universe_size()) +
                        " does not match hypergraph vertex count " + std::to_string(n_));
    }
}

bool OrientedHypergraph::insert(OrientedHyperedge e) {
    check_universe(e);
    if (edges_.empty() || edges_.back() < e) {
        edges_.push_back(std::move(e));
        return true;
    }
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return false;
    edges_.insert(it, std::move(e));
    return true;
}

void OrientedHypergraph::insert_all(std::vector<OrientedHyperedge> edges) {
    for (const auto& e : edges) check_universe(e);
    if (!std::is_sorted(edges.begin(), edges.end())) std::stable_sort(edges.begin(), edges.end());
    if (edges_.empty()) {
        edges_ = std::move(edges);
    } else {
        std::vector<OrientedHyperedge> merged;
        merged.reserve(edges_.size() + edges.size());
        std::merge(std::make_move_iterator(edges_.begin()), std::make_move_iterator(edges_.end()),
                   std::make_move_iterator(edges.begin()), std::make_move_iterator(edges.end()),
                   std::back_inserter(merged));
        edges_ = std::move(merged);
    }
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool OrientedHypergraph::erase(const OrientedHyperedge& e) {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return false;
    edges_.erase(it);
    return true;
}

bool OrientedHypergraph::contains(const OrientedHyperedge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<int> NameTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

int NameTable::add(std::string name, bool is_intermediate) {
    if (auto existing = index_of(name)) return *existing;
    names.push_back(std::move(name));
    intermediate.push_back(is_intermediate);
    return static_cast<int>(names.size() - 1);
}

int edge_size(const OrientedHyperedge& e) noexcept { return e.left().size() + e.right().size(); }

std::uint64_t hypergraph_size(const OrientedHypergraph& g) noexcept {
    std::uint64_t total = 0;
    for (const auto& e : g.edges()) total += static_cast<std::uint64_t>(edge_size(e));
    return total;
}

std::uint64_t vertex_degree(const OrientedHypergraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw Error(ErrorCategory::OutOfRange,
                    "vertex " + std::to_string(v) + " outside [0, " +
                        std::to_string(g.vertex_count()) + ")");
    }
    std::uint64_t d = 0;
    for (const auto& e : g.edges()) d += e.touches(v) ? 1 : 0;
    return d;
}

std::uint64_t hypergraph_degree(const OrientedHypergraph& g) noexcept {
    std::uint64_t total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const auto& e : g.edges()) total += e.touches(v) ? 1 : 0;
    }
    return total;
}

BlockIndex block_of(const OrientedHyperedge& e) noexcept {
    const int a = e.left().size();
    const int b = e.right().size();
    return a <= b ? BlockIndex{a, b} : BlockIndex{b, a};
}

PairClass classify_pair(const VertexSet& x, const VertexSet& y, const OrientedHypergraph& g) {
    if (x.empty() || y.empty()) {
        throw Error(ErrorCategory::InvalidArgument, "classify_pair requires non-empty sets");
    }
    if (x.universe_size() != g.vertex_count() || y.universe_size() != g.vertex_count()) {
        throw Error(ErrorCategory::InvalidArgument,
                    "classify_pair sets do not match the hypergraph universe");
    }
    if (x.intersects(y)) return PairClass::Impossible;
    return g.contains(OrientedHyperedge(x, y)) ? PairClass::Realized
                                               : PairClass::PossibleUnrealized;
}

void for_each_complete_edge(int n, const std::function<void(const OrientedHyperedge&)>& fn) {
    constexpr int kMaxEnumerable = 30;
    if (n < 1 || n > kMaxEnumerable) {
        throw Error(ErrorCategory::ResourceLimit,
                    "complete edge enumeration supports n in [1, " +
                        std::to_string(kMaxEnumerable) + "], got " + std::to_string(n));
    }
    for_each_edge_mask(n, [&](std::uint64_t left, std::uint64_t right) {
        fn(OrientedHyperedge(VertexSet::from_mask(n, left), VertexSet::from_mask(n, right)));
    });
}

OrientedHypergraph complete_hypergraph(int n) {
    OrientedHypergraph g(n);
    std::vector<OrientedHyperedge> edges;
    for_each_complete_edge(n, [&](const OrientedHyperedge& e) { edges.push_back(e); });
    g.insert_all(std::move(edges));
    return g;
}

}  // namespace ohg
