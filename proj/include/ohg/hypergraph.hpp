#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ohg/vertex_set.hpp"

namespace ohg {

// An unordered pair {X, Y} of disjoint, non-empty vertex sets (a reaction).
//
// Stored canonically: the side holding the smallest vertex index is `left`.
// The label carries catalyst/condition text and takes no part in equality
// or ordering.
class OrientedHyperedge {
public:
    OrientedHyperedge(VertexSet a, VertexSet b, std::string label = {});

    const VertexSet& left() const noexcept { return left_; }
    const VertexSet& right() const noexcept { return right_; }
    const std::string& label() const noexcept { return label_; }
    int universe_size() const noexcept { return left_.universe_size(); }

    VertexSet members() const { return left_ | right_; }
    bool touches(int v) const noexcept { return left_.contains(v) || right_.contains(v); }

    bool operator==(const OrientedHyperedge& o) const noexcept {
        return left_ == o.left_ && right_ == o.right_;
    }
    std::strong_ordering operator<=>(const OrientedHyperedge& o) const noexcept {
        if (auto c = left_ <=> o.left_; c != 0) return c;
        return right_ <=> o.right_;
    }

private:
    VertexSet left_;
    VertexSet right_;
    std::string label_;
};

// Block M_{i,j} of the generalized adjacency matrix, normalized to i <= j.
struct BlockIndex {
    int i = 0;
    int j = 0;

    bool operator==(const BlockIndex&) const = default;
    auto operator<=>(const BlockIndex&) const = default;
};

enum class PairClass { Realized, PossibleUnrealized, Impossible };

// Vertex count plus a deduplicated, sorted sequence of hyperedges.
class OrientedHypergraph {
public:
    explicit OrientedHypergraph(int n);

    int vertex_count() const noexcept { return n_; }
    const std::vector<OrientedHyperedge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // Idempotent; returns false when the edge was already present.
    bool insert(OrientedHyperedge e);
    // Bulk insert; linear when `edges` is sorted. Existing edges win over equal new ones.
    void insert_all(std::vector<OrientedHyperedge> edges);
    bool erase(const OrientedHyperedge& e);
    bool contains(const OrientedHyperedge& e) const;

    bool operator==(const OrientedHypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void check_universe(const OrientedHyperedge& e) const;

    int n_;
    std::vector<OrientedHyperedge> edges_;
};

// External substance labels for vertex indices. Entries flagged as
// intermediates were introduced by the autocatalytic split transform.
struct NameTable {
    std::vector<std::string> names;
    std::vector<bool> intermediate;

    std::size_t size() const noexcept { return names.size(); }
    std::optional<int> index_of(const std::string& name) const;
    int add(std::string name, bool is_intermediate = false);

    bool operator==(const NameTable&) const = default;
};

int edge_size(const OrientedHyperedge& e) noexcept;
std::uint64_t hypergraph_size(const OrientedHypergraph& g) noexcept;
std::uint64_t vertex_degree(const OrientedHypergraph& g, int v);
std::uint64_t hypergraph_degree(const OrientedHypergraph& g) noexcept;
BlockIndex block_of(const OrientedHyperedge& e) noexcept;
PairClass classify_pair(const VertexSet& x, const VertexSet& y, const OrientedHypergraph& g);

// Calls fn(left_mask, right_mask) for every admissible edge over n <= 63
// vertices, in ascending edge order. The left side holds the smallest vertex.
template <typename F>
void for_each_edge_mask(int n, F&& fn) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t left = 1; left <= full; ++left) {
        const std::uint64_t low = left & (~left + 1);
        const std::uint64_t avail = full & ~left & ~((low << 1) - 1);
        for (std::uint64_t right = avail & (~avail + 1); right != 0; right = (right - avail) & avail) {
            fn(left, right);
        }
    }
}

// Calls `fn` once for every admissible edge over n vertices, in ascending order.
void for_each_complete_edge(int n, const std::function<void(const OrientedHyperedge&)>& fn);
OrientedHypergraph complete_hypergraph(int n);

}  // namespace ohg
