#include <gtest/gtest.h>

#include <random>

#include "ohg/analysis.hpp"
#include "ohg/error.hpp"
#include "ohg/hypergraph.hpp"

using namespace ohg;

namespace {

// A=0, B=1, C=2, D=3
OrientedHypergraph toy() {
    OrientedHypergraph g(4);
    g.insert({VertexSet(4, {0}), VertexSet(4, {1})});
    g.insert({VertexSet(4, {0, 2}), VertexSet(4, {3})});
    g.insert({VertexSet(4, {1, 2}), VertexSet(4, {3})});
    g.insert({VertexSet(4, {1, 2}), VertexSet(4, {0, 3})});
    return g;
}

}  // namespace

TEST(Hyperedge, RejectsInvalidSides) {
    EXPECT_THROW(OrientedHyperedge(VertexSet(4), VertexSet(4, {1})), Error);
    EXPECT_THROW(OrientedHyperedge(VertexSet(4, {0, 1}), VertexSet(4, {1, 2})), Error);
    EXPECT_THROW(OrientedHyperedge(VertexSet(4, {0}), VertexSet(5, {1})), Error);
}

TEST(Hyperedge, CanonicalLeftHoldsSmallestVertex) {
    OrientedHyperedge e(VertexSet(4, {3}), VertexSet(4, {0, 2}));
    EXPECT_EQ(e.left().members(), (std::vector<int>{0, 2}));
    EXPECT_EQ(e.right().members(), (std::vector<int>{3}));
    EXPECT_EQ(e, OrientedHyperedge(VertexSet(4, {0, 2}), VertexSet(4, {3})));
}

TEST(Hyperedge, LabelIgnoredByEquality) {
    OrientedHyperedge a(VertexSet(3, {0}), VertexSet(3, {1}), "E");
    OrientedHyperedge b(VertexSet(3, {1}), VertexSet(3, {0}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.label(), "E");
}

TEST(Hyperedge, EdgeSizes) {
    EXPECT_EQ(edge_size({VertexSet(4, {0, 2}), VertexSet(4, {3})}), 3);
    EXPECT_EQ(edge_size({VertexSet(4, {0}), VertexSet(4, {1})}), 2);
    EXPECT_EQ(edge_size({VertexSet(4, {1, 2}), VertexSet(4, {0, 3})}), 4);
}

TEST(Hyperedge, BlockNormalized) {
    EXPECT_EQ(block_of({VertexSet(4, {0}), VertexSet(4, {1})}), (BlockIndex{1, 1}));
    EXPECT_EQ(block_of({VertexSet(4, {1, 2}), VertexSet(4, {0, 3})}), (BlockIndex{2, 2}));
    EXPECT_EQ(block_of({VertexSet(4, {0, 2}), VertexSet(4, {3})}), (BlockIndex{1, 2}));
}

TEST(Hypergraph, InsertIsIdempotentAndSymmetric) {
    OrientedHypergraph g(4);
    EXPECT_TRUE(g.insert({VertexSet(4, {0}), VertexSet(4, {1, 2})}));
    EXPECT_FALSE(g.insert({VertexSet(4, {1, 2}), VertexSet(4, {0})}));
    EXPECT_EQ(g.edge_count(), 1U);
    EXPECT_TRUE(g.erase({VertexSet(4, {2, 1}), VertexSet(4, {0})}));
    EXPECT_EQ(g.edge_count(), 0U);
}

TEST(Hypergraph, RejectsForeignUniverse) {
    OrientedHypergraph g(4);
    EXPECT_THROW(g.insert({VertexSet(5, {0}), VertexSet(5, {1})}), Error);
    EXPECT_THROW(OrientedHypergraph(0), Error);
    EXPECT_THROW(OrientedHypergraph(129), Error);
}

TEST(Hypergraph, ToySizeAndDegree) {
    const auto g = toy();
    EXPECT_EQ(hypergraph_size(g), 12U);
    EXPECT_EQ(hypergraph_degree(g), 12U);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(vertex_degree(g, v), 3U);
    EXPECT_THROW(vertex_degree(g, 4), Error);
    EXPECT_THROW(vertex_degree(g, -1), Error);
}

TEST(Hypergraph, EmptyMetrics) {
    OrientedHypergraph g(7);
    EXPECT_EQ(hypergraph_size(g), 0U);
    EXPECT_EQ(hypergraph_degree(g), 0U);
    EXPECT_EQ(vertex_degree(g, 6), 0U);
}

TEST(Hypergraph, CompleteMetrics) {
    const auto g4 = complete_hypergraph(4);
    EXPECT_EQ(g4.edge_count(), 25U);
    EXPECT_EQ(hypergraph_size(g4), 76U);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(vertex_degree(g4, v), 19U);
    EXPECT_EQ(hypergraph_degree(complete_hypergraph(5)), 325U);
}

TEST(Hypergraph, CompleteMatchesBruteForce) {
    for (int n = 2; n <= 9; ++n) {
        const auto g = complete_hypergraph(n);
        const auto oracle = brute_force_enumerate(n);
        OrientedHypergraph h(n);
        for (const auto& e : oracle) h.insert(e);
        EXPECT_EQ(g, h) << "n=" << n;
    }
}

TEST(Hypergraph, NoEdgeInNullBlock) {
    for (int n = 2; n <= 9; ++n) {
        for (const auto& e : brute_force_enumerate(n)) {
            const auto b = block_of(e);
            EXPECT_LE(b.i, b.j);
            EXPECT_LE(b.i + b.j, n);
        }
    }
}

TEST(ClassifyPair, ToyExamples) {
    const auto g = toy();
    EXPECT_EQ(classify_pair(VertexSet(4, {0}), VertexSet(4, {1}), g), PairClass::Realized);
    EXPECT_EQ(classify_pair(VertexSet(4, {0}), VertexSet(4, {2}), g), PairClass::PossibleUnrealized);
    EXPECT_EQ(classify_pair(VertexSet(4, {0}), VertexSet(4, {0, 1}), g), PairClass::Impossible);
    EXPECT_THROW(classify_pair(VertexSet(4), VertexSet(4, {1}), g), Error);
}

TEST(ClassifyPair, Symmetric) {
    const auto g = toy();
    for (std::uint64_t x = 1; x < 15; ++x) {
        for (std::uint64_t y = 1; y < 15; ++y) {
            const auto a = VertexSet::from_mask(4, x);
            const auto b = VertexSet::from_mask(4, y);
            EXPECT_EQ(classify_pair(a, b, g), classify_pair(b, a, g));
        }
    }
}

TEST(Hypergraph, SizeEqualsDegreeOnRandomEdgeSets) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        OrientedHypergraph g(n);
        std::bernoulli_distribution keep(0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0);
        for_each_complete_edge(n, [&](const OrientedHyperedge& e) {
            if (keep(rng)) g.insert(e);
        });
        ASSERT_EQ(hypergraph_size(g), hypergraph_degree(g));
    }
}

TEST(NameTable, InternsInOrder) {
    NameTable t;
    EXPECT_EQ(t.add("A"), 0);
    EXPECT_EQ(t.add("B"), 1);
    EXPECT_EQ(t.add("A"), 0);
    EXPECT_EQ(t.index_of("B"), 1);
    EXPECT_FALSE(t.index_of("Q").has_value());
}
