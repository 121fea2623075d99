#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

#include "ohg/error.hpp"
#include "ohg/vertex_set.hpp"

using ohg::VertexSet;

TEST(VertexSet, MembershipAndSize) {
    VertexSet s(10, {0, 3, 9});
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(4));
    EXPECT_FALSE(s.contains(-1));
    EXPECT_FALSE(s.contains(10));
    EXPECT_EQ(s.min_element(), 0);
    EXPECT_EQ(s.members(), (std::vector<int>{0, 3, 9}));
    s.erase(0);
    EXPECT_EQ(s.min_element(), 3);
}

TEST(VertexSet, HighWordMembers) {
    VertexSet s(128, {70, 127});
    EXPECT_EQ(s.size(), 2);
    EXPECT_EQ(s.min_element(), 70);
    EXPECT_EQ(s.low_word(), 0U);
    EXPECT_TRUE(s.contains(127));
    EXPECT_TRUE(VertexSet::full(128).is_full());
    EXPECT_EQ(VertexSet::full(128).size(), 128);
}

TEST(VertexSet, RejectsOutOfUniverse) {
    VertexSet s(4);
    EXPECT_THROW(s.insert(4), ohg::Error);
    EXPECT_THROW(s.insert(-1), ohg::Error);
    EXPECT_THROW(VertexSet(129), ohg::Error);
    EXPECT_THROW(VertexSet(0), ohg::Error);
}

TEST(VertexSet, EmptyMinElement) {
    VertexSet s(5);
    EXPECT_TRUE(s.empty());
    EXPECT_EQ(s.min_element(), -1);
}

TEST(VertexSet, SetAlgebra) {
    VertexSet a(6, {0, 1, 2});
    VertexSet b(6, {2, 3});
    EXPECT_TRUE(a.intersects(b));
    EXPECT_EQ((a | b).members(), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ((a & b).members(), (std::vector<int>{2}));
    EXPECT_EQ(a.without(b).members(), (std::vector<int>{0, 1}));
    EXPECT_FALSE(a.without(b).intersects(b));
}

TEST(VertexSet, FromMaskMatchesMembers) {
    for (std::uint64_t m = 0; m < 64; ++m) {
        const auto s = VertexSet::from_mask(6, m);
        EXPECT_EQ(s.low_word(), m);
        EXPECT_EQ(s.size(), std::popcount(m));
    }
}

TEST(VertexSet, SizeLexOrdering) {
    std::vector<VertexSet> all;
    for (std::uint64_t m = 1; m < 15; ++m) all.push_back(VertexSet::from_mask(4, m));
    std::sort(all.begin(), all.end(), VertexSet::size_lex_less);
    // singletons, then pairs in lexicographic member order, then triples
    EXPECT_EQ(all[0].members(), (std::vector<int>{0}));
    EXPECT_EQ(all[3].members(), (std::vector<int>{3}));
    EXPECT_EQ(all[4].members(), (std::vector<int>{0, 1}));
    EXPECT_EQ(all[5].members(), (std::vector<int>{0, 2}));
    EXPECT_EQ(all[9].members(), (std::vector<int>{2, 3}));
    EXPECT_EQ(all[10].members(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(all[13].members(), (std::vector<int>{1, 2, 3}));
}

TEST(VertexSet, HashDistinguishesUniverse) {
    std::unordered_set<VertexSet> seen;
    seen.insert(VertexSet(4, {1}));
    seen.insert(VertexSet(5, {1}));
    seen.insert(VertexSet(4, {1}));
    EXPECT_EQ(seen.size(), 2U);
}
