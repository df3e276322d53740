#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace paircoal;
using namespace testing_support;

namespace {

std::vector<std::size_t> counts(GraphClass cls, int lo, int hi) {
    std::vector<std::size_t> out;
    for (int n = lo; n <= hi; ++n) out.push_back(enumerate_graphs(n, cls).size());
    return out;
}

void expect_same_stream(const GraphStream& a, const GraphStream& b) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(canonical_form(a[i]), canonical_form(b[i]));
}

}  // namespace

TEST(EnumerateTrees, Examples) {
    EXPECT_EQ(enumerate_trees(1).size(), 1U);
    const auto four = enumerate_trees(4);
    ASSERT_EQ(four.size(), 2U);
    EXPECT_TRUE(are_isomorphic(four[0], path(4)) || are_isomorphic(four[1], path(4)));
    EXPECT_TRUE(are_isomorphic(four[0], family("K(1,3)")) || are_isomorphic(four[1], family("K(1,3)")));
    EXPECT_EQ(enumerate_trees(7).size(), 11U);
    EXPECT_THROW(enumerate_trees(13), std::invalid_argument);
}

TEST(EnumerateTrees, CountsAndPrueferCrossCheck) {
    EXPECT_EQ(counts(GraphClass::trees, 1, 12),
              (std::vector<std::size_t>{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551}));
    for (int n = 1; n <= 8; ++n) expect_same_stream(enumerate_trees(n), enumerate_trees_pruefer(n));
}

TEST(EnumerateGraphs, Examples) {
    EXPECT_EQ(enumerate_graphs(3).size(), 4U);
    EXPECT_EQ(enumerate_graphs(4).size(), 11U);
    for (const auto& g : enumerate_graphs(5, GraphClass::connected_triangle_free))
        EXPECT_TRUE(!girth(g).is_finite() || girth(g).length() >= 4);
    EXPECT_THROW(enumerate_graphs(9, GraphClass::all), std::invalid_argument);
    EXPECT_THROW(enumerate_graphs(0), std::invalid_argument);
}

TEST(EnumerateGraphs, KnownCounts) {
    EXPECT_EQ(counts(GraphClass::all, 1, 7), (std::vector<std::size_t>{1, 2, 4, 11, 34, 156, 1044}));
    EXPECT_EQ(counts(GraphClass::connected, 1, 7), (std::vector<std::size_t>{1, 1, 2, 6, 21, 112, 853}));
    EXPECT_EQ(counts(GraphClass::connected_triangle_free, 1, 8), (std::vector<std::size_t>{1, 1, 1, 3, 6, 19, 59, 267}));
    EXPECT_EQ(counts(GraphClass::triangle_free, 1, 7), (std::vector<std::size_t>{1, 2, 3, 7, 14, 38, 107}));
}

TEST(EnumerateGraphs, IndependentRoutesAgree) {
    for (auto cls : {GraphClass::all, GraphClass::connected, GraphClass::triangle_free,
                     GraphClass::connected_triangle_free, GraphClass::trees, GraphClass::unicyclic}) {
        for (int n = cls == GraphClass::unicyclic ? 3 : 1; n <= 7; ++n) {
            const auto main = enumerate_graphs(n, cls);
            expect_same_stream(main, enumerate_graphs_by_edges(n, cls));
            if (n <= 6) expect_same_stream(main, enumerate_graphs_labeled(n, cls));
        }
    }
}

TEST(EnumerateGraphs, MembersPassTheirFilterAndAreDistinct) {
    for (auto cls : {GraphClass::all, GraphClass::connected, GraphClass::trees, GraphClass::unicyclic,
                     GraphClass::triangle_free, GraphClass::connected_triangle_free})
        for (int n = cls == GraphClass::unicyclic ? 3 : 1; n <= 7; ++n) {
            const auto stream = enumerate_graphs(n, cls);
            std::set<CanonicalForm> seen;
            for (const auto& g : stream) {
                EXPECT_EQ(g.order(), n);
                EXPECT_TRUE(in_class(g, cls)) << to_string(cls) << ' ' << to_graph6(g);
                EXPECT_TRUE(seen.insert(canonical_form(g)).second);
            }
            EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
        }
}

TEST(EnumerateUnicyclic, ExamplesAndCrossCheck) {
    const auto three = enumerate_unicyclic(3);
    ASSERT_EQ(three.size(), 1U);
    EXPECT_TRUE(are_isomorphic(three[0], cycle(3)));
    const auto four = enumerate_unicyclic(4);
    ASSERT_EQ(four.size(), 2U);
    EXPECT_TRUE(are_isomorphic(four[0], cycle(4)) || are_isomorphic(four[1], cycle(4)));
    EXPECT_EQ(counts(GraphClass::unicyclic, 3, 10), (std::vector<std::size_t>{1, 2, 5, 13, 33, 89, 240, 657}));
    for (int n = 3; n <= 9; ++n) expect_same_stream(enumerate_unicyclic(n), enumerate_unicyclic_by_leaves(n));
    EXPECT_THROW(enumerate_unicyclic(2), std::invalid_argument);
}

TEST(GraphClassNames, RoundTrip) {
    for (auto cls : {GraphClass::all, GraphClass::connected, GraphClass::trees, GraphClass::unicyclic,
                     GraphClass::triangle_free, GraphClass::connected_triangle_free})
        EXPECT_EQ(parse_graph_class(to_string(cls)), cls);
    EXPECT_THROW(parse_graph_class("forests"), std::invalid_argument);
}
