#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace paircoal;
using namespace testing_support;

TEST(VertexSet, BasicOperations) {
    const auto s = VertexSet::of({0, 3, 5});
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(4));
    EXPECT_EQ(s.min(), 0);
    EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 3, 5}));
    EXPECT_EQ(s.complement(6), VertexSet::of({1, 2, 4}));
    EXPECT_TRUE(VertexSet::of({3}).subset_of(s));
    EXPECT_TRUE(s.disjoint(VertexSet::of({1, 2})));
    EXPECT_EQ(VertexSet::all(64).size(), 64);
    EXPECT_EQ(VertexSet{}.min(), -1);
}

TEST(Graph, ConstructorsRejectBadInput) {
    EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph(65), std::invalid_argument);
}

TEST(Graph, AdjacencyIsSymmetricAfterEveryConstructor) {
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(rng, n, 0.4);
        const Graph variants[] = {g, Graph::from_adjacency(n, std::vector<std::uint64_t>([&] {
                                          std::vector<std::uint64_t> r;
                                          for (int v = 0; v < n; ++v) r.push_back(g.row(v));
                                          return r;
                                      }())),
                                  shuffled(rng, g), canonical_graph(g)};
        for (const auto& h : variants)
            for (int u = 0; u < n; ++u) {
                EXPECT_FALSE(h.adjacent(u, u));
                for (int v = 0; v < n; ++v) EXPECT_EQ(h.adjacent(u, v), h.adjacent(v, u));
            }
    }
}

TEST(InducedSubgraph, Examples) {
    EXPECT_TRUE(are_isomorphic(induced_subgraph(cycle(4), VertexSet::of({0, 1})).graph, path(2)));
    const Graph empty3 = induced_subgraph(path(5), VertexSet::of({0, 2, 4})).graph;
    EXPECT_EQ(empty3.order(), 3);
    EXPECT_EQ(empty3.edge_count(), 0);
    EXPECT_TRUE(are_isomorphic(induced_subgraph(cycle(8), VertexSet::of({0, 1, 2})).graph, path(3)));
    EXPECT_THROW(induced_subgraph(path(3), VertexSet{}), std::invalid_argument);
}

TEST(EdgesBetween, Examples) {
    const Graph k23 = family("K(2,3)");
    const auto parts = *bipartition(k23);
    EXPECT_TRUE(edges_between(k23, parts, parts.complement(5)).is_full);
    EXPECT_TRUE(edges_between(path(4), VertexSet::of({0}), VertexSet::of({3})).is_empty);
    const auto cut = edges_between(cycle(4), VertexSet::of({0, 2}), VertexSet::of({1, 3}));
    EXPECT_EQ(cut.count, 4);
    EXPECT_TRUE(cut.is_full);
    EXPECT_THROW(edges_between(path(3), VertexSet::of({0, 1}), VertexSet::of({1})), std::invalid_argument);
}

TEST(StructureClass, Examples) {
    const auto k33 = structure_class(family("K(3,3)"));
    EXPECT_TRUE(k33.complete_bipartite);
    EXPECT_TRUE(k33.triangle_free);
    const auto c4 = structure_class(cycle(4));
    EXPECT_TRUE(c4.unicyclic);
    EXPECT_TRUE(c4.complete_bipartite);
    const auto s22 = structure_class(family("S(2,2)"));
    EXPECT_TRUE(s22.tree);
    EXPECT_FALSE(s22.star);
    EXPECT_TRUE(structure_class(family("K(2,2,3)")).complete_multipartite);
    EXPECT_FALSE(structure_class(path(4)).complete_multipartite);
}

TEST(StructureClass, FlagsAreConsistent) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            const auto c = structure_class(g);
            if (c.tree) { EXPECT_TRUE(c.connected && !girth(g).is_finite()); }
            if (c.unicyclic) { EXPECT_TRUE(c.connected && g.edge_count() == n); }
            if (c.star) { EXPECT_TRUE(c.tree); }
            if (c.complete_bipartite) { EXPECT_TRUE(c.triangle_free && c.complete_multipartite); }
        }
}

TEST(Isomorphism, Examples) {
    EXPECT_TRUE(are_isomorphic(path(3), family("K(1,2)")));
    EXPECT_TRUE(are_isomorphic(cycle(4), family("K(2,2)")));
    EXPECT_FALSE(are_isomorphic(Graph::from_edges(4, {{0, 1}, {2, 3}}), path(4)));
    EXPECT_THROW(are_isomorphic(path(17), path(17)), std::invalid_argument);
}

TEST(Isomorphism, EquivalenceRelationAndRelabelingInvariance) {
    std::mt19937_64 rng(kSeed + 1);
    std::vector<Graph> sample;
    for (int i = 0; i < 60; ++i) sample.push_back(random_graph(rng, 6, 0.45));
    for (std::size_t i = 0; i < sample.size(); ++i) {
        EXPECT_TRUE(are_isomorphic(sample[i], sample[i]));
        EXPECT_TRUE(are_isomorphic(sample[i], shuffled(rng, sample[i])));
        for (std::size_t j = 0; j < sample.size(); ++j) {
            const bool ij = are_isomorphic(sample[i], sample[j]);
            EXPECT_EQ(ij, are_isomorphic(sample[j], sample[i]));
            if (!ij) continue;
            for (std::size_t k = 0; k < sample.size(); ++k)
                if (are_isomorphic(sample[j], sample[k])) { EXPECT_TRUE(are_isomorphic(sample[i], sample[k])); }
        }
    }
}

TEST(Isomorphism, CanonicalFormIsRelabelingInvariant) {
    std::mt19937_64 rng(kSeed + 2);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        ASSERT_EQ(canonical_form(g), canonical_form(shuffled(rng, g))) << to_graph6(g);
    }
}

TEST(Isomorphism, HandlesRegularAndSymmetricGraphs) {
    std::mt19937_64 rng(kSeed + 3);
    // Petersen graph against a relabeled copy, and against a 3-regular non-isomorphic graph on 10 vertices.
    const Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                  {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    const Graph prism = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8},
                                               {8, 9}, {9, 5}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    EXPECT_TRUE(are_isomorphic(petersen, shuffled(rng, petersen)));
    EXPECT_FALSE(are_isomorphic(petersen, prism));
    EXPECT_TRUE(are_isomorphic(family("T(3)"), shuffled(rng, family("T(3)"))));
}

TEST(ClassifyVertices, Examples) {
    const auto star = classify_vertices(family("K(1,4)"));
    const int center = star.full.min();
    EXPECT_EQ(star.full.size(), 1);
    EXPECT_EQ(star.leaves, VertexSet::singleton(center).complement(5));
    EXPECT_EQ(star.support, VertexSet::singleton(center));
    EXPECT_EQ(star.strong_support, VertexSet::singleton(center));

    const auto p4 = classify_vertices(path(4));
    EXPECT_EQ(p4.leaves, VertexSet::of({0, 3}));
    EXPECT_EQ(p4.support, VertexSet::of({1, 2}));
    EXPECT_TRUE(p4.strong_support.empty());
    EXPECT_TRUE(p4.full.empty());

    const auto fig1 = classify_vertices(family("Fig1"));
    EXPECT_EQ(fig1.strong_support, VertexSet::of({0, 1, 2, 3}));
    std::vector<int> counts;
    for (auto [v, c] : fig1.strong_leaf_counts) counts.push_back(c);
    EXPECT_EQ(counts, (std::vector<int>{3, 2, 2, 4}));
}

TEST(ClassifyVertices, Laws) {
    std::mt19937_64 rng(kSeed + 4);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 10), 0.3);
        const auto c = classify_vertices(g);
        for (int v : c.full) EXPECT_EQ(g.degree(v), g.order() - 1);
        for (int v : c.strong_support) EXPECT_GE((g.neighbors(v) & c.leaves).size(), 2);
        for (int v : c.leaves) EXPECT_TRUE(c.support.contains(g.neighbors(v).min()));
    }
}

TEST(Girth, Examples) {
    EXPECT_EQ(girth(cycle(5)), Girth::finite(5));
    EXPECT_EQ(girth(family("T(3)")), Girth::infinite());
    EXPECT_EQ(girth(family("B2(1,1)")), Girth::finite(5));
    EXPECT_EQ(girth(complete(4)), Girth::finite(3));
    EXPECT_THROW(Girth::finite(2), std::invalid_argument);
}

TEST(Girth, InfiniteExactlyForForests) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n))
            EXPECT_EQ(!girth(g).is_finite(), g.edge_count() <= n - component_count(g)) << to_graph6(g);
}

TEST(Bipartition, DetectsOddCycles) {
    EXPECT_TRUE(bipartition(cycle(6)).has_value());
    EXPECT_FALSE(bipartition(cycle(5)).has_value());
    EXPECT_TRUE(is_complete_bipartite(family("K(3,4)")));
    EXPECT_FALSE(is_complete_bipartite(path(4)));
}
