#pragma once

/// \file graph.hpp
/// \brief Immutable simple undirected graphs on at most 64 vertices, with the
/// structural predicates used throughout the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "paircoal/vertex_set.hpp"

namespace paircoal {

using Edge = std::pair<int, int>;

/// Simple undirected graph stored as one neighbor mask per vertex.
///
/// Invariants: symmetric adjacency, no self-loops, masks only use bits below
/// the order. All constructors validate these; the object is immutable.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on `n` vertices.
    explicit Graph(int n, std::string label = {}) : n_(n), label_(std::move(label)) {
        if (n < 1 || n > kMaxOrder) throw std::invalid_argument("graph order must be in 1..64");
    }

    static Graph from_edges(int n, std::span<const Edge> edges, std::string label = {}) {
        Graph g(n, std::move(label));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            g.adj_[u] |= std::uint64_t{1} << v;
            g.adj_[v] |= std::uint64_t{1} << u;
        }
        return g;
    }
    static Graph from_edges(int n, std::initializer_list<Edge> edges, std::string label = {}) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label));
    }

    /// Builds from neighbor masks; rejects asymmetric rows, loops and stray bits.
    static Graph from_adjacency(int n, std::span<const std::uint64_t> rows, std::string label = {}) {
        Graph g(n, std::move(label));
        if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("adjacency row count does not match order");
        for (int v = 0; v < n; ++v) {
            if (rows[v] & ~full_mask(n)) throw std::invalid_argument("adjacency mask uses bits beyond the order");
            if ((rows[v] >> v) & 1U) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
            g.adj_[v] = rows[v];
        }
        for (int u = 0; u < n; ++u)
            for (int v : VertexSet{g.adj_[u]})
                if (!((g.adj_[v] >> u) & 1U)) throw std::invalid_argument("adjacency is not symmetric");
        return g;
    }

    int order() const noexcept { return n_; }
    const std::string& label() const noexcept { return label_; }
    Graph with_label(std::string label) const {
        Graph g = *this;
        g.label_ = std::move(label);
        return g;
    }

    VertexSet vertices() const noexcept { return VertexSet::all(n_); }
    VertexSet neighbors(int v) const noexcept { return VertexSet{adj_[v]}; }
    VertexSet closed_neighbors(int v) const noexcept { return VertexSet{adj_[v] | (std::uint64_t{1} << v)}; }
    std::uint64_t row(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return std::popcount(adj_[v]); }
    bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }

    int edge_count() const noexcept {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : VertexSet{adj_[u] & ~full_mask(u + 1)}) out.emplace_back(u, v);
        return out;
    }

    /// Union of closed neighborhoods of `s`.
    VertexSet dominated_by(VertexSet s) const noexcept {
        std::uint64_t d = s.bits();
        for (int v : s) d |= adj_[v];
        return VertexSet{d};
    }

    /// Graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const int> perm) const {
        if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size does not match order");
        std::vector<bool> seen(n_, false);
        for (int p : perm) {
            if (p < 0 || p >= n_ || seen[p]) throw std::invalid_argument("not a permutation");
            seen[p] = true;
        }
        Graph g(n_, label_);
        for (int u = 0; u < n_; ++u)
            for (int v : VertexSet{adj_[u]}) g.adj_[perm[u]] |= std::uint64_t{1} << perm[v];
        return g;
    }

    /// Same graph with one extra edge.
    Graph with_edge(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("invalid edge");
        Graph g = *this;
        g.adj_[u] |= std::uint64_t{1} << v;
        g.adj_[v] |= std::uint64_t{1} << u;
        return g;
    }

    /// Adjacency equality; labels are ignored.
    bool operator==(const Graph& other) const noexcept {
        if (n_ != other.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != other.adj_[v]) return false;
        return true;
    }

private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxOrder> adj_{};
    std::string label_;
};

// ---------------------------------------------------------------------------
// Vertex classification

struct VertexClasses {
    VertexSet leaves;
    VertexSet support;
    VertexSet strong_support;
    VertexSet full;
    VertexSet isolated;
    int min_degree = 0;
    int max_degree = 0;
    /// (strong support vertex, number of adjacent leaves), by vertex index.
    std::vector<std::pair<int, int>> strong_leaf_counts;
};

inline VertexClasses classify_vertices(const Graph& g) {
    VertexClasses c;
    const int n = g.order();
    c.min_degree = n;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        c.min_degree = std::min(c.min_degree, d);
        c.max_degree = std::max(c.max_degree, d);
        if (d == 1) c.leaves.insert(v);
        if (d == 0) c.isolated.insert(v);
        if (d == n - 1 && n >= 2) c.full.insert(v);
    }
    for (int leaf : c.leaves) c.support |= g.neighbors(leaf);
    for (int s : c.support) {
        const int count = (g.neighbors(s) & c.leaves).size();
        if (count >= 2) {
            c.strong_support.insert(s);
            c.strong_leaf_counts.emplace_back(s, count);
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Girth

/// Length of a shortest cycle, or infinite for forests.
class Girth {
public:
    static constexpr Girth infinite() noexcept { return Girth{}; }
    static Girth finite(int length) {
        if (length < 3) throw std::invalid_argument("finite girth must be at least 3");
        Girth g;
        g.length_ = length;
        return g;
    }
    constexpr bool is_finite() const noexcept { return length_ != 0; }
    /// Cycle length; 0 when infinite.
    constexpr int length() const noexcept { return length_; }
    /// True iff the girth is finite and at most `k`.
    constexpr bool at_most(int k) const noexcept { return is_finite() && length_ <= k; }
    constexpr bool operator==(const Girth&) const noexcept = default;
    std::string to_string() const { return is_finite() ? std::to_string(length_) : std::string("inf"); }

private:
    constexpr Girth() noexcept = default;
    int length_ = 0;
};

/// BFS from every vertex; exact because the shortest cycle is detected from
/// any of its vertices.
inline Girth girth(const Graph& g) {
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(n), parent(n), queue(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            const int u = queue[head++];
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    const int len = dist[u] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best == 0 ? Girth::infinite() : Girth::finite(best);
}

// ---------------------------------------------------------------------------
// Induced subgraphs and edge cuts

struct InducedSubgraph {
    Graph graph;
    /// Index in the parent graph of each subgraph vertex.
    std::vector<int> to_parent;
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set exceeds graph order");
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i) local[out.to_parent[i]] = i;
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i)
        for (int w : g.neighbors(out.to_parent[i]) & s)
            if (local[w] > i) edges.emplace_back(i, local[w]);
    out.graph = Graph::from_edges(s.size(), edges);
    return out;
}

struct EdgeCut {
    int count = 0;
    bool is_full = false;
    bool is_empty = true;
};

/// Edges with one endpoint in each of two disjoint sets.
inline EdgeCut edges_between(const Graph& g, VertexSet x, VertexSet y) {
    if (!x.disjoint(y)) throw std::invalid_argument("edges_between requires disjoint sets");
    EdgeCut cut;
    for (int v : x) cut.count += (g.neighbors(v) & y).size();
    cut.is_full = cut.count == x.size() * y.size();
    cut.is_empty = cut.count == 0;
    return cut;
}

// ---------------------------------------------------------------------------
// Structure classes

inline int component_count(const Graph& g) {
    int components = 0;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        ++components;
        VertexSet frontier = VertexSet::singleton(unseen.min());
        VertexSet reached = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = next - reached;
            reached |= next;
        }
        unseen -= reached;
    }
    return components;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

inline bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (v > u && !(g.neighbors(u) & g.neighbors(v)).empty()) return true;
    return false;
}

/// Proper 2-coloring side of each vertex, or nullopt when g is not bipartite.
inline std::optional<VertexSet> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(n, -1);
    VertexSet left;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            if (side[u] == 0) left.insert(u);
            for (int w : g.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return left;
}

struct StructureClass {
    bool connected = false;
    bool tree = false;
    bool unicyclic = false;
    bool star = false;
    bool triangle_free = false;
    bool complete_bipartite = false;
    bool complete_multipartite = false;
};

inline bool is_complete_bipartite(const Graph& g) {
    const int n = g.order();
    if (n < 2 || !is_connected(g)) return false;
    const auto left = bipartition(g);
    if (!left) return false;
    const VertexSet right = left->complement(n);
    return !left->empty() && !right.empty() && edges_between(g, *left, right).is_full;
}

/// Non-adjacency is an equivalence relation with at least two classes.
inline bool is_complete_multipartite(const Graph& g) {
    const int n = g.order();
    if (n < 2) return false;
    for (int v = 0; v < n; ++v) {
        const VertexSet part = g.neighbors(v).complement(n);
        for (int u : part)
            if (g.neighbors(u).complement(n) != part) return false;
    }
    return g.edge_count() > 0;
}

inline StructureClass structure_class(const Graph& g) {
    StructureClass c;
    const int n = g.order();
    const int m = g.edge_count();
    c.connected = is_connected(g);
    c.tree = c.connected && m == n - 1;
    c.unicyclic = c.connected && m == n;
    c.star = c.tree && n >= 2 && classify_vertices(g).max_degree == n - 1;
    c.triangle_free = !has_triangle(g);
    c.complete_bipartite = is_complete_bipartite(g);
    c.complete_multipartite = is_complete_multipartite(g);
    return c;
}

}  // namespace paircoal
