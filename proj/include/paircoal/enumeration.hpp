#pragma once

/// \file enumeration.hpp
/// \brief Exhaustive streams of pairwise non-isomorphic graphs by class and
/// order, each with an independent second generation route for cross-checks.
///
/// Every stream is sorted by canonical form and holds the canonical
/// representative of each isomorphism class.

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paircoal/canonical.hpp"
#include "paircoal/graph.hpp"

namespace paircoal {

enum class GraphClass { all, connected, trees, unicyclic, triangle_free, connected_triangle_free };

inline std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::all: return "all";
        case GraphClass::connected: return "connected";
        case GraphClass::trees: return "trees";
        case GraphClass::unicyclic: return "unicyclic";
        case GraphClass::triangle_free: return "triangle-free";
        case GraphClass::connected_triangle_free: return "connected-triangle-free";
    }
    return "?";
}

inline GraphClass parse_graph_class(std::string_view s) {
    for (auto c : {GraphClass::all, GraphClass::connected, GraphClass::trees, GraphClass::unicyclic,
                   GraphClass::triangle_free, GraphClass::connected_triangle_free})
        if (s == to_string(c)) return c;
    throw std::invalid_argument("unknown graph class '" + std::string(s) + "'");
}

inline bool in_class(const Graph& g, GraphClass c) {
    switch (c) {
        case GraphClass::all: return true;
        case GraphClass::connected: return is_connected(g);
        case GraphClass::trees: return structure_class(g).tree;
        case GraphClass::unicyclic: return structure_class(g).unicyclic;
        case GraphClass::triangle_free: return !has_triangle(g);
        case GraphClass::connected_triangle_free: return is_connected(g) && !has_triangle(g);
    }
    return false;
}

/// Largest supported order per class.
inline int order_cap(GraphClass c) {
    switch (c) {
        case GraphClass::all: return 8;
        case GraphClass::connected: return 9;
        case GraphClass::trees: return 12;
        case GraphClass::unicyclic: return 11;
        case GraphClass::triangle_free:
        case GraphClass::connected_triangle_free: return 9;
    }
    return 0;
}

class GraphStream {
public:
    GraphStream(GraphClass cls, int order, std::vector<Graph> graphs)
        : cls_(cls), order_(order), graphs_(std::move(graphs)) {}

    GraphClass graph_class() const noexcept { return cls_; }
    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return graphs_.size(); }
    const Graph& operator[](std::size_t i) const { return graphs_.at(i); }
    auto begin() const noexcept { return graphs_.begin(); }
    auto end() const noexcept { return graphs_.end(); }
    const std::vector<Graph>& graphs() const noexcept { return graphs_; }

private:
    GraphClass cls_;
    int order_;
    std::vector<Graph> graphs_;
};

namespace detail {

using FormSet = std::set<CanonicalForm>;

inline std::vector<Graph> to_graphs(const FormSet& forms) {
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(f.to_graph());
    return out;
}

inline void check_order(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi)
        throw std::invalid_argument(std::string(what) + ": order must be in " + std::to_string(lo) + ".." +
                                    std::to_string(hi));
}

/// Adds one vertex joined to a subset of the existing vertices.
inline Graph with_new_vertex(const Graph& g, std::uint64_t neighbors) {
    const int n = g.order();
    std::vector<std::uint64_t> rows(n + 1, 0);
    for (int v = 0; v < n; ++v) rows[v] = g.row(v) | (((neighbors >> v) & 1U) << n);
    rows[n] = neighbors;
    return Graph::from_adjacency(n + 1, rows);
}

inline bool independent(const Graph& g, std::uint64_t s) {
    for (int v : VertexSet{s})
        if (g.row(v) & s) return false;
    return true;
}

}  // namespace detail

inline GraphStream enumerate_unicyclic(int n);

/// All non-isomorphic trees of order n (1..12), by leaf extension of the
/// trees of order n-1 with canonical deduplication.
inline GraphStream enumerate_trees(int n) {
    detail::check_order(n, 1, order_cap(GraphClass::trees), "enumerate_trees");
    detail::FormSet level{canonical_form(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        detail::FormSet next;
        for (const auto& f : level) {
            const Graph t = f.to_graph();
            for (int v = 0; v < t.order(); ++v) next.insert(canonical_form(detail::with_new_vertex(t, std::uint64_t{1} << v)));
        }
        level = std::move(next);
    }
    return {GraphClass::trees, n, detail::to_graphs(level)};
}

/// Independent route: every labeled tree from its Prüfer sequence, deduplicated.
/// n^(n-2) sequences, so capped at order 9.
inline GraphStream enumerate_trees_pruefer(int n) {
    detail::check_order(n, 1, 9, "enumerate_trees_pruefer");
    detail::FormSet forms;
    if (n <= 2) {
        forms.insert(canonical_form(n == 1 ? Graph(1) : Graph::from_edges(2, {{0, 1}})));
        return {GraphClass::trees, n, detail::to_graphs(forms)};
    }
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        std::vector<int> degree(n, 1);
        for (int x : seq) ++degree[x];
        std::vector<Edge> edges;
        for (int x : seq) {
            int leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --degree[leaf];
            --degree[x];
        }
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) {
                if (u < 0) {
                    u = v;
                } else {
                    edges.emplace_back(u, v);
                    break;
                }
            }
        forms.insert(canonical_form(Graph::from_edges(n, edges)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return {GraphClass::trees, n, detail::to_graphs(forms)};
}

/// Graphs of order n in class `cls` by vertex extension: each graph of order
/// n-1 in the class (minus a suitable vertex) gains a new vertex with every
/// admissible neighbor set. Covers all/connected/triangle-free variants; trees
/// and unicyclic graphs have their own generators.
inline GraphStream enumerate_graphs(int n, GraphClass cls = GraphClass::all) {
    if (cls == GraphClass::trees) return enumerate_trees(n);
    if (cls == GraphClass::unicyclic) return enumerate_unicyclic(n);
    detail::check_order(n, 1, order_cap(cls), ("enumerate_graphs(" + to_string(cls) + ")").c_str());
    const bool connected = cls == GraphClass::connected || cls == GraphClass::connected_triangle_free;
    const bool triangle_free = cls == GraphClass::triangle_free || cls == GraphClass::connected_triangle_free;
    detail::FormSet level{canonical_form(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        detail::FormSet next;
        for (const auto& f : level) {
            const Graph g = f.to_graph();
            const std::uint64_t subsets = std::uint64_t{1} << g.order();
            for (std::uint64_t s = connected ? 1 : 0; s < subsets; ++s) {
                if (triangle_free && !detail::independent(g, s)) continue;
                next.insert(canonical_form(detail::with_new_vertex(g, s)));
            }
        }
        level = std::move(next);
    }
    return {cls, n, detail::to_graphs(level)};
}

/// Independent route for general classes: all graphs of order n grown one
/// edge at a time from the empty graph, deduplicated per edge count, then
/// filtered by class. Order at most 8.
inline GraphStream enumerate_graphs_by_edges(int n, GraphClass cls = GraphClass::all) {
    detail::check_order(n, 1, 8, "enumerate_graphs_by_edges");
    detail::FormSet layer{canonical_form(Graph(n))};
    detail::FormSet kept;
    while (!layer.empty()) {
        detail::FormSet next;
        for (const auto& f : layer) {
            const Graph g = f.to_graph();
            if (in_class(g, cls)) kept.insert(f);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.adjacent(u, v)) next.insert(canonical_form(g.with_edge(u, v)));
        }
        layer = std::move(next);
    }
    return {cls, n, detail::to_graphs(kept)};
}

/// Third route for tiny orders: every labeled graph (all 2^(n(n-1)/2) edge
/// masks), deduplicated. Order at most 6.
inline GraphStream enumerate_graphs_labeled(int n, GraphClass cls = GraphClass::all) {
    detail::check_order(n, 1, 6, "enumerate_graphs_labeled");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    detail::FormSet forms;
    const std::uint64_t masks = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t m = 0; m < masks; ++m) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((m >> i) & 1U) edges.push_back(pairs[i]);
        const Graph g = Graph::from_edges(n, edges);
        if (in_class(g, cls)) forms.insert(canonical_form(g));
    }
    return {cls, n, detail::to_graphs(forms)};
}

/// Connected graphs with exactly one cycle, order 3..11: every tree of order n
/// plus one extra edge, deduplicated.
inline GraphStream enumerate_unicyclic(int n) {
    detail::check_order(n, 3, order_cap(GraphClass::unicyclic), "enumerate_unicyclic");
    detail::FormSet forms;
    for (const auto& t : enumerate_trees(n))
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!t.adjacent(u, v)) forms.insert(canonical_form(t.with_edge(u, v)));
    return {GraphClass::unicyclic, n, detail::to_graphs(forms)};
}

/// Independent route: C_n together with every unicyclic graph of order n-1
/// plus a pendant vertex.
inline GraphStream enumerate_unicyclic_by_leaves(int n) {
    detail::check_order(n, 3, order_cap(GraphClass::unicyclic), "enumerate_unicyclic_by_leaves");
    auto cycle = [](int k) {
        std::vector<Edge> e;
        for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
        return Graph::from_edges(k, e);
    };
    detail::FormSet level{canonical_form(cycle(3))};
    for (int k = 4; k <= n; ++k) {
        detail::FormSet next{canonical_form(cycle(k))};
        for (const auto& f : level) {
            const Graph g = f.to_graph();
            for (int v = 0; v < g.order(); ++v) next.insert(canonical_form(detail::with_new_vertex(g, std::uint64_t{1} << v)));
        }
        level = std::move(next);
    }
    return {GraphClass::unicyclic, n, detail::to_graphs(level)};
}

}  // namespace paircoal
