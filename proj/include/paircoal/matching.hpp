#pragma once

/// \file matching.hpp
/// \brief Maximum matchings in general graphs (Edmonds' blossom algorithm)
/// restricted to vertex subsets, plus an exhaustive reference routine.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "paircoal/graph.hpp"

namespace paircoal {

struct Matching {
    /// Matched pairs (u, v), u < v, sorted.
    std::vector<Edge> edges;
    VertexSet covered;

    int size() const noexcept { return static_cast<int>(edges.size()); }
};

enum class MatchingAlgorithm { blossom, exhaustive };

namespace detail {

using AdjRows = std::array<std::uint64_t, kMaxOrder>;

/// Edmonds' algorithm on the subgraph of `adj` induced by `within`.
/// Scans vertices and neighbors in index order, so the result is a
/// deterministic function of the input.
class Blossom {
public:
    Blossom(const AdjRows& adj, std::uint64_t within) : adj_(adj), within_(within) {
        match_.fill(-1);
    }

    /// Returns mate array (-1 when exposed).
    const std::array<int, kMaxOrder>& solve() {
        // Greedy start in index order.
        for (int v : VertexSet{within_}) {
            if (match_[v] >= 0) continue;
            for (int w : VertexSet{adj_[v] & within_}) {
                if (match_[w] < 0) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
        for (int v : VertexSet{within_}) {
            if (match_[v] >= 0) continue;
            int end = find_path(v);
            while (end >= 0) {
                const int pv = parent_[end];
                const int ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return match_;
    }

    /// True iff the maximum matching found saturates `required`. Only
    /// meaningful when `required` is all of `within`.
    bool covers(std::uint64_t required) {
        solve();
        for (int v : VertexSet{required})
            if (match_[v] < 0) return false;
        return true;
    }

private:
    const AdjRows& adj_;
    std::uint64_t within_;
    std::array<int, kMaxOrder> match_{};
    std::array<int, kMaxOrder> parent_{};
    std::array<int, kMaxOrder> base_{};
    std::array<bool, kMaxOrder> used_{};
    std::array<bool, kMaxOrder> blossom_{};
    std::array<int, kMaxOrder> queue_{};

    int lca(int a, int b) const {
        std::array<bool, kMaxOrder> seen{};
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.fill(false);
        parent_.fill(-1);
        for (int i = 0; i < kMaxOrder; ++i) base_[i] = i;
        used_[root] = true;
        int head = 0, tail = 0;
        queue_[tail++] = root;
        while (head < tail) {
            const int v = queue_[head++];
            for (int to : VertexSet{adj_[v] & within_}) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    const int cur = lca(v, to);
                    blossom_.fill(false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i : VertexSet{within_}) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue_[tail++] = i;
                            }
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = true;
                    queue_[tail++] = match_[to];
                }
            }
        }
        return -1;
    }
};

inline AdjRows rows_of(const Graph& g) {
    AdjRows rows{};
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
    return rows;
}

inline int exhaustive_matching_size(const Graph& g, std::uint64_t s) {
    if (s == 0) return 0;
    const int v = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    int best = exhaustive_matching_size(g, rest);
    for (int w : VertexSet{g.row(v) & rest}) {
        best = std::max(best, 1 + exhaustive_matching_size(g, rest & ~(std::uint64_t{1} << w)));
        if (2 * best >= std::popcount(s) - 1) break;
    }
    return best;
}

inline bool exhaustive_matching(const Graph& g, std::uint64_t s, std::vector<Edge>& out, int need) {
    if (need == 0) return true;
    if (std::popcount(s) < 2 * need) return false;
    const int v = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    for (int w : VertexSet{g.row(v) & rest}) {
        out.emplace_back(v, w);
        if (exhaustive_matching(g, rest & ~(std::uint64_t{1} << w), out, need - 1)) return true;
        out.pop_back();
    }
    return exhaustive_matching(g, rest, out, need);
}

}  // namespace detail

/// Maximum matching of the subgraph induced by `within`.
inline Matching maximum_matching(const Graph& g, VertexSet within,
                                 MatchingAlgorithm algorithm = MatchingAlgorithm::blossom) {
    within &= g.vertices();
    Matching m;
    if (algorithm == MatchingAlgorithm::exhaustive) {
        const int target = detail::exhaustive_matching_size(g, within.bits());
        detail::exhaustive_matching(g, within.bits(), m.edges, target);
    } else {
        const auto rows = detail::rows_of(g);
        detail::Blossom solver(rows, within.bits());
        const auto& mate = solver.solve();
        for (int v : within)
            if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    }
    std::sort(m.edges.begin(), m.edges.end());
    for (auto [u, v] : m.edges) {
        m.covered.insert(u);
        m.covered.insert(v);
    }
    return m;
}

inline Matching maximum_matching(const Graph& g, MatchingAlgorithm algorithm = MatchingAlgorithm::blossom) {
    return maximum_matching(g, g.vertices(), algorithm);
}

/// True iff |s| is even and G[s] has a perfect matching.
inline bool has_perfect_matching(const Graph& g, VertexSet s,
                                 MatchingAlgorithm algorithm = MatchingAlgorithm::blossom) {
    if (s.empty()) throw std::invalid_argument("has_perfect_matching of an empty set");
    if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set exceeds graph order");
    if (s.size() % 2 != 0) return false;
    for (int v : s)
        if ((g.neighbors(v) & s).empty()) return false;
    if (algorithm == MatchingAlgorithm::exhaustive)
        return 2 * detail::exhaustive_matching_size(g, s.bits()) == s.size();
    const auto rows = detail::rows_of(g);
    return detail::Blossom(rows, s.bits()).covers(s.bits());
}

/// True iff G[required ∪ optional] has a matching saturating `required`.
///
/// Reduction: join the optional vertices into a clique (plus one spare vertex
/// adjacent to all of them when the total is odd) and ask for a perfect
/// matching.
inline bool has_matching_covering(const Graph& g, VertexSet required, VertexSet optional) {
    optional -= required;
    if (required.empty()) return true;
    const VertexSet all = required | optional;
    for (int v : required)
        if ((g.neighbors(v) & all).empty()) return false;
    if (optional.empty()) return required.size() % 2 == 0 && has_perfect_matching(g, required);
    detail::AdjRows rows{};
    for (int v : all) rows[v] = g.row(v) & all.bits();
    for (int v : optional) rows[v] |= optional.bits() & ~(std::uint64_t{1} << v);
    std::uint64_t within = all.bits();
    if (all.size() % 2 != 0) {
        const int spare = std::countr_zero(~within);
        rows[spare] = optional.bits();
        for (int v : optional) rows[v] |= std::uint64_t{1} << spare;
        within |= std::uint64_t{1} << spare;
    }
    return detail::Blossom(rows, within).covers(within);
}

}  // namespace paircoal
