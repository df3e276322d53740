#pragma once

/// \file domination.hpp
/// \brief Dominating and paired dominating sets.

#include <stdexcept>

#include "paircoal/graph.hpp"
#include "paircoal/matching.hpp"

namespace paircoal {

inline bool is_dominating(const Graph& g, VertexSet s) { return g.dominated_by(s) == g.vertices(); }

/// S dominates V and G[S] has a perfect matching. Empty and odd sets are never
/// paired dominating.
inline bool is_paired_dominating(const Graph& g, VertexSet s) {
    if (s.empty() || s.size() % 2 != 0) return false;
    return is_dominating(g, s) && has_perfect_matching(g, s);
}

inline constexpr int kPairedDominationCap = 24;

namespace detail {

/// Chooses `remaining` more vertices with index >= `next`; prunes as soon as
/// some undominated vertex has no candidate left in its closed neighborhood.
inline bool find_paired_dominating(const Graph& g, VertexSet chosen, VertexSet dominated, int next, int remaining) {
    const VertexSet all = g.vertices();
    if (remaining == 0) return dominated == all && has_perfect_matching(g, chosen);
    const std::uint64_t available = all.bits() & ~full_mask(next);
    for (int u : all - dominated)
        if ((g.closed_neighbors(u).bits() & available) == 0) return false;
    if (std::popcount(available) < remaining) return false;
    for (int v : VertexSet{available}) {
        if (find_paired_dominating(g, chosen | VertexSet::singleton(v), dominated | g.closed_neighbors(v), v + 1,
                                   remaining - 1))
            return true;
    }
    return false;
}

}  // namespace detail

/// Minimum size of a paired dominating set, or 0 when none exists (exactly
/// when g has an isolated vertex). Exact search, order at most 24.
inline int paired_domination_number(const Graph& g) {
    if (g.order() > kPairedDominationCap) throw std::invalid_argument("paired_domination_number supports orders up to 24");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return 0;
    for (int k = 2; k <= g.order(); k += 2)
        if (detail::find_paired_dominating(g, VertexSet{}, VertexSet{}, 0, k)) return k;
    return 0;
}

}  // namespace paircoal
