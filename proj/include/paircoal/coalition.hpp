#pragma once

/// \file coalition.hpp
/// \brief Paired coalitions: partner test, pc-partition verification, the
/// exact paired coalition number solver, an exhaustive oracle, and the
/// coalition graph of a partition.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paircoal/domination.hpp"
#include "paircoal/graph.hpp"
#include "paircoal/matching.hpp"
#include "paircoal/partition.hpp"

namespace paircoal {

/// Neither set is paired dominating but their union is.
inline bool are_pc_partners(const Graph& g, VertexSet a, VertexSet b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("pc-partner sets must be nonempty");
    if (!a.disjoint(b)) throw std::invalid_argument("pc-partner sets must be disjoint");
    return !is_paired_dominating(g, a) && !is_paired_dominating(g, b) && is_paired_dominating(g, a | b);
}

struct PcPartitionReport {
    bool valid = false;
    /// partners[i]: indices of blocks forming a paired coalition with block i.
    std::vector<std::vector<int>> partners;
    std::vector<bool> block_is_pds;
    /// Empty string when block i is fine, otherwise the reason it fails.
    std::vector<std::string> failures;
};

inline PcPartitionReport is_pc_partition(const Graph& g, const Partition& p) {
    if (p.order() != g.order()) throw std::invalid_argument("partition order does not match graph order");
    const int k = p.size();
    PcPartitionReport r;
    r.partners.assign(k, {});
    r.block_is_pds.assign(k, false);
    r.failures.assign(k, {});
    for (int i = 0; i < k; ++i) r.block_is_pds[i] = is_paired_dominating(g, p.block(i));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!r.block_is_pds[i] && !r.block_is_pds[j] && is_paired_dominating(g, p.block(i) | p.block(j))) {
                r.partners[i].push_back(j);
                r.partners[j].push_back(i);
            }
    r.valid = true;
    for (int i = 0; i < k; ++i) {
        if (r.block_is_pds[i]) {
            r.failures[i] = "block is a paired dominating set";
        } else if (r.partners[i].empty()) {
            r.failures[i] = "block has no pc-partner";
        }
        if (!r.failures[i].empty()) r.valid = false;
    }
    return r;
}

/// Graph on the blocks of a pc-partition, adjacent exactly when pc-partners.
inline Graph coalition_graph(const Graph& g, const Partition& p) {
    const auto report = is_pc_partition(g, p);
    if (!report.valid) throw std::invalid_argument("coalition_graph requires a valid pc-partition");
    std::vector<Edge> edges;
    for (int i = 0; i < p.size(); ++i)
        for (int j : report.partners[i])
            if (j > i) edges.emplace_back(i, j);
    return Graph::from_edges(p.size(), edges);
}

// ---------------------------------------------------------------------------
// Exact solver

struct PcOptions {
    /// Largest order solved without lemma-guided pruning.
    int exact_cap = 14;
    /// For graphs with minimum degree 1 and orders >= 3: all support vertices
    /// share one block, every other block partners only with it, and leaves of
    /// a strong support vertex avoid that block and each other.
    bool lemma_pruning = false;
    /// Report the lexicographically least restricted-growth witness.
    bool canonical_witness = false;
    /// Cap the search at order 4 for perfect binary trees of height >= 3.
    bool assume_binary_ceiling = false;
    /// Matching-based partner feasibility checks inside the search.
    bool matching_pruning = true;
    /// Search node limit across the whole call; 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// Wall-clock limit in seconds; 0 means unlimited.
    double time_budget_seconds = 0.0;
};

inline constexpr const char* kSupportBlockLemma = "support-block lemma";
inline constexpr const char* kStrongLeafLemma = "strong-support leaf lemma";
inline constexpr const char* kCeilingLemma = "ceiling lemma";

struct PcStats {
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
    /// Proved statements the search relied on for pruning.
    std::vector<std::string> assumptions;
    /// Orders shown to admit no pc-partition, in the order they were refuted.
    std::vector<int> refuted_orders;
    bool budget_exhausted = false;
};

struct PcResult {
    /// PC(G); 0 when no pc-partition exists. When the search ran out of
    /// budget this is the best verified lower bound.
    int pc = 0;
    bool exact = true;
    int lower_bound = 0;
    int upper_bound = 0;
    std::optional<Partition> witness;
    std::optional<std::vector<std::vector<bool>>> pcg_adjacency;
    PcStats stats;
};

enum class OrderVerdict { feasible, infeasible, unknown };

struct OrderDecision {
    OrderVerdict verdict = OrderVerdict::unknown;
    std::optional<Partition> witness;
    std::uint64_t nodes = 0;
    std::vector<std::string> assumptions;
};

/// Height h when g is the perfect binary tree T(h), otherwise -1.
inline int perfect_binary_tree_height(const Graph& g) {
    const int n = g.order();
    if (n == 1) return 0;
    if (!structure_class(g).tree) return -1;
    int root = -1;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 2) {
            if (root >= 0) return -1;
            root = v;
        } else if (d != 1 && d != 3) {
            return -1;
        }
    }
    if (root < 0) return -1;
    // Every leaf must sit at the same depth, and n = 2^(h+1) - 1.
    std::vector<int> depth(n, -1);
    std::vector<int> queue{root};
    depth[root] = 0;
    int leaf_depth = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        if (g.degree(u) == 1) {
            if (leaf_depth >= 0 && leaf_depth != depth[u]) return -1;
            leaf_depth = depth[u];
        }
        for (int w : g.neighbors(u))
            if (depth[w] < 0) {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
    }
    if (leaf_depth < 1 || n != (1 << (leaf_depth + 1)) - 1) return -1;
    return leaf_depth;
}

namespace detail {

class Budget {
public:
    explicit Budget(const PcOptions& opts)
        : node_limit_(opts.node_budget), seconds_(opts.time_budget_seconds), start_(Clock::now()) {}

    bool charge() {
        ++nodes_;
        if (exhausted_) return false;
        if (node_limit_ && nodes_ > node_limit_) exhausted_ = true;
        if (seconds_ > 0 && (nodes_ & 1023U) == 0 && elapsed() > seconds_) exhausted_ = true;
        return !exhausted_;
    }
    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

private:
    using Clock = std::chrono::steady_clock;
    std::uint64_t node_limit_;
    double seconds_;
    Clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

/// Depth-first assignment of vertices to blocks in restricted-growth order,
/// deciding whether a pc-partition with exactly k blocks exists.
class PcSearch {
public:
    PcSearch(const Graph& g, int k, const PcOptions& opts, Budget& budget)
        : g_(g), n_(g.order()), k_(k), opts_(opts), budget_(budget) {
        const auto classes = classify_vertices(g);
        lemma_ = opts.lemma_pruning && classes.min_degree == 1 && k >= 3 && is_connected(g);
        supports_ = classes.support.bits();
        for (auto [s, count] : classes.strong_leaf_counts) {
            const std::uint64_t fan = (g.neighbors(s) & classes.leaves).bits();
            strong_leaves_ |= fan;
            for (int leaf : VertexSet{fan}) siblings_[leaf] = fan & ~(std::uint64_t{1} << leaf);
        }
        for (int v = 0; v < n_; ++v) closed_[v] = g.closed_neighbors(v).bits();
        block_of_.fill(-1);
        build_order();
    }

    bool lemma_active() const noexcept { return lemma_; }

    OrderVerdict run() {
        unassigned_ = full_mask(n_);
        const bool found = dfs(0);
        if (found) return OrderVerdict::feasible;
        return aborted_ ? OrderVerdict::unknown : OrderVerdict::infeasible;
    }

    Partition witness() const {
        std::vector<int> labels(block_of_.begin(), block_of_.begin() + n_);
        return Partition::from_labels(labels);
    }

private:
    const Graph& g_;
    int n_;
    int k_;
    const PcOptions& opts_;
    Budget& budget_;
    bool lemma_ = false;
    bool aborted_ = false;

    std::vector<int> order_;
    std::array<std::uint64_t, kMaxOrder> closed_{};
    std::array<std::uint64_t, kMaxOrder> siblings_{};
    std::uint64_t supports_ = 0;
    std::uint64_t strong_leaves_ = 0;

    std::array<int, kMaxOrder> block_of_{};
    std::array<std::uint64_t, kMaxOrder> blocks_{};
    std::array<std::uint64_t, kMaxOrder> block_dom_{};
    std::array<int, kMaxOrder> partner_hint_{};
    int used_ = 0;
    int hub_ = -1;
    std::uint64_t unassigned_ = 0;

    void build_order() {
        if (opts_.canonical_witness) {
            for (int v = 0; v < n_; ++v) order_.push_back(v);
            return;
        }
        // Supports first under lemma pruning (they all land in one block), then
        // greedily the vertex with the most already-ordered neighbors so that
        // closed neighborhoods complete early.
        std::uint64_t placed = 0;
        auto take = [&](int v) {
            order_.push_back(v);
            placed |= std::uint64_t{1} << v;
        };
        if (lemma_)
            for (int s : VertexSet{supports_}) take(s);
        while (static_cast<int>(order_.size()) < n_) {
            int best = -1, best_key = -1;
            for (int v : VertexSet{full_mask(n_) & ~placed}) {
                const int key = std::popcount(g_.row(v) & placed) * 128 + g_.degree(v);
                if (key > best_key) {
                    best_key = key;
                    best = v;
                }
            }
            take(best);
        }
    }

    bool lemma_allows(int v, int b) const {
        const std::uint64_t bit = std::uint64_t{1} << v;
        const std::uint64_t members = b < used_ ? blocks_[b] : 0;
        if (supports_ & bit) {
            if (hub_ >= 0 && b != hub_) return false;
            if (members & strong_leaves_) return false;
        }
        if (strong_leaves_ & bit) {
            if (b == hub_) return false;
            if (members & siblings_[v]) return false;
        }
        return true;
    }

    void place(int v, int b) {
        if (b == used_) {
            blocks_[b] = 0;
            block_dom_[b] = 0;
            partner_hint_[b] = -1;
            ++used_;
        }
        block_of_[v] = b;
        blocks_[b] |= std::uint64_t{1} << v;
        block_dom_[b] |= closed_[v];
        unassigned_ &= ~(std::uint64_t{1} << v);
        if (lemma_ && hub_ < 0 && ((supports_ >> v) & 1U)) hub_ = b;
    }

    void unplace(int v, int b, std::uint64_t saved_dom) {
        block_of_[v] = -1;
        blocks_[b] &= ~(std::uint64_t{1} << v);
        block_dom_[b] = saved_dom;
        unassigned_ |= std::uint64_t{1} << v;
        if (blocks_[b] == 0) {
            --used_;
            if (hub_ == b) hub_ = -1;
        } else if (lemma_ && hub_ == b && (blocks_[b] & supports_) == 0) {
            hub_ = -1;
        }
    }

    /// Necessary conditions for blocks a and b (b < 0: a future block drawn
    /// from unassigned vertices) to end up as pc-partners.
    bool pair_possible(int a, int b, std::uint64_t unassigned_dom) const {
        const std::uint64_t d = blocks_[a] | (b >= 0 ? blocks_[b] : 0);
        const std::uint64_t w = d | unassigned_;
        const std::uint64_t dom = block_dom_[a] | (b >= 0 ? block_dom_[b] : 0) | unassigned_dom;
        if (dom != full_mask(n_)) return false;
        for (int v : VertexSet{d})
            if ((g_.row(v) & w) == 0) return false;
        if (opts_.matching_pruning && !has_matching_covering(g_, VertexSet{d}, VertexSet{unassigned_}))
            return false;
        return true;
    }

    bool consistent() {
        std::uint64_t unassigned_dom = 0;
        for (int v : VertexSet{unassigned_}) unassigned_dom |= closed_[v];
        const bool can_open = used_ < k_;
        if (lemma_ && hub_ >= 0) {
            for (int a = 0; a < used_; ++a)
                if (a != hub_ && !pair_possible(a, hub_, unassigned_dom)) return false;
            if (used_ == 1 && !pair_possible(hub_, -1, unassigned_dom)) return false;
            return true;
        }
        for (int a = 0; a < used_; ++a) {
            const int hint = partner_hint_[a];
            if (hint != -2 && hint < used_ && hint != a && pair_possible(a, hint, unassigned_dom)) continue;
            bool ok = false;
            for (int b = 0; b < used_ && !ok; ++b) {
                if (b == a || b == hint) continue;
                if (pair_possible(a, b, unassigned_dom)) {
                    partner_hint_[a] = b;
                    ok = true;
                }
            }
            if (!ok && can_open && pair_possible(a, -1, unassigned_dom)) {
                partner_hint_[a] = -2;
                ok = true;
            }
            if (!ok) return false;
        }
        return true;
    }

    bool verify() const {
        std::array<bool, kMaxOrder> pds{};
        for (int a = 0; a < k_; ++a) {
            pds[a] = is_paired_dominating(g_, VertexSet{blocks_[a]});
            if (pds[a]) return false;
        }
        for (int a = 0; a < k_; ++a) {
            bool partnered = false;
            for (int b = 0; b < k_ && !partnered; ++b)
                if (b != a && is_paired_dominating(g_, VertexSet{blocks_[a] | blocks_[b]})) partnered = true;
            if (!partnered) return false;
        }
        return true;
    }

    bool dfs(int i) {
        if (!budget_.charge()) {
            aborted_ = true;
            return false;
        }
        if (i == n_) return used_ == k_ && verify();
        const int v = order_[i];
        const int remaining_after = n_ - i - 1;
        const int top = std::min(used_, k_ - 1);
        for (int b = 0; b <= top; ++b) {
            const int blocks_after = used_ + (b == used_ ? 1 : 0);
            if (remaining_after < k_ - blocks_after) continue;
            if (lemma_ && !lemma_allows(v, b)) continue;
            const std::uint64_t saved_dom = b < used_ ? block_dom_[b] : 0;
            const int saved_hint = b < used_ ? partner_hint_[b] : -1;
            place(v, b);
            if (consistent() && dfs(i + 1)) return true;
            unplace(v, b, saved_dom);
            if (b < used_) partner_hint_[b] = saved_hint;
            if (aborted_) return false;
        }
        return false;
    }
};

}  // namespace detail

/// Decides whether g admits a pc-partition with exactly k blocks.
inline OrderDecision decide_pc_order(const Graph& g, int k, const PcOptions& opts, detail::Budget& budget) {
    OrderDecision d;
    const int n = g.order();
    const std::uint64_t before = budget.nodes();
    if (k < 2 || k > n) {
        d.verdict = OrderVerdict::infeasible;
        return d;
    }
    if (k == 2 && (n % 2 != 0 || !is_paired_dominating(g, g.vertices()))) {
        // Two blocks partner only with each other, so V itself is paired dominating.
        d.verdict = OrderVerdict::infeasible;
        return d;
    }
    detail::PcSearch search(g, k, opts, budget);
    d.verdict = search.run();
    if (search.lemma_active()) d.assumptions = {kSupportBlockLemma, kStrongLeafLemma};
    if (d.verdict == OrderVerdict::feasible) d.witness = search.witness();
    d.nodes = budget.nodes() - before;
    return d;
}

inline OrderDecision decide_pc_order(const Graph& g, int k, const PcOptions& opts = {}) {
    detail::Budget budget(opts);
    return decide_pc_order(g, k, opts, budget);
}

inline std::vector<std::vector<bool>> partner_matrix(const Graph& g, const Partition& p) {
    const auto report = is_pc_partition(g, p);
    std::vector<std::vector<bool>> m(p.size(), std::vector<bool>(p.size(), false));
    for (int i = 0; i < p.size(); ++i)
        for (int j : report.partners[i]) m[i][j] = true;
    return m;
}

/// Exact paired coalition number.
///
/// Searches orders from the top down, so the first feasible order is PC(G).
/// Orders above `exact_cap` require `lemma_pruning` on a graph with minimum
/// degree 1.
inline PcResult pc_number(const Graph& g, const PcOptions& opts = {}) {
    const int n = g.order();
    const auto classes = classify_vertices(g);
    if (n > opts.exact_cap && !(opts.lemma_pruning && classes.min_degree == 1))
        throw std::invalid_argument("order " + std::to_string(n) + " exceeds exact_cap " +
                                    std::to_string(opts.exact_cap) + " without lemma pruning");
    detail::Budget budget(opts);
    PcResult r;
    int top = n;
    if (opts.assume_binary_ceiling) {
        const int h = perfect_binary_tree_height(g);
        if (h < 3) throw std::invalid_argument("the binary-tree ceiling applies only to T(h) with h >= 3");
        top = std::min(top, 4);
        r.stats.assumptions.emplace_back(kCeilingLemma);
    }
    auto note = [&](const std::vector<std::string>& names) {
        for (const auto& a : names)
            if (std::find(r.stats.assumptions.begin(), r.stats.assumptions.end(), a) == r.stats.assumptions.end())
                r.stats.assumptions.push_back(a);
    };
    r.upper_bound = top;
    if (classes.isolated.empty()) {
        for (int k = top; k >= 2; --k) {
            auto d = decide_pc_order(g, k, opts, budget);
            note(d.assumptions);
            if (d.verdict == OrderVerdict::feasible) {
                r.pc = k;
                r.witness = std::move(d.witness);
                break;
            }
            if (d.verdict == OrderVerdict::unknown) {
                r.exact = false;
                r.stats.budget_exhausted = true;
                break;
            }
            r.stats.refuted_orders.push_back(k);
            r.upper_bound = k - 1;
        }
    }
    if (r.exact) r.upper_bound = r.pc;
    if (r.upper_bound < 2 && r.pc == 0) r.upper_bound = 0;
    r.lower_bound = r.pc;
    if (r.witness) r.pcg_adjacency = partner_matrix(g, *r.witness);
    r.stats.nodes = budget.nodes();
    r.stats.elapsed_seconds = budget.elapsed();
    return r;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

inline constexpr int kOracleCap = 10;

namespace detail {

/// Paired-dominating flag for every vertex subset, via the exhaustive
/// matching routine rather than the blossom code used by the solver.
inline std::vector<char> pds_table(const Graph& g) {
    const int n = g.order();
    std::vector<char> table(std::size_t{1} << n, 0);
    const std::uint64_t all = full_mask(n);
    for (std::uint64_t s = 1; s <= all; ++s) {
        if (std::popcount(s) % 2 != 0) continue;
        std::uint64_t dom = s;
        for (int v : VertexSet{s}) dom |= g.row(v);
        if (dom != all) continue;
        table[s] = 2 * exhaustive_matching_size(g, s) == std::popcount(s);
    }
    return table;
}

inline bool rgs_is_pc_partition(const std::vector<char>& pds, const std::vector<std::uint64_t>& blocks) {
    const int k = static_cast<int>(blocks.size());
    for (int a = 0; a < k; ++a)
        if (pds[blocks[a]]) return false;
    for (int a = 0; a < k; ++a) {
        bool partnered = false;
        for (int b = 0; b < k && !partnered; ++b)
            if (b != a && pds[blocks[a] | blocks[b]]) partnered = true;
        if (!partnered) return false;
    }
    return true;
}

}  // namespace detail

/// Calls f(partition) for every pc-partition of g (order at most 10), in
/// restricted-growth lexicographic order.
template <typename F>
void for_each_pc_partition(const Graph& g, F&& f) {
    const int n = g.order();
    if (n > kOracleCap) throw std::invalid_argument("pc-partition enumeration supports orders up to 10");
    const auto pds = detail::pds_table(g);
    std::vector<std::uint64_t> blocks;
    for_each_set_partition(n, [&](const std::vector<int>& labels, int k) {
        blocks.assign(k, 0);
        for (int v = 0; v < n; ++v) blocks[labels[v]] |= std::uint64_t{1} << v;
        if (k >= 2 && detail::rgs_is_pc_partition(pds, blocks)) f(Partition::from_labels(labels));
        return true;
    });
}

/// PC(G) by checking every set partition; order at most 10.
inline int pc_number_oracle(const Graph& g) {
    const int n = g.order();
    if (n > kOracleCap) throw std::invalid_argument("pc_number_oracle supports orders up to 10");
    const auto pds = detail::pds_table(g);
    int best = 0;
    std::vector<std::uint64_t> blocks;
    for_each_set_partition(n, [&](const std::vector<int>& labels, int k) {
        if (k <= best || k < 2) return true;
        blocks.assign(k, 0);
        for (int v = 0; v < n; ++v) blocks[labels[v]] |= std::uint64_t{1} << v;
        if (detail::rgs_is_pc_partition(pds, blocks)) best = k;
        return true;
    });
    return best;
}

}  // namespace paircoal
