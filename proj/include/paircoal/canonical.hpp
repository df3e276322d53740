#pragma once

/// \file canonical.hpp
/// \brief Canonical labeling by color refinement plus individualization,
/// with automorphism pruning. Used for isomorphism tests and for
/// deduplicating enumerated graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "paircoal/graph.hpp"

namespace paircoal {

/// Relabeling-invariant certificate: neighbor rows of the canonically
/// relabeled graph.
struct CanonicalForm {
    int order = 0;
    std::vector<std::uint64_t> rows;

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;

    Graph to_graph() const { return Graph::from_adjacency(order, rows); }
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c.order);
        for (auto r : c.rows) {
            h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

namespace detail {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    /// Returns perm with perm[v] = canonical label of v.
    std::vector<int> run() {
        std::vector<int> color(n_, 0);
        refine(color);
        std::vector<int> prefix;
        search(color, prefix);
        return best_labels_;
    }

private:
    using Code = std::vector<std::uint64_t>;

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    Code best_code_;
    std::vector<int> best_labels_;
    std::vector<int> best_path_;
    std::vector<std::vector<int>> generators_;
    int backjump_ = -1;

    static int rank_keys(std::vector<int>& color, const std::vector<std::vector<int>>& keys) {
        const int n = static_cast<int>(color.size());
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
        int cls = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keys[idx[i]] != keys[idx[i - 1]]) ++cls;
            color[idx[i]] = cls;
        }
        return cls + 1;
    }

    void refine(std::vector<int>& color) const {
        int classes = 1 + *std::max_element(color.begin(), color.end());
        std::vector<std::vector<int>> keys(n_);
        for (;;) {
            for (int v = 0; v < n_; ++v) {
                auto& k = keys[v];
                k.clear();
                k.push_back(color[v]);
                for (int w : g_.neighbors(v)) k.push_back(color[w]);
                std::sort(k.begin() + 1, k.end());
            }
            const int next = rank_keys(color, keys);
            if (next == classes) return;
            classes = next;
        }
    }

    Code encode(const std::vector<int>& color) const {
        Code rows(n_, 0);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t r = 0;
            for (int w : g_.neighbors(v)) r |= std::uint64_t{1} << color[w];
            rows[color[v]] = r;
        }
        return rows;
    }

    /// Orbit representatives among `cell` under stored automorphisms that fix
    /// `prefix` pointwise.
    std::vector<int> orbit_roots(const std::vector<int>& prefix) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (const auto& gen : generators_) {
            bool fixes = true;
            for (int p : prefix)
                if (gen[p] != p) { fixes = false; break; }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v), b = find(gen[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        std::vector<int> root(n_);
        for (int v = 0; v < n_; ++v) root[v] = find(v);
        return root;
    }

    void search(const std::vector<int>& color, std::vector<int>& prefix) {
        const int classes = 1 + *std::max_element(color.begin(), color.end());
        if (classes == n_) {
            leaf(color, prefix);
            return;
        }
        // First non-singleton cell in color order; children are its members.
        std::vector<int> size(classes, 0);
        for (int c : color) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;
        std::vector<int> cell;
        for (int v = 0; v < n_; ++v)
            if (color[v] == target) cell.push_back(v);

        std::vector<int> explored;
        const int depth = static_cast<int>(prefix.size());
        for (int v : cell) {
            if (!explored.empty()) {
                const auto root = orbit_roots(prefix);
                bool redundant = false;
                for (int e : explored)
                    if (root[e] == root[v]) { redundant = true; break; }
                if (redundant) continue;
            }
            explored.push_back(v);
            std::vector<int> child = color;
            std::vector<std::vector<int>> keys(n_);
            for (int u = 0; u < n_; ++u) keys[u] = {color[u], u == v ? 0 : 1};
            rank_keys(child, keys);
            refine(child);
            prefix.push_back(v);
            search(child, prefix);
            prefix.pop_back();
            if (backjump_ >= 0) {
                if (backjump_ < depth) return;
                backjump_ = -1;
            }
        }
    }

    void leaf(const std::vector<int>& color, const std::vector<int>& path) {
        Code code = encode(color);
        if (!have_best_ || code < best_code_) {
            have_best_ = true;
            best_code_ = std::move(code);
            best_labels_ = color;
            best_path_ = path;
            return;
        }
        if (code != best_code_) return;
        // Equal leaf: best_labels_^-1 composed with color is an automorphism.
        std::vector<int> inv(n_);
        for (int v = 0; v < n_; ++v) inv[best_labels_[v]] = v;
        std::vector<int> gen(n_);
        for (int v = 0; v < n_; ++v) gen[inv[color[v]]] = v;
        generators_.push_back(std::move(gen));
        int common = 0;
        while (common < static_cast<int>(path.size()) && common < static_cast<int>(best_path_.size()) &&
               path[common] == best_path_[common])
            ++common;
        backjump_ = common;
    }
};

}  // namespace detail

/// perm[v] is the canonical index of vertex v. No order cap; cost grows with
/// the automorphism structure of g.
inline std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() == 0) return {};
    return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) {
    const auto perm = canonical_labeling(g);
    CanonicalForm c;
    c.order = g.order();
    c.rows.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t r = 0;
        for (int w : g.neighbors(v)) r |= std::uint64_t{1} << perm[w];
        c.rows[perm[v]] = r;
    }
    return c;
}

inline Graph canonical_graph(const Graph& g) { return canonical_form(g).to_graph().with_label(g.label()); }

inline constexpr int kIsomorphismCap = 16;

/// Isomorphism test for graphs of order at most 16.
inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() > kIsomorphismCap || h.order() > kIsomorphismCap)
        throw std::invalid_argument("are_isomorphic supports orders up to 16");
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace paircoal
