#pragma once

/// \file partition.hpp
/// \brief Vertex partitions in restricted-growth canonical order.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "paircoal/vertex_set.hpp"

namespace paircoal {

/// Ordered blocks covering 0..n-1, pairwise disjoint and nonempty. Blocks are
/// kept sorted by least element, which is exactly the restricted-growth
/// string order (vertex 0 in block 0, first uses in increasing order).
class Partition {
public:
    Partition() = default;

    static Partition from_blocks(int n, std::vector<VertexSet> blocks) {
        if (n < 1 || n > kMaxOrder) throw std::invalid_argument("partition order must be in 1..64");
        VertexSet seen;
        for (const auto& b : blocks) {
            if (b.empty()) throw std::invalid_argument("partition has an empty block");
            if (!b.subset_of(VertexSet::all(n))) throw std::invalid_argument("partition block exceeds order");
            if (!b.disjoint(seen)) throw std::invalid_argument("partition blocks overlap");
            seen |= b;
        }
        if (seen != VertexSet::all(n)) throw std::invalid_argument("partition does not cover every vertex");
        std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
        Partition p;
        p.n_ = n;
        p.blocks_ = std::move(blocks);
        return p;
    }

    static Partition from_lists(int n, const std::vector<std::vector<int>>& lists) {
        std::vector<VertexSet> blocks;
        for (const auto& list : lists) {
            VertexSet b;
            for (int v : list) {
                if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range: " + std::to_string(v));
                if (b.contains(v)) throw std::invalid_argument("vertex repeated in a block: " + std::to_string(v));
                b.insert(v);
            }
            blocks.push_back(b);
        }
        return from_blocks(n, std::move(blocks));
    }

    /// Accepts any block labeling; block ids are renumbered by first use.
    static Partition from_labels(const std::vector<int>& labels) {
        const int n = static_cast<int>(labels.size());
        std::vector<int> remap;
        std::vector<VertexSet> blocks;
        for (int v = 0; v < n; ++v) {
            if (labels[v] < 0) throw std::invalid_argument("negative block label");
            if (labels[v] >= static_cast<int>(remap.size())) remap.resize(labels[v] + 1, -1);
            int& id = remap[labels[v]];
            if (id < 0) {
                id = static_cast<int>(blocks.size());
                blocks.emplace_back();
            }
            blocks[id].insert(v);
        }
        return from_blocks(n, std::move(blocks));
    }

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
    VertexSet block(int i) const { return blocks_.at(i); }

    std::vector<int> rgs() const {
        std::vector<int> out(n_, 0);
        for (int i = 0; i < size(); ++i)
            for (int v : blocks_[i]) out[v] = i;
        return out;
    }

    std::vector<std::vector<int>> to_lists() const {
        std::vector<std::vector<int>> out;
        for (const auto& b : blocks_) out.push_back(b.to_vector());
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ',';
            s += blocks_[i].to_string();
        }
        return s + "}";
    }

    bool operator==(const Partition& o) const noexcept { return n_ == o.n_ && blocks_ == o.blocks_; }

private:
    int n_ = 0;
    std::vector<VertexSet> blocks_;
};

/// Calls f(labels, block_count) for every set partition of 0..n-1, in
/// lexicographic restricted-growth order. Stops early when f returns false.
template <typename F>
void for_each_set_partition(int n, F&& f) {
    if (n < 1) return;
    std::vector<int> a(n, 0), maxima(n, 0);
    for (;;) {
        if (!f(static_cast<const std::vector<int>&>(a), maxima[n - 1] + 1)) return;
        int i = n - 1;
        while (i > 0 && a[i] == maxima[i - 1] + 1) --i;
        if (i == 0) return;
        ++a[i];
        maxima[i] = std::max(maxima[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            maxima[j] = maxima[i];
        }
    }
}

}  // namespace paircoal
