#pragma once

/// \file vertex_set.hpp
/// \brief Fixed-width vertex subsets of a graph with at most 64 vertices.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace paircoal {

inline constexpr int kMaxOrder = 64;

/// Bit mask with all bits below `n` set.
constexpr std::uint64_t full_mask(int n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// A set of vertex indices stored as one machine word.
///
/// The parent order is implicit; operations that need it (complement) take it
/// as an argument.
class VertexSet {
public:
    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    static constexpr VertexSet singleton(int v) noexcept { return VertexSet{std::uint64_t{1} << v}; }
    static constexpr VertexSet all(int n) noexcept { return VertexSet{full_mask(n)}; }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr int min() const noexcept { return bits_ ? std::countr_zero(bits_) : -1; }

    void insert(int v) {
        if (v < 0 || v >= kMaxOrder) throw std::out_of_range("vertex index out of range");
        bits_ |= std::uint64_t{1} << v;
    }
    constexpr void erase(int v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet complement(int n) const noexcept { return VertexSet{~bits_ & full_mask(n)}; }
    constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(VertexSet other) const noexcept { return (bits_ & other.bits_) == 0; }

    constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet{bits_ | o.bits_}; }
    constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet{bits_ & o.bits_}; }
    constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet{bits_ & ~o.bits_}; }
    constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const noexcept = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v : *this) out.push_back(v);
        return out;
    }

    /// Iterates set members in increasing index order.
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() noexcept = default;
        constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
        constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) noexcept { auto tmp = *this; ++*this; return tmp; }
        constexpr bool operator==(const iterator&) const noexcept = default;

    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const noexcept { return iterator{bits_}; }
    constexpr iterator end() const noexcept { return iterator{0}; }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace paircoal
