#pragma once

/// \file families.hpp
/// \brief Named graphs and parametrized families, their text form, and
/// recognition by parameter search.
///
/// Vertex numbering: the core vertices v1, v2, ...
/// come first (0-based), then leaf fans in the order their parameters appear.

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paircoal/canonical.hpp"
#include "paircoal/graph.hpp"

namespace paircoal {

enum class FamilyKind {
    path,
    cycle,
    complete,
    star,
    complete_bipartite,
    complete_multipartite,
    double_star,
    subdivided_double_star,
    perfect_binary_tree,
    b,
    b1,
    b2,
    d1,
    d2,
    e1,
    e2,
    e3,
    e4,
    e5,
    e6,
    e7,
    attach_leaves,
    fig1_tree,
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    std::vector<int> params;
    /// Base graph spec for attach_leaves; params then hold per-vertex leaf counts.
    std::shared_ptr<const FamilySpec> base;

    static FamilySpec make(FamilyKind kind, std::vector<int> params = {}) {
        FamilySpec s;
        s.kind = kind;
        s.params = std::move(params);
        return s;
    }
    static FamilySpec attach(FamilySpec base, std::vector<int> counts) {
        FamilySpec s;
        s.kind = FamilyKind::attach_leaves;
        s.params = std::move(counts);
        s.base = std::make_shared<const FamilySpec>(std::move(base));
        return s;
    }

    bool operator==(const FamilySpec& o) const {
        if (kind != o.kind || params != o.params) return false;
        if (!base || !o.base) return !base && !o.base;
        return *base == *o.base;
    }

    std::string to_string() const;
};

namespace detail {

struct KindInfo {
    FamilyKind kind;
    const char* name;
    int min_params;
    int max_params;  // -1: unbounded
};

inline const std::vector<KindInfo>& kind_table() {
    static const std::vector<KindInfo> table = {
        {FamilyKind::path, "P", 1, 1},
        {FamilyKind::cycle, "C", 1, 1},
        {FamilyKind::complete, "K", 1, 1},
        {FamilyKind::star, "Star", 1, 1},
        {FamilyKind::complete_bipartite, "K", 2, 2},
        {FamilyKind::complete_multipartite, "K", 3, -1},
        {FamilyKind::double_star, "S", 2, 2},
        {FamilyKind::subdivided_double_star, "SS", 2, 2},
        {FamilyKind::perfect_binary_tree, "T", 1, 1},
        {FamilyKind::b, "B", 0, 0},
        {FamilyKind::b1, "B1", 1, 1},
        {FamilyKind::b2, "B2", 2, 2},
        {FamilyKind::d1, "D1", 1, 1},
        {FamilyKind::d2, "D2", 2, 2},
        {FamilyKind::e1, "E1", 2, 2},
        {FamilyKind::e2, "E2", 3, 3},
        {FamilyKind::e3, "E3", 1, 1},
        {FamilyKind::e4, "E4", 2, 2},
        {FamilyKind::e5, "E5", 1, 1},
        {FamilyKind::e6, "E6", 1, 1},
        {FamilyKind::e7, "E7", 2, 2},
        {FamilyKind::attach_leaves, "AttachLeaves", 1, -1},
        {FamilyKind::fig1_tree, "Fig1", 0, 0},
    };
    return table;
}

inline const KindInfo& kind_info(FamilyKind k) {
    for (const auto& info : kind_table())
        if (info.kind == k) return info;
    throw std::logic_error("unknown family kind");
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

/// Incremental builder: add_vertex returns the new index.
class Builder {
public:
    int add_vertex() { return n_++; }
    int add_leaf(int parent) {
        const int v = add_vertex();
        edges_.emplace_back(parent, v);
        return v;
    }
    void add_leaves(int parent, int count) {
        for (int i = 0; i < count; ++i) add_leaf(parent);
    }
    void add_edge(int u, int v) { edges_.emplace_back(u, v); }
    void add_cycle(int len) {
        const int first = n_;
        for (int i = 0; i < len; ++i) add_vertex();
        for (int i = 0; i < len; ++i) add_edge(first + i, first + (i + 1) % len);
    }
    int order() const noexcept { return n_; }
    Graph build(std::string label) const {
        if (n_ > kMaxOrder) throw std::invalid_argument("family instance exceeds order 64");
        return Graph::from_edges(n_, edges_, std::move(label));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Pentagon v1..v5 with edges v1v2, v1v3, v2v4, v3v5, v4v5 (indices 0..4).
/// x = v3, y = v5, z = v4.
inline void add_pentagon(Builder& b) {
    for (int i = 0; i < 5; ++i) b.add_vertex();
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 3);
    b.add_edge(2, 4);
    b.add_edge(3, 4);
}

/// Square v1..v4 with edges v1v2, v1v3, v2v4, v3v4 (indices 0..3).
/// x = v1, y = v2, z = v4.
inline void add_square(Builder& b) {
    for (int i = 0; i < 4; ++i) b.add_vertex();
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 3);
    b.add_edge(2, 3);
}

inline void add_triangle(Builder& b) { b.add_cycle(3); }

}  // namespace detail

/// Lower bounds and arity for a spec; throws std::invalid_argument.
inline void validate(const FamilySpec& s) {
    using detail::require;
    const auto& info = detail::kind_info(s.kind);
    const int count = static_cast<int>(s.params.size());
    const std::string name = info.name;
    require(count >= info.min_params && (info.max_params < 0 || count <= info.max_params),
            name + ": wrong number of parameters");
    auto all_at_least = [&](int lo) {
        for (int p : s.params) require(p >= lo, name + ": parameters must be at least " + std::to_string(lo));
    };
    switch (s.kind) {
        case FamilyKind::path:
        case FamilyKind::complete:
            all_at_least(1);
            break;
        case FamilyKind::cycle:
            all_at_least(3);
            break;
        case FamilyKind::star:
            all_at_least(2);
            break;
        case FamilyKind::attach_leaves:
            require(s.base != nullptr, "AttachLeaves needs a base graph");
            validate(*s.base);
            all_at_least(2);
            break;
        default:
            all_at_least(1);
            break;
    }
}

/// Builds the graph named by `s`, labeled with its text form.
inline Graph generate(const FamilySpec& s) {
    validate(s);
    const auto& p = s.params;
    detail::Builder b;
    switch (s.kind) {
        case FamilyKind::path:
            b.add_vertex();
            for (int i = 1; i < p[0]; ++i) b.add_leaf(i - 1);
            break;
        case FamilyKind::cycle:
            b.add_cycle(p[0]);
            break;
        case FamilyKind::complete:
            for (int i = 0; i < p[0]; ++i) {
                b.add_vertex();
                for (int j = 0; j < i; ++j) b.add_edge(j, i);
            }
            break;
        case FamilyKind::star:
            b.add_vertex();
            b.add_leaves(0, p[0] - 1);
            break;
        case FamilyKind::complete_bipartite:
        case FamilyKind::complete_multipartite: {
            std::vector<int> part;
            for (std::size_t i = 0; i < p.size(); ++i) part.insert(part.end(), p[i], static_cast<int>(i));
            for (std::size_t v = 0; v < part.size(); ++v) {
                b.add_vertex();
                for (std::size_t u = 0; u < v; ++u)
                    if (part[u] != part[v]) b.add_edge(static_cast<int>(u), static_cast<int>(v));
            }
            break;
        }
        case FamilyKind::double_star:
            b.add_vertex();
            b.add_leaf(0);
            b.add_leaves(0, p[0]);
            b.add_leaves(1, p[1]);
            break;
        case FamilyKind::subdivided_double_star:
            // Centers 0 and 2, subdivision vertex 1.
            b.add_vertex();
            b.add_leaf(0);
            b.add_leaf(1);
            b.add_leaves(0, p[0]);
            b.add_leaves(2, p[1]);
            break;
        case FamilyKind::perfect_binary_tree: {
            const int n = (1 << (p[0] + 1)) - 1;
            detail::require(n <= kMaxOrder, "T: height too large for order 64");
            b.add_vertex();
            for (int v = 1; v < n; ++v) b.add_leaf((v - 1) / 2);
            break;
        }
        case FamilyKind::b:
            detail::add_pentagon(b);
            break;
        case FamilyKind::b1:
            detail::add_pentagon(b);
            b.add_leaves(2, p[0]);
            break;
        case FamilyKind::b2:
            detail::add_pentagon(b);
            b.add_leaves(2, p[0]);
            b.add_leaves(3, p[1]);
            break;
        case FamilyKind::d1:
            detail::add_square(b);
            b.add_leaves(3, p[0]);
            break;
        case FamilyKind::d2:
            detail::add_square(b);
            b.add_leaves(3, p[0]);
            b.add_leaves(0, p[1]);
            break;
        case FamilyKind::e1:
            detail::add_triangle(b);
            b.add_leaves(0, p[0]);
            b.add_leaves(1, p[1]);
            break;
        case FamilyKind::e2:
            detail::add_triangle(b);
            b.add_leaves(0, p[0]);
            b.add_leaves(1, p[1]);
            b.add_leaves(2, p[2]);
            break;
        case FamilyKind::e3:
        case FamilyKind::e4: {
            detail::add_triangle(b);
            const int w = b.add_leaf(1);
            b.add_leaves(w, p[0]);
            if (s.kind == FamilyKind::e4) b.add_leaves(0, p[1]);
            break;
        }
        case FamilyKind::e5:
        case FamilyKind::e6:
        case FamilyKind::e7: {
            detail::add_triangle(b);
            const int w = b.add_leaf(1);
            const int u = b.add_leaf(w);
            if (s.kind == FamilyKind::e5) {
                b.add_leaves(u, p[0]);
            } else {
                b.add_leaves(1, p[0]);
                if (s.kind == FamilyKind::e7) b.add_leaves(u, p[1]);
            }
            break;
        }
        case FamilyKind::attach_leaves: {
            const Graph base = generate(*s.base);
            detail::require(static_cast<int>(p.size()) == base.order(),
                            "AttachLeaves: need one leaf count per base vertex");
            for (int v = 0; v < base.order(); ++v) b.add_vertex();
            for (auto [u, v] : base.edges()) b.add_edge(u, v);
            for (int v = 0; v < base.order(); ++v) b.add_leaves(v, p[v]);
            break;
        }
        case FamilyKind::fig1_tree:
            // Core v1..v4 with edges v1v2, v1v3, v3v4; leaf fans 3, 2, 2, 4.
            for (int i = 0; i < 4; ++i) b.add_vertex();
            b.add_edge(0, 1);
            b.add_edge(0, 2);
            b.add_edge(2, 3);
            b.add_leaves(0, 3);
            b.add_leaves(1, 2);
            b.add_leaves(2, 2);
            b.add_leaves(3, 4);
            break;
    }
    return b.build(s.to_string());
}

/// Pendant-leaf corona of an arbitrary graph: counts[v] new leaves on v.
inline Graph attach_leaves(const Graph& base, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != base.order())
        throw std::invalid_argument("attach_leaves: need one leaf count per base vertex");
    detail::Builder b;
    for (int v = 0; v < base.order(); ++v) b.add_vertex();
    for (auto [u, v] : base.edges()) b.add_edge(u, v);
    for (int v = 0; v < base.order(); ++v) {
        if (counts[v] < 2) throw std::invalid_argument("attach_leaves: counts must be at least 2");
        b.add_leaves(v, counts[v]);
    }
    return b.build(base.label().empty() ? std::string{} : "AttachLeaves(" + base.label() + ")");
}

inline std::string FamilySpec::to_string() const {
    std::string s = detail::kind_info(kind).name;
    if (params.empty() && !base) return s;
    s += '(';
    bool first = true;
    if (base) {
        s += base->to_string();
        first = false;
    }
    for (int p : params) {
        if (!first) s += ',';
        s += std::to_string(p);
        first = false;
    }
    return s + ')';
}

namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    FamilySpec parse() {
        FamilySpec s = spec();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return s;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("family spec '" + std::string(text_) + "' at position " + std::to_string(pos_) +
                                    ": " + what);
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ - start > 6) fail("number too large");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    FamilySpec spec() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (name.empty()) fail("expected a family name");
        FamilySpec s;
        std::vector<int> params;
        std::optional<FamilySpec> base;
        if (peek('(')) {
            ++pos_;
            if (name == "AttachLeaves") {
                base = spec();
                while (peek(',')) {
                    ++pos_;
                    params.push_back(number());
                }
            } else {
                params.push_back(number());
                while (peek(',')) {
                    ++pos_;
                    params.push_back(number());
                }
            }
            expect(')');
        }
        const int count = static_cast<int>(params.size());
        bool matched = false;
        for (const auto& info : kind_table()) {
            if (name != info.name) continue;
            if (count < info.min_params || (info.max_params >= 0 && count > info.max_params)) continue;
            s.kind = info.kind;
            matched = true;
            break;
        }
        if (!matched) {
            for (const auto& info : kind_table())
                if (name == info.name) fail("wrong number of parameters for " + name);
            fail("unknown family '" + name + "'");
        }
        s.params = std::move(params);
        if (base) s.base = std::make_shared<const FamilySpec>(std::move(*base));
        try {
            validate(s);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        return s;
    }
};

}  // namespace detail

/// Parses the text form, e.g. "P(6)", "E7(2,3)", "T(3)", "B",
/// "AttachLeaves(P(2),2,2)".
inline FamilySpec parse_family(std::string_view text) { return detail::SpecParser(text).parse(); }

// ---------------------------------------------------------------------------
// Recognition

inline constexpr int kRecognizeCap = 32;

/// Kinds that recognize() can search. AttachLeaves is excluded because its
/// base graph is unconstrained.
/// The unicyclic families 𝓑, 𝓑₁, 𝓑₂, 𝓓₁, 𝓓₂, 𝓔₁..𝓔₇.
inline std::vector<FamilyKind> unicyclic_n2_kinds() {
    return {FamilyKind::b,  FamilyKind::b1, FamilyKind::b2, FamilyKind::d1, FamilyKind::d2,
            FamilyKind::e1, FamilyKind::e2, FamilyKind::e3, FamilyKind::e4, FamilyKind::e5,
            FamilyKind::e6, FamilyKind::e7};
}

/// Search order for recognize(g): the unicyclic families first, so C(5) reports as B.
inline std::vector<FamilyKind> recognizable_kinds() {
    std::vector<FamilyKind> out = unicyclic_n2_kinds();
    for (const auto& info : detail::kind_table())
        if (info.kind != FamilyKind::attach_leaves && std::find(out.begin(), out.end(), info.kind) == out.end())
            out.push_back(info.kind);
    return out;
}

namespace detail {

/// Calls f(params) for every tuple of `arity` values >= lo summing to `total`,
/// each tuple in nondecreasing order when `sorted`.
template <typename F>
void for_each_composition(int arity, int total, int lo, bool sorted, F&& f) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int min_next) -> void {
        const int slots = arity - static_cast<int>(cur.size());
        if (slots == 0) {
            if (left == 0) f(cur);
            return;
        }
        const int top = sorted ? left / slots : left - lo * (slots - 1);
        for (int v = min_next; v <= top; ++v) {
            cur.push_back(v);
            self(self, left - v, sorted ? v : lo);
            cur.pop_back();
        }
    };
    if (arity == 0) {
        if (total == 0) f(cur);
        return;
    }
    rec(rec, total, lo);
}

/// Candidate parameter tuples of `kind` yielding order n, in a canonical
/// orientation for kinds with symmetric parameters.
inline std::vector<std::vector<int>> candidates(FamilyKind kind, int n) {
    std::vector<std::vector<int>> out;
    auto push = [&](const std::vector<int>& p) { out.push_back(p); };
    switch (kind) {
        case FamilyKind::path:
        case FamilyKind::complete:
            push({n});
            break;
        case FamilyKind::cycle:
            if (n >= 3) push({n});
            break;
        case FamilyKind::star:
            if (n >= 2) push({n});
            break;
        case FamilyKind::complete_bipartite:
            for_each_composition(2, n, 1, true, push);
            break;
        case FamilyKind::complete_multipartite:
            for (int parts = 3; parts <= n; ++parts) for_each_composition(parts, n, 1, true, push);
            break;
        case FamilyKind::double_star:
            for_each_composition(2, n - 2, 1, true, push);
            break;
        case FamilyKind::subdivided_double_star:
            for_each_composition(2, n - 3, 1, true, push);
            break;
        case FamilyKind::perfect_binary_tree:
            for (int h = 1; (1 << (h + 1)) - 1 <= n; ++h)
                if ((1 << (h + 1)) - 1 == n) push({h});
            break;
        case FamilyKind::b:
        case FamilyKind::fig1_tree:
            push({});
            break;
        case FamilyKind::b1:
            if (n > 5) push({n - 5});
            break;
        case FamilyKind::b2:
            for_each_composition(2, n - 5, 1, true, push);
            break;
        case FamilyKind::d1:
            if (n > 4) push({n - 4});
            break;
        case FamilyKind::d2:
            for_each_composition(2, n - 4, 1, true, push);
            break;
        case FamilyKind::e1:
            for_each_composition(2, n - 3, 1, true, push);
            break;
        case FamilyKind::e2:
            for_each_composition(3, n - 3, 1, true, push);
            break;
        case FamilyKind::e3:
            if (n > 4) push({n - 4});
            break;
        case FamilyKind::e4:
            for_each_composition(2, n - 4, 1, false, push);
            break;
        case FamilyKind::e5:
        case FamilyKind::e6:
            if (n > 5) push({n - 5});
            break;
        case FamilyKind::e7:
            for_each_composition(2, n - 5, 1, false, push);
            break;
        case FamilyKind::attach_leaves:
            break;
    }
    return out;
}

}  // namespace detail

/// Puts symmetric parameters in nondecreasing order so equal graphs get equal
/// specs: B2, D2, E1, E2, S, SS, K(a,b) and the multipartite kind.
inline FamilySpec normalized(FamilySpec s) {
    switch (s.kind) {
        case FamilyKind::b2:
        case FamilyKind::d2:
        case FamilyKind::e1:
        case FamilyKind::e2:
        case FamilyKind::double_star:
        case FamilyKind::subdivided_double_star:
        case FamilyKind::complete_bipartite:
        case FamilyKind::complete_multipartite:
            std::sort(s.params.begin(), s.params.end());
            break;
        default:
            break;
    }
    return s;
}

/// First spec among `kinds` (in the given order) whose graph is isomorphic to
/// g, or nullopt. Returned specs are normalized. Order at most 32.
inline std::optional<FamilySpec> recognize(const Graph& g, const std::vector<FamilyKind>& kinds) {
    const int n = g.order();
    if (n > kRecognizeCap) return std::nullopt;
    const int m = g.edge_count();
    std::optional<CanonicalForm> target;
    for (FamilyKind kind : kinds) {
        if (kind == FamilyKind::attach_leaves) continue;
        for (const auto& params : detail::candidates(kind, n)) {
            const auto spec = FamilySpec::make(kind, params);
            try {
                validate(spec);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const Graph h = generate(spec);
            if (h.order() != n || h.edge_count() != m) continue;
            if (!target) target = canonical_form(g);
            if (canonical_form(h) == *target) return normalized(spec);
        }
    }
    return std::nullopt;
}

inline std::optional<FamilySpec> recognize(const Graph& g) { return recognize(g, recognizable_kinds()); }

}  // namespace paircoal
