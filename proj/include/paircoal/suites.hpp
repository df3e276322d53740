#pragma once

/// \file suites.hpp
/// \brief Named statement suites, the binary-tree explorer, and PC surveys.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "paircoal/canonical.hpp"
#include "paircoal/coalition.hpp"
#include "paircoal/enumeration.hpp"
#include "paircoal/families.hpp"
#include "paircoal/io.hpp"

namespace paircoal {

// ---------------------------------------------------------------------------
// Worker pool

/// Worker count from PAIRCOAL_THREADS, defaulting to 1.
inline int default_thread_count() {
    if (const char* env = std::getenv("PAIRCOAL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
    }
    return 1;
}

/// Runs f(i) for i in [0, count) on `threads` workers. Callers write results
/// into per-index slots, so aggregation order never depends on scheduling.
template <typename F>
void parallel_for(std::size_t count, int threads, F&& f) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++) f(i);
            } catch (...) {
                errors[t] = std::current_exception();
                next = count;
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------------------
// Reports

struct SuiteFailure {
    std::string graph6;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string id;
    std::string citation;
    std::size_t instances = 0;
    /// Canonical graph6 of every instance, in instance order.
    std::vector<std::string> instance_graph6;
    std::map<int, std::size_t> instances_by_order;
    std::vector<SuiteFailure> failures;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["id"] = id;
        j["citation"] = citation;
        j["passed"] = passed();
        j["instances"] = instances;
        nlohmann::json by_order = nlohmann::json::object();
        for (auto [n, c] : instances_by_order) by_order[std::to_string(n)] = c;
        j["instances_by_order"] = by_order;
        j["failures"] = nlohmann::json::array();
        for (const auto& f : failures)
            j["failures"].push_back({{"graph6", f.graph6}, {"expected", f.expected}, {"got", f.got}});
        j["assumptions"] = assumptions;
        j["notes"] = notes;
        j["elapsed_seconds"] = elapsed_seconds;
        j["graphs"] = instance_graph6;
        return j;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << id << ": " << (passed() ? "PASS" : "FAIL") << " (" << instances << " instances, " << elapsed_seconds
            << " s)\n";
        out << "  statement: " << citation << '\n';
        if (!instances_by_order.empty()) {
            out << "  by order:";
            for (auto [n, c] : instances_by_order) out << ' ' << n << ':' << c;
            out << '\n';
        }
        for (const auto& a : assumptions) out << "  assumed: " << a << '\n';
        for (const auto& note : notes) out << "  note: " << note << '\n';
        for (const auto& f : failures)
            out << "  failure: " << f.graph6 << " expected " << f.expected << ", got " << f.got << '\n';
        return out.str();
    }
};

struct SuiteParams {
    /// Upper order limit; defaults per suite.
    std::optional<int> max_order;
    /// Restrict to exactly this order.
    std::optional<int> order;
    /// 0 selects default_thread_count().
    int threads = 0;
};

struct SuiteInfo {
    std::string id;
    std::string citation;
    int min_order;
    int default_max_order;
    int cap;
};

inline const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> registry = {
        {"paths", "PC(P_n) = 2 when n is 2 or 4, and 3 for every other n >= 3", 2, 12, 14},
        {"cycles", "PC(C_n) = 4 when 4 divides n, and 3 otherwise", 3, 12, 14},
        {"pcp-graphs",
         "coalition graphs of pc-partitions of paths have maximum degree <= 2 and are exactly P_2 and P_3", 2, 8, 10},
        {"pcc-graphs",
         "coalition graphs of pc-partitions of cycles have maximum degree <= 2 and are exactly P_3, K_3, 2K_2, P_4, "
         "C_4",
         3, 8, 10},
        {"pct-star", "coalition graphs of pc-partitions of trees are exactly the stars K_{1,k-1}, k >= 2", 2, 9, 10},
        {"tree-full", "a tree of order n >= 2 has PC = n iff it is a star", 2, 9, 12},
        {"no-n-minus-1", "no graph of order n has PC = n - 1", 1, 7, 8},
        {"tree-n-2",
         "a tree of order n >= 5 has PC = n - 2 iff it is S_{1,p} or S_{p,q} with the edge between its centers "
         "subdivided",
         5, 10, 12},
        {"tree-bound",
         "a tree with strong support vertices that admits a pc-partition has PC >= 1 + the largest leaf count at a "
         "strong support vertex",
         2, 9, 12},
        {"corona-none",
         "attaching at least two leaves to every vertex of a tree with a perfect matching leaves no pc-partition", 4,
         16, 24},
        {"min-deg-one-full", "with minimum degree 1, PC = n iff the support vertex of a leaf is full", 2, 7, 8},
        {"pc-n-girth", "PC = n forces girth at most 4 in graphs that contain a cycle", 1, 7, 8},
        {"triangle-free-n", "a triangle-free graph of order n >= 2 has PC = n iff it is complete bipartite", 2, 7, 9},
        {"girth4-full", "a graph of girth 4 has PC = n iff it is complete bipartite", 4, 7, 8},
        {"multipartite", "every complete multipartite graph of order n >= 2 has PC = n", 2, 7, 8},
        {"unicyclic-n-2",
         "a unicyclic graph has PC = n - 2 iff it belongs to B, B1, B2, D1, D2 or E1..E7; girth >= 6 forces PC < n "
         "- 2",
         3, 9, 11},
        {"binary-trees",
         "PC(T(1)) = 3, PC(T(2)) = 5, PC(T(3)) = 3 and PC(T(4)) = 0; the bound PC(T(h)) <= 4 for h >= 3 is assumed",
         3, 31, 31},
        {"full-vertex", "a graph of order n >= 2 with a full vertex has PC = n", 2, 7, 8},
        {"delta-one-star",
         "with minimum degree 1, every pc-partner pair covers all support vertices; with k >= 3 blocks one block "
         "holds every support vertex and lies in every partner pair, so the coalition graph is K_{1,k-1}",
         2, 7, 8},
        {"tree-support",
         "a tree with a strong support vertex and some pc-partition has PC >= 3; in pc-partitions with >= 3 blocks "
         "the support block is in every partner pair and holds no leaf of a strong support vertex",
         2, 9, 10},
        {"girth6", "girth >= 6 forces PC < n - 2 in graphs that contain a cycle", 6, 9, 9},
        {"girth5-n-2", "a unicyclic graph of girth 5 has PC = n - 2 iff it belongs to B, B1 or B2", 5, 9, 11},
        {"unicyclic-girth4", "a unicyclic graph of girth 4 has PC = n - 2 iff it belongs to D1 or D2", 4, 9, 11},
        {"unicyclic-girth3", "a unicyclic graph of girth 3 has PC = n - 2 iff it belongs to E1..E7", 3, 9, 11},
        {"four-vertex-matching",
         "a 4-vertex set has no perfect matching when it holds an independent 3-set or a vertex isolated inside it", 4,
         6, 7},
    };
    return registry;
}

inline const SuiteInfo& suite_info(std::string_view id) {
    for (const auto& s : suite_registry())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown suite '" + std::string(id) + "'");
}

namespace detail {

struct Outcome {
    bool ok = true;
    std::string expected;
    std::string got;
    std::vector<std::string> notes;
    std::vector<std::string> assumptions;
    /// graph6 strings of canonical coalition graphs seen, for set-level checks.
    std::vector<std::string> realized;

    void fail(std::string exp, std::string actual) {
        if (!ok) return;
        ok = false;
        expected = std::move(exp);
        got = std::move(actual);
    }
};

using Check = std::function<Outcome(const Graph&)>;

struct Batch {
    SuiteReport report;
    std::set<std::string> realized;
};

inline Batch run_batch(const SuiteInfo& info, const std::vector<Graph>& graphs, const Check& check, int threads) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outcomes(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) { outcomes[i] = check(graphs[i]); });
    Batch b;
    auto& r = b.report;
    r.id = info.id;
    r.citation = info.citation;
    r.instances = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto g6 = to_graph6(graphs[i]);
        r.instance_graph6.push_back(g6);
        ++r.instances_by_order[graphs[i].order()];
        const auto& o = outcomes[i];
        if (!o.ok) r.failures.push_back({g6, o.expected, o.got});
        for (const auto& n : o.notes) r.notes.push_back(g6 + ": " + n);
        for (const auto& a : o.assumptions)
            if (std::find(r.assumptions.begin(), r.assumptions.end(), a) == r.assumptions.end())
                r.assumptions.push_back(a);
        b.realized.insert(o.realized.begin(), o.realized.end());
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return b;
}

inline std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_graph(g)); }

inline std::string describe_set(const std::set<std::string>& s) {
    std::string out = "{";
    for (const auto& x : s) {
        if (out.size() > 1) out += ' ';
        out += x;
    }
    return out + "}";
}

inline std::set<std::string> canonical_set(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const auto& g : graphs) out.insert(canonical_graph6(g));
    return out;
}

inline Graph make_star(int k) {
    std::vector<Edge> e;
    for (int i = 1; i < k; ++i) e.emplace_back(0, i);
    return Graph::from_edges(k, e);
}

inline bool is_star(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.edge_count() != n - 1) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    return false;
}

inline int max_degree(const Graph& g) { return classify_vertices(g).max_degree; }

/// Resolves [lo, hi] from the suite defaults and params.
inline std::pair<int, int> order_range(const SuiteInfo& info, const SuiteParams& p) {
    int lo = info.min_order, hi = p.max_order.value_or(info.default_max_order);
    if (p.order) lo = hi = *p.order;
    if (hi > info.cap)
        throw std::invalid_argument("suite " + info.id + ": order " + std::to_string(hi) + " exceeds cap " +
                                    std::to_string(info.cap));
    return {std::max(lo, info.min_order), hi};
}

/// Graphs of orders [lo, hi] in a class, concatenated in order.
inline std::vector<Graph> stream_range(GraphClass cls, int lo, int hi, const std::function<bool(const Graph&)>& keep) {
    std::vector<Graph> out;
    for (int n = std::max(lo, cls == GraphClass::unicyclic ? 3 : 1); n <= hi; ++n)
        for (const auto& g : enumerate_graphs(n, cls))
            if (!keep || keep(g)) out.push_back(g);
    return out;
}

inline Graph path_graph(int n) { return generate(FamilySpec::make(FamilyKind::path, {n})); }
inline Graph cycle_graph(int n) { return generate(FamilySpec::make(FamilyKind::cycle, {n})); }

inline std::string pc_text(int pc) { return "PC=" + std::to_string(pc); }

}  // namespace detail

/// Pattern pc-partition of order 3 for T(h) with odd h: even levels form the
/// hub; the two children of every even-level vertex go one to each of the
/// other two blocks. Heap numbering (children of v are 2v+1, 2v+2).
inline Partition binary_tree_pattern(int h) {
    if (h < 1 || h % 2 == 0) throw std::invalid_argument("binary_tree_pattern needs odd h >= 1");
    const int n = (1 << (h + 1)) - 1;
    if (n > kMaxOrder) throw std::invalid_argument("T(h) exceeds order 64");
    std::vector<int> labels(n, 0);
    for (int v = 1; v < n; ++v) {
        int level = 0;
        for (int x = v + 1; x > 1; x >>= 1) ++level;
        if (level % 2 == 1) labels[v] = (v % 2 == 1) ? 1 : 2;
    }
    return Partition::from_labels(labels);
}

/// Runs the named suite. Throws std::invalid_argument on unknown id or when
/// the requested order exceeds the suite's cap.
inline SuiteReport run_suite(std::string_view id, const SuiteParams& params = {}) {
    using namespace detail;
    const SuiteInfo& info = suite_info(id);
    const int threads = params.threads > 0 ? params.threads : default_thread_count();
    const auto [lo, hi] = order_range(info, params);

    auto exact_pc = [](const Graph& g) { return pc_number(g).pc; };

    if (id == "paths" || id == "cycles") {
        const bool paths = id == "paths";
        std::vector<Graph> graphs;
        for (int n = lo; n <= hi; ++n) graphs.push_back(paths ? path_graph(n) : cycle_graph(n));
        return run_batch(info, graphs, [&](const Graph& g) {
            Outcome o;
            const int n = g.order();
            const int want = paths ? ((n == 2 || n == 4) ? 2 : 3) : (n % 4 == 0 ? 4 : 3);
            const auto r = pc_number(g);
            if (r.pc != want) o.fail(pc_text(want), pc_text(r.pc));
            if (r.witness && !is_pc_partition(g, *r.witness).valid) o.fail("valid witness", "invalid witness");
            return o;
        }, threads).report;
    }

    if (id == "pcp-graphs" || id == "pcc-graphs" || id == "pct-star") {
        std::vector<Graph> graphs;
        std::set<std::string> allowed;
        if (id == "pcp-graphs") {
            for (int n = lo; n <= hi; ++n) graphs.push_back(path_graph(n));
            allowed = canonical_set({path_graph(2), path_graph(3)});
        } else if (id == "pcc-graphs") {
            for (int n = lo; n <= hi; ++n) graphs.push_back(cycle_graph(n));
            allowed = canonical_set({path_graph(3), cycle_graph(3), Graph::from_edges(4, {{0, 1}, {2, 3}}),
                                     path_graph(4), cycle_graph(4)});
        } else {
            graphs = stream_range(GraphClass::trees, lo, hi, {});
            for (int k = 2; k <= hi; ++k) allowed.insert(canonical_graph6(make_star(k)));
        }
        const bool bounded_degree = id != "pct-star";
        auto batch = run_batch(info, graphs, [&](const Graph& g) {
            Outcome o;
            std::set<std::string> seen;
            for_each_pc_partition(g, [&](const Partition& p) {
                const Graph pcg = coalition_graph(g, p);
                const auto key = canonical_graph6(pcg);
                if (seen.insert(key).second) o.realized.push_back(key);
                if (!allowed.count(key)) o.fail("coalition graph in allowed set", "graph6 " + key + " for " + p.to_string());
                if (bounded_degree && max_degree(pcg) > 2) o.fail("max degree <= 2", p.to_string());
            });
            return o;
        }, threads);
        if (!params.order && batch.realized != allowed)
            batch.report.failures.push_back(
                {"(all instances)", "realized set " + describe_set(allowed), describe_set(batch.realized)});
        batch.report.notes.push_back("realized coalition graphs: " + describe_set(batch.realized));
        return batch.report;
    }

    if (id == "tree-full") {
        return run_batch(info, stream_range(GraphClass::trees, lo, hi, {}), [&](const Graph& g) {
            Outcome o;
            const int pc = exact_pc(g);
            const bool star = is_star(g);
            if ((pc == g.order()) != star) o.fail(star ? "PC=n (star)" : "PC<n (not a star)", pc_text(pc));
            return o;
        }, threads).report;
    }

    if (id == "no-n-minus-1") {
        return run_batch(info, stream_range(GraphClass::connected, lo, hi, {}), [&](const Graph& g) {
            Outcome o;
            const int pc = exact_pc(g);
            if (g.order() >= 2 && pc == g.order() - 1) o.fail("PC != n-1", pc_text(pc));
            return o;
        }, threads).report;
    }

    if (id == "tree-n-2") {
        const std::vector<FamilyKind> kinds{FamilyKind::double_star, FamilyKind::subdivided_double_star};
        return run_batch(info, stream_range(GraphClass::trees, lo, hi, {}), [&](const Graph& g) {
            Outcome o;
            const int pc = exact_pc(g);
            const auto spec = recognize(g, kinds);
            const bool member = spec && (spec->kind == FamilyKind::subdivided_double_star || spec->params[0] == 1);
            if ((pc == g.order() - 2) != member)
                o.fail(member ? "PC=n-2 (" + spec->to_string() + ")" : "PC!=n-2", pc_text(pc));
            return o;
        }, threads).report;
    }

    if (id == "tree-bound") {
        return run_batch(info, stream_range(GraphClass::trees, lo, hi, {}), [&](const Graph& g) {
            Outcome o;
            const auto classes = classify_vertices(g);
            if (classes.strong_leaf_counts.empty()) return o;
            const int pc = exact_pc(g);
            if (pc == 0) return o;
            int l = 0;
            for (auto [v, c] : classes.strong_leaf_counts) l = std::max(l, c);
            if (pc < l + 1) o.fail("PC>=" + std::to_string(l + 1), pc_text(pc));
            return o;
        }, threads).report;
    }

    if (id == "corona-none") {
        // Trees with a perfect matching of order <= 4 are P_2 and P_4.
        std::vector<Graph> graphs;
        std::vector<FamilySpec> specs;
        for (int base : {2, 4})
            for (int total = 2 * base; total <= 4 * base; ++total)
                for_each_composition(base, total, 2, false, [&](const std::vector<int>& counts) {
                    if (*std::max_element(counts.begin(), counts.end()) > 4) return;
                    const int n = base + total;
                    if (n < lo || n > hi) return;
                    specs.push_back(FamilySpec::attach(FamilySpec::make(FamilyKind::path, {base}), counts));
                });
        for (const auto& s : specs) graphs.push_back(generate(s));
        auto batch = run_batch(info, graphs, [&](const Graph& g) {
            Outcome o;
            PcOptions opts;
            opts.lemma_pruning = true;
            const auto r = pc_number(g, opts);
            o.assumptions = r.stats.assumptions;
            if (r.pc != 0) o.fail("PC=0", pc_text(r.pc));
            return o;
        }, threads);
        for (const auto& s : specs) batch.report.notes.push_back("instance " + s.to_string());
        return batch.report;
    }

    if (id == "min-deg-one-full") {
        auto keep = [](const Graph& g) { return classify_vertices(g).min_degree == 1; };
        return run_batch(info, stream_range(GraphClass::connected, lo, hi, keep), [&](const Graph& g) {
            Outcome o;
            const auto classes = classify_vertices(g);
            const int leaf = classes.leaves.min();
            const int support = g.neighbors(leaf).min();
            const bool full = classes.full.contains(support);
            const int pc = exact_pc(g);
            if ((pc == g.order()) != full) o.fail(full ? "PC=n (support full)" : "PC<n (support not full)", pc_text(pc));
            return o;
        }, threads).report;
    }

    if (id == "pc-n-girth") {
        auto batch = run_batch(info, stream_range(GraphClass::connected, lo, hi, {}), [&](const Graph& g) {
            Outcome o;
            const int pc = exact_pc(g);
            const auto gi = girth(g);
            if (pc == g.order() && gi.is_finite() && gi.length() > 4) o.fail("girth<=4", "girth " + gi.to_string());
            if (pc == g.order() && !gi.is_finite()) o.notes.push_back("acyclic with PC=n (a star)");
            return o;
        }, threads);
        return batch.report;
    }

    if (id == "triangle-free-n" || id == "girth4-full") {
        const bool g4 = id == "girth4-full";
        auto keep = [g4](const Graph& g) {
            if (g.order() < 2) return false;
            if (!g4) return true;
            const auto gi = girth(g);
            return gi.is_finite() && gi.length() == 4;
        };
        return run_batch(info, stream_range(GraphClass::connected_triangle_free, lo, hi, keep), [&](const Graph& g) {
            Outcome o;
            const int pc = exact_pc(g);
            const bool kb = is_complete_bipartite(g);
            if ((pc == g.order()) != kb) o.fail(kb ? "PC=n (complete bipartite)" : "PC<n", pc_text(pc));
            return o;
        }, threads).report;
    }

    if (id == "multipartite" || id == "full-vertex") {
        const bool multi = id == "multipartite";
        auto keep = [multi](const Graph& g) {
            if (g.order() < 2) return false;
            return multi ? is_complete_multipartite(g) : !classify_vertices(g).full.empty();
        };
        return run_batch(info, stream_range(GraphClass::connected, lo, hi, keep), [&](const Graph& g) {
            Outcome o;
            const int pc = exact_pc(g);
            if (pc != g.order()) o.fail("PC=n", pc_text(pc));
            return o;
        }, threads).report;
    }

    if (id == "unicyclic-n-2") {
        const auto kinds = unicyclic_n2_kinds();
        return run_batch(info, stream_range(GraphClass::unicyclic, lo, hi, {}), [&](const Graph& g) {
            Outcome o;
            const int n = g.order();
            const int pc = exact_pc(g);
            const auto spec = recognize(g, kinds);
            if ((pc == n - 2) != spec.has_value())
                o.fail(spec ? "PC=n-2 (" + spec->to_string() + ")" : "PC!=n-2 (no family)", pc_text(pc));
            const auto gi = girth(g);
            if (gi.length() >= 6 && pc >= n - 2) o.fail("PC<n-2 (girth >= 6)", pc_text(pc));
            if (spec && spec->kind == FamilyKind::b1 && spec->params[0] == 1)
                o.notes.push_back("B1 with a single leaf (a = 1)");
            return o;
        }, threads).report;
    }

    if (id == "binary-trees") {
        std::vector<Graph> graphs;
        for (int h = 1; (1 << (h + 1)) - 1 <= hi; ++h)
            if ((1 << (h + 1)) - 1 >= lo) graphs.push_back(generate(FamilySpec::make(FamilyKind::perfect_binary_tree, {h})));
        return run_batch(info, graphs, [&](const Graph& g) {
            Outcome o;
            const int h = perfect_binary_tree_height(g);
            const int want = h == 1 ? 3 : h == 2 ? 5 : h % 2 == 1 ? 3 : 0;
            PcOptions opts;
            if (h >= 3) {
                opts.lemma_pruning = true;
                opts.assume_binary_ceiling = true;
            }
            const auto r = pc_number(g, opts);
            o.assumptions = r.stats.assumptions;
            if (!r.exact) o.fail(pc_text(want), "budget exhausted");
            if (r.pc != want) o.fail(pc_text(want), pc_text(r.pc));
            if (r.witness && !is_pc_partition(g, *r.witness).valid) o.fail("valid witness", "invalid witness");
            return o;
        }, threads).report;
    }

    if (id == "delta-one-star") {
        auto keep = [](const Graph& g) { return classify_vertices(g).min_degree == 1; };
        return run_batch(info, stream_range(GraphClass::connected, lo, hi, keep), [&](const Graph& g) {
            Outcome o;
            const VertexSet support = classify_vertices(g).support;
            for_each_pc_partition(g, [&](const Partition& p) {
                const auto report = is_pc_partition(g, p);
                const int k = p.size();
                int hub = -1;
                for (int i = 0; i < k; ++i) {
                    if (support.subset_of(p.block(i))) hub = i;
                    for (int j : report.partners[i])
                        if (!support.subset_of(p.block(i) | p.block(j)))
                            o.fail("partner pairs cover the supports", p.to_string());
                }
                if (k >= 3) {
                    if (hub < 0) o.fail("a block holding every support vertex", p.to_string());
                    for (int i = 0; i < k && hub >= 0; ++i)
                        for (int j : report.partners[i])
                            if (i != hub && j != hub) o.fail("every partner pair contains the support block", p.to_string());
                }
                if (!are_isomorphic(coalition_graph(g, p), make_star(k))) o.fail("K_{1,k-1}", p.to_string());
            });
            return o;
        }, threads).report;
    }

    if (id == "tree-support") {
        return run_batch(info, stream_range(GraphClass::trees, lo, hi, {}), [&](const Graph& g) {
            Outcome o;
            const auto classes = classify_vertices(g);
            VertexSet strong_leaves;
            for (int s : classes.strong_support) strong_leaves |= g.neighbors(s) & classes.leaves;
            int best = 0;
            for_each_pc_partition(g, [&](const Partition& p) {
                best = std::max(best, p.size());
                if (p.size() < 3) return;
                const auto report = is_pc_partition(g, p);
                int hub = -1;
                for (int i = 0; i < p.size(); ++i)
                    if (classes.support.subset_of(p.block(i))) hub = i;
                if (hub < 0) {
                    o.fail("a block holding every support vertex", p.to_string());
                    return;
                }
                if (!p.block(hub).disjoint(strong_leaves)) o.fail("support block avoids strong-support leaves", p.to_string());
                for (int i = 0; i < p.size(); ++i)
                    for (int j : report.partners[i])
                        if (i != hub && j != hub) o.fail("every partner pair contains the support block", p.to_string());
            });
            if (!classes.strong_support.empty() && best > 0 && best < 3) o.fail("PC>=3", pc_text(best));
            return o;
        }, threads).report;
    }

    if (id == "unicyclic-girth4" || id == "unicyclic-girth3") {
        const int want_girth = id == "unicyclic-girth4" ? 4 : 3;
        const std::vector<FamilyKind> kinds =
            want_girth == 4 ? std::vector<FamilyKind>{FamilyKind::d1, FamilyKind::d2}
                            : std::vector<FamilyKind>{FamilyKind::e1, FamilyKind::e2, FamilyKind::e3, FamilyKind::e4,
                                                      FamilyKind::e5, FamilyKind::e6, FamilyKind::e7};
        auto keep = [want_girth](const Graph& g) { return girth(g).length() == want_girth; };
        return run_batch(info, stream_range(GraphClass::unicyclic, lo, hi, keep), [&](const Graph& g) {
            Outcome o;
            const int pc = exact_pc(g);
            const auto spec = recognize(g, kinds);
            if ((pc == g.order() - 2) != spec.has_value())
                o.fail(spec ? "PC=n-2 (" + spec->to_string() + ")" : "PC!=n-2 (no family)", pc_text(pc));
            return o;
        }, threads).report;
    }

    if (id == "four-vertex-matching") {
        return run_batch(info, stream_range(GraphClass::all, lo, hi, {}), [&](const Graph& g) {
            Outcome o;
            const int n = g.order();
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                const VertexSet u{bits};
                if (u.size() != 4) continue;
                bool independent_triple = false, isolated = false;
                for (int v : u) {
                    const VertexSet w = u - VertexSet::singleton(v);
                    bool edgeless = true;
                    for (int x : w) edgeless = edgeless && g.neighbors(x).disjoint(w);
                    independent_triple = independent_triple || edgeless;
                    isolated = isolated || g.neighbors(v).disjoint(u);
                }
                if ((independent_triple || isolated) && has_perfect_matching(g, u))
                    o.fail("no perfect matching", "perfect matching on " + u.to_string());
            }
            return o;
        }, threads).report;
    }

    if (id == "girth6" || id == "girth5-n-2") {
        const bool g6 = id == "girth6";
        auto keep = [g6](const Graph& g) {
            const auto gi = girth(g);
            return gi.is_finite() && (g6 ? gi.length() >= 6 : gi.length() == 5);
        };
        // Graphs with two cycles of length 5 sharing a path can reach n - 2,
        // so the family statement is checked on unicyclic graphs only.
        const GraphClass cls = g6 ? GraphClass::connected_triangle_free : GraphClass::unicyclic;
        const std::vector<FamilyKind> kinds{FamilyKind::b, FamilyKind::b1, FamilyKind::b2};
        return run_batch(info, stream_range(cls, lo, hi, keep), [&](const Graph& g) {
            Outcome o;
            const int n = g.order();
            const int pc = exact_pc(g);
            if (g6) {
                if (pc >= n - 2) o.fail("PC<n-2", pc_text(pc));
            } else {
                const auto spec = recognize(g, kinds);
                if ((pc == n - 2) != spec.has_value())
                    o.fail(spec ? "PC=n-2 (" + spec->to_string() + ")" : "PC!=n-2 (no family)", pc_text(pc));
            }
            return o;
        }, threads).report;
    }

    throw std::logic_error("suite registered without an implementation: " + std::string(id));
}

// ---------------------------------------------------------------------------
// Binary-tree explorer

struct ConjectureRow {
    int h = 0;
    int order = 0;
    bool exact = false;
    int lower_bound = 0;
    int upper_bound = 0;
    std::optional<Partition> witness;
    std::vector<std::string> assumptions;
    std::string note;
    double elapsed_seconds = 0.0;
};

/// For each h in 1..h_max (at most 6): exact PC(T(h)) when the search closes
/// within `budget_seconds`, otherwise a verified lower bound and the smallest
/// upper bound the search established. Never reports an unverified value.
inline std::vector<ConjectureRow> explore_conjecture(int h_max, double budget_seconds) {
    if (h_max < 1 || h_max > 6) throw std::invalid_argument("explore_conjecture: h_max must be in 1..6");
    std::vector<ConjectureRow> rows;
    for (int h = 1; h <= h_max; ++h) {
        ConjectureRow row;
        row.h = h;
        row.order = (1 << (h + 1)) - 1;
        const auto start = std::chrono::steady_clock::now();
        if (row.order > kMaxOrder) {
            row.upper_bound = 4;
            row.assumptions.emplace_back(kCeilingLemma);
            row.note = "order exceeds the 64-vertex cap; not searched";
            rows.push_back(std::move(row));
            continue;
        }
        const Graph t = generate(FamilySpec::make(FamilyKind::perfect_binary_tree, {h}));
        PcOptions opts;
        opts.time_budget_seconds = budget_seconds;
        if (h <= 2) {
            const auto r = pc_number(t, opts);
            row.exact = r.exact;
            row.lower_bound = r.lower_bound;
            row.upper_bound = r.upper_bound;
            row.witness = r.witness;
        } else {
            opts.lemma_pruning = true;
            row.assumptions.emplace_back(kCeilingLemma);
            row.upper_bound = 4;
            if (h % 2 == 1) {
                const auto pattern = binary_tree_pattern(h);
                if (is_pc_partition(t, pattern).valid) {
                    row.lower_bound = 3;
                    row.witness = pattern;
                }
            }
            detail::Budget budget(opts);
            bool stopped = false;
            for (int k = 4; k >= std::max(2, row.lower_bound + 1); --k) {
                const auto d = decide_pc_order(t, k, opts, budget);
                for (const auto& a : d.assumptions)
                    if (std::find(row.assumptions.begin(), row.assumptions.end(), a) == row.assumptions.end())
                        row.assumptions.push_back(a);
                if (d.verdict == OrderVerdict::feasible) {
                    row.lower_bound = k;
                    row.witness = d.witness;
                    break;
                }
                if (d.verdict == OrderVerdict::unknown) {
                    stopped = true;
                    row.note = "budget exhausted while deciding order " + std::to_string(k);
                    break;
                }
                row.upper_bound = k - 1;
            }
            if (!stopped && row.upper_bound < 2) row.upper_bound = 0;
            row.exact = !stopped && (row.lower_bound == row.upper_bound);
        }
        row.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Survey

struct SurveyRow {
    std::string graph6;
    int order = 0;
    int pc = 0;
};

struct SurveyResult {
    GraphClass graph_class = GraphClass::all;
    int order = 0;
    std::vector<SurveyRow> rows;
    /// PC value -> number of graphs.
    std::map<int, std::size_t> distribution;

    std::string to_csv() const {
        std::string out(kCsvHeader);
        out += '\n';
        for (const auto& r : rows)
            out += r.graph6 + ',' + std::to_string(r.order) + ',' + to_string(graph_class) + ',' + std::to_string(r.pc) +
                   '\n';
        return out;
    }
};

/// PC of every graph in a class at one order, one row per stream entry.
inline SurveyResult survey(GraphClass cls, int order, int threads = 0) {
    const auto stream = enumerate_graphs(order, cls);
    SurveyResult s;
    s.graph_class = cls;
    s.order = order;
    s.rows.resize(stream.size());
    parallel_for(stream.size(), threads > 0 ? threads : default_thread_count(), [&](std::size_t i) {
        const Graph& g = stream[i];
        s.rows[i] = {to_graph6(g), g.order(), pc_number(g).pc};
    });
    for (const auto& r : s.rows) ++s.distribution[r.pc];
    return s;
}

}  // namespace paircoal
