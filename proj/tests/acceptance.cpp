// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "test_support.hpp"

using namespace paircoal;
using namespace testing_support;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail << "failed: " << what << "; ";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

void path_cycle_formulas(Verdict& v) {
    const auto start = Clock::now();
    int instances = 0;
    for (int n = 2; n <= 12; ++n, ++instances)
        v.require(pc_number(path(n)).pc == ((n == 2 || n == 4) ? 2 : 3), "PC(P_" + std::to_string(n) + ")");
    for (int n = 3; n <= 12; ++n, ++instances)
        v.require(pc_number(cycle(n)).pc == (n % 4 == 0 ? 4 : 3), "PC(C_" + std::to_string(n) + ")");
    const double t = seconds_since(start);
    // n = 2..12 and n = 3..12 give 11 + 10 instances.
    v.require(instances == 21, "instance count");
    v.require(t < 30.0, "runtime under 30 s");
    v.detail << instances << " instances, " << t << " s";
}

void oracle_equivalence(Verdict& v) {
    const auto start = Clock::now();
    const auto eight = enumerate_graphs(8, GraphClass::connected);
    const auto eight_by_edges = enumerate_graphs_by_edges(8, GraphClass::connected);
    v.require(eight.size() == 11117, "11117 connected graphs of order 8 (vertex extension)");
    v.require(eight_by_edges.size() == 11117, "11117 connected graphs of order 8 (edge augmentation)");
    for (std::size_t i = 0; i < eight.size() && i < eight_by_edges.size(); ++i)
        v.require(canonical_form(eight[i]) == canonical_form(eight_by_edges[i]), "routes produce the same graphs");
    std::size_t checked = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto stream = n == 8 ? eight : enumerate_graphs(n, GraphClass::connected);
        for (const auto& g : stream) {
            v.require(pc_number(g).pc == pc_number_oracle(g), "pc_number = oracle on " + to_graph6(g));
            ++checked;
        }
    }
    const double t = seconds_since(start);
    v.require(t < 600.0, "runtime under 10 min");
    v.detail << checked << " connected graphs of order <= 8 (" << eight.size() << " of order 8), " << t << " s";
}

void no_n_minus_one(Verdict& v) {
    const auto start = Clock::now();
    const auto seven = enumerate_graphs(7, GraphClass::connected);
    v.require(seven.size() == 853, "853 connected graphs of order 7");
    std::size_t checked = 0, exceptions = 0;
    for (int n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, GraphClass::connected)) {
            ++checked;
            if (pc_number(g).pc == n - 1) ++exceptions;
        }
    v.require(exceptions == 0, "no graph with PC = n-1");
    v.detail << checked << " graphs, " << exceptions << " exceptions, " << seconds_since(start) << " s";
}

void tree_characterizations(Verdict& v) {
    const auto start = Clock::now();
    std::size_t checked = 0;
    const std::vector<FamilyKind> n2{FamilyKind::double_star, FamilyKind::subdivided_double_star};
    for (int n = 2; n <= 10; ++n)
        for (const auto& t : enumerate_trees(n)) {
            ++checked;
            const int pc = pc_number(t).pc;
            v.require((pc == n) == structure_class(t).star, "PC = n iff star on " + to_graph6(t));
            if (n < 5) continue;
            const auto spec = recognize(t, n2);
            const bool member = spec && (spec->kind == FamilyKind::subdivided_double_star || spec->params[0] == 1);
            v.require((pc == n - 2) == member, "PC = n-2 iff S(1,p) or SS(p,q) on " + to_graph6(t));
        }
    const double t = seconds_since(start);
    v.require(t < 300.0, "runtime under 5 min");
    v.detail << checked << " trees of order 2..10, " << t << " s";
}

void suite_criterion(Verdict& v, const char* id) {
    const auto r = run_suite(id);
    v.require(r.passed(), std::string(id) + " suite");
    for (const auto& f : r.failures) v.detail << f.graph6 << " expected " << f.expected << " got " << f.got << "; ";
    v.detail << r.instances << " instances, " << r.elapsed_seconds << " s";
}

void unicyclic(Verdict& v) {
    suite_criterion(v, "unicyclic-n-2");
    std::size_t girth6 = 0;
    for (int n = 6; n <= 9; ++n)
        for (const auto& g : enumerate_unicyclic(n))
            if (girth(g).length() >= 6) {
                ++girth6;
                v.require(pc_number(g).pc < n - 2, "girth >= 6 gives PC < n-2 on " + to_graph6(g));
            }
    v.detail << ", " << girth6 << " of girth >= 6";
}

void binary_trees(Verdict& v) {
    const auto start = Clock::now();
    v.require(pc_number(family("T(1)")).pc == 3, "PC(T(1)) = 3");
    v.require(pc_number(family("T(2)")).pc == 5, "PC(T(2)) = 5");
    PcOptions o;
    o.lemma_pruning = true;
    o.assume_binary_ceiling = true;
    const auto t3 = pc_number(family("T(3)"), o);
    v.require(t3.exact && t3.pc == 3, "PC(T(3)) = 3");
    v.require(t3.witness && is_pc_partition(family("T(3)"), *t3.witness).valid, "T(3) witness verifies");
    v.require(t3.stats.refuted_orders == std::vector<int>{4}, "T(3): order 4 refuted");
    const auto t4_start = Clock::now();
    const auto t4 = pc_number(family("T(4)"), o);
    const double t4_time = seconds_since(t4_start);
    v.require(t4.exact && t4.pc == 0, "PC(T(4)) = 0");
    v.require(t4.stats.refuted_orders == (std::vector<int>{4, 3, 2}), "T(4): orders 4, 3, 2 refuted");
    // Order 2 on 31 vertices is closed by parity before any search.
    v.require(decide_pc_order(family("T(4)"), 2, o).nodes == 0, "T(4) order 2 closed by parity");
    for (const auto& r : {t3, t4}) {
        v.require(contains(r.stats.assumptions, kCeilingLemma), "ceiling lemma logged");
        v.require(contains(r.stats.assumptions, kSupportBlockLemma), "support-block lemma logged");
    }
    v.require(t4_time < 600.0, "T(4) under 10 min");
    v.detail << "T(4) " << t4.stats.nodes << " nodes, " << t4_time << " s; total " << seconds_since(start) << " s";
}

void no_partition_trees(Verdict& v) {
    PcOptions o;
    o.lemma_pruning = true;
    for (const char* spec : {"Fig1", "AttachLeaves(P(2),2,2)", "AttachLeaves(P(4),2,2,2,2)"}) {
        const auto r = pc_number(family(spec), o);
        v.require(r.exact && r.pc == 0, std::string(spec) + " has PC = 0");
        v.detail << spec << "=" << r.pc << " ";
    }
    PcOptions plain;
    plain.exact_cap = 15;
    v.require(pc_number(family("Fig1"), plain).pc == 0, "Fig1 has PC = 0 without lemmas");
}

void pcg_realizations(Verdict& v) {
    auto check = [&](const Graph& g, std::vector<std::vector<int>> lists, const Graph& expected, const char* name) {
        const auto p = Partition::from_lists(g.order(), lists);
        const bool valid = is_pc_partition(g, p).valid;
        v.require(valid, std::string(name) + " is a pc-partition");
        if (valid) v.require(are_isomorphic(coalition_graph(g, p), expected), std::string(name) + " coalition graph");
    };
    check(path(5), {{0}, {1, 2, 3}, {4}}, path(3), "P_5");
    check(cycle(8), {{0, 1, 4}, {2, 6, 7}, {5}, {3}}, Graph::from_edges(4, {{0, 1}, {2, 3}}), "C_8/D");
    check(cycle(8), {{0, 1, 5}, {2, 6, 7}, {4}, {3}}, path(4), "C_8/E");
    check(cycle(3), {{0}, {1}, {2}}, cycle(3), "C_3");
    check(cycle(4), {{0}, {1}, {2}, {3}}, cycle(4), "C_4");
    const auto r = run_suite("delta-one-star");
    v.require(r.passed(), "delta-one-star suite");
    v.detail << "5 paper partitions; " << r.instances << " graphs with minimum degree 1 of order <= 7";
}

std::size_t property_suites(Verdict& v) {
    std::mt19937_64 rng(kSeed);
    std::size_t cases = 0;
    // Matching oracle.
    for (int i = 0; i < 4000; ++i, ++cases) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = random_graph(rng, n, 0.4);
        const VertexSet s{(rng() & g.vertices().bits()) | 1U};
        v.require(has_perfect_matching(g, s) == has_perfect_matching(g, s, MatchingAlgorithm::exhaustive),
                  "blossom = exhaustive on " + to_graph6(g));
        v.require(maximum_matching(g).size() == maximum_matching(g, MatchingAlgorithm::exhaustive).size(),
                  "maximum matching size on " + to_graph6(g));
    }
    // Relabeling invariance.
    for (int i = 0; i < 2000; ++i, ++cases) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.4);
        const Graph h = shuffled(rng, g);
        v.require(canonical_form(g) == canonical_form(h), "canonical form invariance");
        v.require(pc_number(g).pc == pc_number(h).pc, "pc_number invariance on " + to_graph6(g));
    }
    // I/O round trips.
    for (int i = 0; i < 3000; ++i, ++cases) {
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 64), 0.3);
        v.require(from_graph6(to_graph6(g)) == g, "graph6 round trip");
        v.require(from_edge_list(to_edge_list(g)) == g, "edge-list round trip");
    }
    // recognize after generate, on randomly relabeled members of random families.
    const auto kinds = recognizable_kinds();
    for (int done = 0; done < 1500;) {
        const FamilyKind kind = kinds[rng() % kinds.size()];
        const auto params = detail::candidates(kind, 3 + static_cast<int>(rng() % 12));
        if (params.empty()) continue;
        const auto spec = FamilySpec::make(kind, params[rng() % params.size()]);
        try {
            validate(spec);
        } catch (const std::invalid_argument&) {
            continue;
        }
        const auto back = recognize(shuffled(rng, generate(spec)), {kind});
        v.require(back && *back == normalized(spec), "recognize(generate(" + spec.to_string() + "))");
        ++done;
        ++cases;
    }
    v.require(cases >= 10000, "at least 10^4 cases");
    v.detail << cases << " randomized cases, seed " << kSeed;
    return cases;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Verdict&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "path and cycle formulas", path_cycle_formulas},
        {2, "oracle equivalence on connected graphs of order <= 8", oracle_equivalence},
        {3, "PC != n-1 on connected graphs of order <= 7", no_n_minus_one},
        {4, "tree characterizations of PC = n and PC = n-2", tree_characterizations},
        {5, "unicyclic PC = n-2 characterization", unicyclic},
        {6, "triangle-free PC = n iff complete bipartite", [](Verdict& v) { suite_criterion(v, "triangle-free-n"); }},
        {7, "perfect binary trees T(1)..T(4)", binary_trees},
        {8, "trees without pc-partitions", no_partition_trees},
        {9, "coalition graph realizations", pcg_realizations},
        {10, "randomized property suites", [](Verdict& v) { property_suites(v); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        const auto start = Clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        if (!v.pass) ++failed;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << v.detail.str()
                  << "] (" << seconds_since(start) << " s)" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
