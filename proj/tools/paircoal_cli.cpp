// Command-line front end for the paircoal library.
//
// Exit codes: 0 success, 1 a check failed (suite failure, invalid partition),
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "paircoal.hpp"

namespace pc = paircoal;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    return {std::istreambuf_iterator<char>(in), {}};
}

// A graph argument is a family spec ("P(6)", "E7(1,1)"), a graph6 string, or
// an edge list ("3 2 / 0 1 / 1 2"). "@path" reads the text from a file.
pc::Graph read_graph(const std::string& arg, const std::string& format) {
    std::string text = slurp(arg);
    if (format == "family") return pc::generate(pc::parse_family(text));
    if (format == "graph6") return pc::from_graph6(text);
    if (format == "edge-list") return pc::from_edge_list(text);
    const bool edge_list = text.find_first_of(" /\n\t") != std::string::npos && text.find_first_of("0123456789") == 0;
    if (edge_list) return pc::from_edge_list(text);
    try {
        return pc::generate(pc::parse_family(text));
    } catch (const std::invalid_argument& family_error) {
        try {
            return pc::from_graph6(text);
        } catch (const std::invalid_argument&) {
            throw UsageError("'" + text + "' is not a family spec, graph6 string or edge list (" +
                             family_error.what() + ")");
        }
    }
}

json result_json(const pc::Graph& g, const pc::PcResult& r) {
    json j;
    j["graph6"] = pc::to_graph6(g);
    j["order"] = g.order();
    j["pc"] = r.pc;
    j["exact"] = r.exact;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["witness"] = r.witness ? pc::partition_to_json(*r.witness) : json(nullptr);
    j["pcg"] = r.witness ? json(pc::to_graph6(pc::coalition_graph(g, *r.witness))) : json(nullptr);
    j["nodes"] = r.stats.nodes;
    j["elapsed_seconds"] = r.stats.elapsed_seconds;
    j["assumptions"] = r.stats.assumptions;
    j["refuted_orders"] = r.stats.refuted_orders;
    return j;
}

json report_json(const pc::Partition& p, const pc::PcPartitionReport& r) {
    json j;
    j["valid"] = r.valid;
    j["partition"] = pc::partition_to_json(p);
    j["block_is_pds"] = r.block_is_pds;
    j["partners"] = r.partners;
    j["failures"] = r.failures;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Paired coalitions in graphs: compute, verify and check statements"};
    app.require_subcommand(1);

    std::string graph_arg, partition_arg, format = "auto";
    bool as_json = false;

    auto* compute = app.add_subcommand("compute", "PC(G) with a witness partition");
    compute->add_option("graph", graph_arg, "family spec, graph6, or edge list")->required();
    compute->add_option("--format", format, "auto, family, graph6 or edge-list")
        ->check(CLI::IsMember({"auto", "family", "graph6", "edge-list"}));
    compute->add_flag("--json", as_json, "print JSON");
    pc::PcOptions opts;
    compute->add_flag("--lemma", opts.lemma_pruning, "prune with the minimum-degree-1 support lemmas");
    compute->add_option("--exact-cap", opts.exact_cap, "largest order searched without lemmas");
    compute->add_option("--budget", opts.time_budget_seconds, "time budget in seconds");

    auto* verify = app.add_subcommand("verify", "check a partition against the pc-partition definition");
    verify->add_option("graph", graph_arg)->required();
    verify->add_option("partition", partition_arg, "JSON {\"blocks\": [[...]]} or @file")->required();
    verify->add_option("--format", format)->check(CLI::IsMember({"auto", "family", "graph6", "edge-list"}));

    auto* pcg = app.add_subcommand("pcg", "coalition graph of a pc-partition, as graph6");
    pcg->add_option("graph", graph_arg)->required();
    pcg->add_option("partition", partition_arg)->required();
    pcg->add_option("--format", format)->check(CLI::IsMember({"auto", "family", "graph6", "edge-list"}));

    std::string family_arg, out_format = "graph6";
    auto* gen = app.add_subcommand("gen", "generate a family member");
    gen->add_option("spec", family_arg, "e.g. P(6), K(2,3), T(3), AttachLeaves(P(2),2,2)")->required();
    gen->add_option("--out", out_format)->check(CLI::IsMember({"graph6", "edge-list"}));

    std::string suite_id;
    pc::SuiteParams suite_params;
    int max_order = 0, exact_order = 0, threads = 0;
    auto* suite = app.add_subcommand("suite", "run a named statement suite ('list' shows ids, 'all' runs every suite)");
    suite->add_option("id", suite_id)->required();
    suite->add_option("--max-order", max_order);
    suite->add_option("--order", exact_order);
    suite->add_option("--threads", threads, "defaults to PAIRCOAL_THREADS or 1");
    suite->add_flag("--json", as_json);

    std::string class_name = "trees", survey_out = "table", output_path;
    int survey_order = 0;
    auto* survey = app.add_subcommand("survey", "PC of every graph in a class at one order");
    survey->add_option("--class", class_name)
        ->check(CLI::IsMember({"all", "connected", "trees", "unicyclic", "triangle-free", "connected-triangle-free"}));
    survey->add_option("--order", survey_order)->required();
    survey->add_option("--out", survey_out)->check(CLI::IsMember({"csv", "table"}));
    survey->add_option("--output", output_path, "write to a file instead of stdout");
    survey->add_option("--threads", threads);

    int h_max = 4;
    double budget = 60.0;
    auto* conjecture = app.add_subcommand("conjecture", "PC(T(h)) bounds for h = 1..h-max");
    conjecture->add_option("--h-max", h_max)->check(CLI::Range(1, 6));
    conjecture->add_option("--budget", budget, "seconds per height");
    conjecture->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) {
            const pc::Graph g = read_graph(graph_arg, format);
            const auto r = pc::pc_number(g, opts);
            if (as_json) {
                std::cout << result_json(g, r).dump() << '\n';
            } else {
                std::cout << "PC = " << r.pc << (r.exact ? "" : " (lower bound; upper bound " + std::to_string(r.upper_bound) + ")")
                          << '\n';
                if (r.witness) std::cout << "witness " << r.witness->to_string() << '\n';
                for (const auto& a : r.stats.assumptions) std::cout << "assumed: " << a << '\n';
            }
            return kOk;
        }
        if (*verify || *pcg) {
            const pc::Graph g = read_graph(graph_arg, format);
            const pc::Partition p = pc::partition_from_json(slurp(partition_arg), g.order());
            const auto report = pc::is_pc_partition(g, p);
            if (*verify) {
                std::cout << report_json(p, report).dump() << '\n';
                return report.valid ? kOk : kCheckFailed;
            }
            if (!report.valid) {
                std::cerr << "not a pc-partition:";
                for (const auto& f : report.failures) std::cerr << ' ' << f << ';';
                std::cerr << '\n';
                return kCheckFailed;
            }
            std::cout << pc::to_graph6(pc::coalition_graph(g, p)) << '\n';
            return kOk;
        }
        if (*gen) {
            const pc::Graph g = pc::generate(pc::parse_family(family_arg));
            std::cout << pc::emit_graph(g, out_format == "graph6" ? pc::GraphFormat::graph6 : pc::GraphFormat::edge_list);
            if (out_format == "graph6") std::cout << '\n';
            return kOk;
        }
        if (*suite) {
            if (suite_id == "list") {
                for (const auto& s : pc::suite_registry()) std::cout << s.id << "  " << s.citation << '\n';
                return kOk;
            }
            if (max_order > 0) suite_params.max_order = max_order;
            if (exact_order > 0) suite_params.order = exact_order;
            suite_params.threads = threads;
            std::vector<std::string> ids;
            if (suite_id == "all") {
                for (const auto& s : pc::suite_registry()) ids.push_back(s.id);
            } else {
                ids.push_back(suite_id);
            }
            bool all_passed = true;
            json reports = json::array();
            for (const auto& id : ids) {
                const auto report = pc::run_suite(id, suite_params);
                all_passed = all_passed && report.passed();
                if (as_json)
                    reports.push_back(report.to_json());
                else
                    std::cout << report.to_text();
            }
            if (as_json) std::cout << (ids.size() == 1 ? reports[0] : reports).dump(2) << '\n';
            return all_passed ? kOk : kCheckFailed;
        }
        if (*survey) {
            const auto cls = pc::parse_graph_class(class_name);
            if (survey_order < 1 || survey_order > pc::order_cap(cls))
                throw UsageError("--order must be in 1.." + std::to_string(pc::order_cap(cls)) + " for class " +
                                 class_name);
            const auto result = pc::survey(cls, survey_order, threads);
            std::ostringstream text;
            if (survey_out == "csv") {
                text << result.to_csv();
            } else {
                text << "class " << class_name << ", order " << survey_order << ", " << result.rows.size()
                     << " graphs\npc\tcount\n";
                for (auto [value, count] : result.distribution) text << value << '\t' << count << '\n';
            }
            if (output_path.empty()) {
                std::cout << text.str();
            } else {
                std::ofstream out(output_path);
                if (!out) throw UsageError("cannot write " + output_path);
                out << text.str();
            }
            return kOk;
        }
        if (*conjecture) {
            const auto rows = pc::explore_conjecture(h_max, budget);
            json out = json::array();
            for (const auto& r : rows) {
                if (as_json) {
                    out.push_back({{"h", r.h},
                                   {"order", r.order},
                                   {"exact", r.exact},
                                   {"lower_bound", r.lower_bound},
                                   {"upper_bound", r.upper_bound},
                                   {"witness", r.witness ? pc::partition_to_json(*r.witness) : json(nullptr)},
                                   {"assumptions", r.assumptions},
                                   {"note", r.note},
                                   {"elapsed_seconds", r.elapsed_seconds}});
                    continue;
                }
                std::cout << "h=" << r.h << " order=" << r.order << ": ";
                if (r.exact)
                    std::cout << "PC = " << r.lower_bound;
                else if (r.lower_bound > 0)
                    std::cout << r.lower_bound << " <= PC <= " << r.upper_bound;
                else
                    std::cout << "PC = 0 or 2 <= PC <= " << r.upper_bound;
                if (!r.note.empty()) std::cout << " (" << r.note << ')';
                std::cout << '\n';
                for (const auto& a : r.assumptions) std::cout << "  assumed: " << a << '\n';
            }
            if (as_json) std::cout << out.dump(2) << '\n';
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
