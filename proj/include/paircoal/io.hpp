#pragma once

/// \file io.hpp
/// \brief graph6 and edge-list text formats, partition JSON, and survey CSV rows.

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "paircoal/graph.hpp"
#include "paircoal/partition.hpp"

namespace paircoal {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at " + std::to_string(position) + ")"), position_(position) {}
    /// 0-based byte offset for graph6, 1-based line number for edge lists.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class GraphFormat { graph6, edge_list };

// ---------------------------------------------------------------------------
// graph6

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    std::size_t pos = 0;
    if (text.substr(0, 10) == ">>graph6<<") pos = 10;
    auto byte = [&](std::size_t at) -> int {
        if (at >= text.size()) throw ParseError("graph6: unexpected end of input", at);
        const int c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", at);
        return c - 63;
    };
    int n = byte(pos);
    if (n == 63) {
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw ParseError("graph6: orders above 258047 are not supported", pos + 1);
        n = (byte(pos + 1) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
        pos += 4;
    } else {
        pos += 1;
    }
    if (n < 1 || n > kMaxOrder) throw ParseError("graph6: order must be in 1..64", pos - 1);
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = pos + (pairs + 5) / 6;
    if (text.size() != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, got " + std::to_string(text.size()),
                         std::min(text.size(), expected));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = byte(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    if (k % 6 != 0) {
        const int chunk = byte(pos + k / 6);
        if (chunk & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", pos + k / 6);
    }
    return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Edge list: "n m", then m lines "u v", 0-based. A '/' also ends a line, so
// "3 2 / 0 1 / 1 2" works on a command line.

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (auto [u, v] : g.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

inline Graph from_edge_list(std::string_view text) {
    std::string body(text);
    std::replace(body.begin(), body.end(), '/', '\n');
    std::istringstream in{body};
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](std::istringstream& fields) {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            fields = std::istringstream(line);
            return true;
        }
        return false;
    };
    std::istringstream fields;
    if (!next_line(fields)) throw ParseError("edge list: missing header line", lineno + 1);
    long long n = 0, m = 0;
    std::string extra;
    if (!(fields >> n >> m) || (fields >> extra)) throw ParseError("edge list: header must be 'n m'", lineno);
    if (n < 1 || n > kMaxOrder) throw ParseError("edge list: order must be in 1..64", lineno);
    if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge list: edge count out of range", lineno);
    std::vector<Edge> edges;
    std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
    for (long long e = 0; e < m; ++e) {
        if (!next_line(fields)) throw ParseError("edge list: expected " + std::to_string(m) + " edges", lineno + 1);
        long long u = 0, v = 0;
        if (!(fields >> u >> v) || (fields >> extra)) throw ParseError("edge list: edge line must be 'u v'", lineno);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex out of range", lineno);
        if (u == v) throw ParseError("edge list: self-loop", lineno);
        if (seen[u * n + v]) throw ParseError("edge list: duplicate edge", lineno);
        seen[u * n + v] = seen[v * n + u] = true;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(fields)) throw ParseError("edge list: trailing content", lineno);
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edge_list(g);
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? from_graph6(text) : from_edge_list(text);
}

/// Reads one graph6 string per nonempty line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

inline void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

// ---------------------------------------------------------------------------
// Partition JSON: {"blocks": [[0, 2], [1], ...]}

inline nlohmann::json partition_to_json(const Partition& p) {
    return nlohmann::json{{"blocks", p.to_lists()}};
}

inline Partition partition_from_json(const nlohmann::json& j, int order) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        throw std::invalid_argument("partition JSON must be an object with a 'blocks' array");
    std::vector<std::vector<int>> lists;
    for (const auto& block : j["blocks"]) {
        if (!block.is_array()) throw std::invalid_argument("partition JSON: each block must be an array");
        std::vector<int> list;
        for (const auto& v : block) {
            if (!v.is_number_integer()) throw std::invalid_argument("partition JSON: vertices must be integers");
            list.push_back(v.get<int>());
        }
        lists.push_back(std::move(list));
    }
    return Partition::from_lists(order, lists);
}

inline Partition partition_from_json(std::string_view text, int order) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("partition JSON: ") + e.what(), e.byte);
    }
    return partition_from_json(j, order);
}

inline Partition partition_from_json(const std::string& text, int order) {
    return partition_from_json(std::string_view(text), order);
}

inline Partition partition_from_json(const char* text, int order) {
    return partition_from_json(std::string_view(text), order);
}

// ---------------------------------------------------------------------------
// Survey CSV

inline constexpr std::string_view kCsvHeader = "graph6,order,class,pc";

/// graph6 uses bytes 63..126 only, so fields never need quoting.
inline std::string csv_row(const Graph& g, std::string_view graph_class, int pc) {
    return to_graph6(g) + ',' + std::to_string(g.order()) + ',' + std::string(graph_class) + ',' + std::to_string(pc);
}

}  // namespace paircoal
