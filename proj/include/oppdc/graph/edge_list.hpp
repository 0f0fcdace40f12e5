#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/graph/graph6.hpp"

namespace oppdc {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

inline bool is_blank(std::string_view line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

/// Reads exactly `count` non-negative integers from a line; throws with the
/// 1-based line number otherwise.
inline std::vector<std::size_t> read_integers(std::string_view line, std::size_t count,
                                              std::size_t line_no, std::string_view what) {
    std::istringstream in{std::string(line)};
    std::vector<std::size_t> values;
    std::string token;
    while (in >> token) {
        std::size_t value = 0;
        for (char c : token) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                     std::string(what) + ", got '" + token + "'",
                                 line_no);
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        values.push_back(value);
    }
    if (values.size() != count)
        throw ParseError("line " + std::to_string(line_no) + ": expected " + std::string(what),
                         line_no);
    return values;
}

}  // namespace detail

/// Edge-list text: a header line "n m", then m lines "u v" with 0 <= u,v < n.
/// Blank lines are ignored. Errors carry the 1-based line number.
inline Graph parse_edge_list(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && detail::is_blank(lines[i])) ++i;
    if (i == lines.size()) throw ParseError("edge list: missing header 'n m'", 1);
    const auto header = detail::read_integers(lines[i], 2, i + 1, "header 'n m'");
    const std::size_t n = header[0], m = header[1];
    ++i;

    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<std::size_t> seen_at;  // line number per accepted edge
    for (; i < lines.size(); ++i) {
        if (detail::is_blank(lines[i])) continue;
        const std::size_t line_no = i + 1;
        if (edges.size() == m)
            throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(m) +
                                 " edges",
                             line_no);
        const auto uv = detail::read_integers(lines[i], 2, line_no, "edge 'u v'");
        if (uv[0] >= n || uv[1] >= n)
            throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range 0.." +
                                 std::to_string(n == 0 ? 0 : n - 1),
                             line_no);
        if (uv[0] == uv[1])
            throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " +
                                 std::to_string(uv[0]),
                             line_no);
        const Edge e(static_cast<VertexId>(uv[0]), static_cast<VertexId>(uv[1]));
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k] == e)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                                     to_string(e) + " (first on line " +
                                     std::to_string(seen_at[k]) + ")",
                                 line_no);
        edges.push_back(e);
        seen_at.push_back(line_no);
    }
    if (edges.size() != m)
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         lines.size());
    return Graph(n, edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

/// True when the text should be read as graph6: its first non-blank byte is
/// in 63..126. Edge lists start with a digit, which is below that range.
inline bool looks_like_graph6(std::string_view text) {
    for (char c : text) {
        const auto b = static_cast<unsigned char>(c);
        if (std::isspace(b)) continue;
        return b >= 63 && b <= 126;
    }
    return false;
}

/// Reads a single graph in either format. For graph6, only the first
/// non-blank line is used.
inline Graph read_graph(std::string_view text) {
    if (!looks_like_graph6(text)) return parse_edge_list(text);
    for (std::string_view line : detail::split_lines(text)) {
        if (detail::is_blank(line)) continue;
        return parse_graph6(line);
    }
    throw ParseError("empty graph input", 0);
}

}  // namespace oppdc
