#pragma once

// graph6 encoding as produced by nauty's geng/showg:
//
//   N(n)  = n + 63                          for 0 <= n <= 62
//         = 126, then n as 18 bits in 3 bytes  for 63 <= n <= 258047
//   R(x)  = the bits x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) ... x(n-2,n-1)
//           (upper triangle, column by column), right-padded with zeros to a
//           multiple of 6, split into 6-bit big-endian groups, each + 63.
//
// The optional ">>graph6<<" file header is accepted and skipped.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"

namespace oppdc {

inline constexpr std::size_t graph6_max_order = 258047;

namespace detail {

inline std::size_t graph6_body_bytes(std::size_t n) {
    const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
    return (bits + 5) / 6;
}

inline void check_graph6_byte(std::string_view text, std::size_t i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) +
                             " out of range 63..126 at offset " + std::to_string(i),
                         i);
}

}  // namespace detail

/// Parses one graph6 line. A trailing "\n" or "\r\n" is tolerated; anything
/// else past the encoded triangle is an error.
inline Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (line.substr(0, header.size()) == header) base = header.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

    std::size_t pos = base;
    if (pos >= line.size()) throw ParseError("graph6: empty input", pos);
    detail::check_graph6_byte(line, pos);

    std::size_t n = 0;
    if (static_cast<unsigned char>(line[pos]) != 126) {
        n = static_cast<unsigned char>(line[pos]) - 63;
        pos += 1;
    } else {
        if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) == 126)
            throw ParseError("graph6: orders above 258047 are not supported", pos + 1);
        if (pos + 4 > line.size()) throw ParseError("graph6: truncated order field", line.size());
        for (std::size_t k = 1; k <= 3; ++k) {
            detail::check_graph6_byte(line, pos + k);
            n = (n << 6) | (static_cast<unsigned char>(line[pos + k]) - 63);
        }
        if (n < 63) throw ParseError("graph6: long order form used for n < 63", pos);
        pos += 4;
    }

    const std::size_t body = detail::graph6_body_bytes(n);
    for (std::size_t k = pos; k < line.size(); ++k) detail::check_graph6_byte(line, k);
    if (line.size() < pos + body)
        throw ParseError("graph6: expected " + std::to_string(body) + " body bytes for n=" +
                             std::to_string(n) + ", got " + std::to_string(line.size() - pos),
                         line.size());
    if (line.size() > pos + body)
        throw ParseError("graph6: trailing bytes after offset " + std::to_string(pos + body),
                         pos + body);

    auto bit_at = [&](std::size_t bit) {
        const unsigned value = static_cast<unsigned char>(line[pos + bit / 6]) - 63;
        return (value >> (5 - bit % 6)) & 1u;
    };

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++bit)
            if (bit_at(bit)) edges.emplace_back(i, j);
    for (; bit < body * 6; ++bit)
        if (bit_at(bit))
            throw ParseError("graph6: nonzero padding bit at offset " + std::to_string(pos + bit / 6),
                             pos + bit / 6);
    return Graph(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > graph6_max_order) throw DomainError("graph6: order too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<unsigned char> groups(detail::graph6_body_bytes(n), 0);
    for (const Edge& e : g.edges()) {
        const std::size_t bit = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
        groups[bit / 6] |= static_cast<unsigned char>(1u << (5 - bit % 6));
    }
    for (unsigned char c : groups) out.push_back(static_cast<char>(c + 63));
    return out;
}

}  // namespace oppdc
