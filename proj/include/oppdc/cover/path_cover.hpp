#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oppdc/error.hpp"
#include "oppdc/graph/edge_list.hpp"
#include "oppdc/graph/graph.hpp"

namespace oppdc {

/// Directed vertex sequence in the symmetric orientation. A single vertex
/// is a path of length zero.
class DiPath {
public:
    DiPath() = default;
    DiPath(std::initializer_list<VertexId> vs) : vertices_(vs) {}
    explicit DiPath(std::vector<VertexId> vs) : vertices_(std::move(vs)) {}

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.empty() ? 0 : vertices_.size() - 1; }
    bool empty() const noexcept { return vertices_.empty(); }
    VertexId front() const { return vertices_.front(); }
    VertexId back() const { return vertices_.back(); }

    bool contains(VertexId v) const {
        return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
    }

    bool is_simple() const {
        std::vector<VertexId> s = vertices_;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.push_back({vertices_[i], vertices_[i + 1]});
        return out;
    }

    DiPath reversed() const { return DiPath(std::vector<VertexId>(vertices_.rbegin(), vertices_.rend())); }

    bool operator==(const DiPath&) const = default;

private:
    std::vector<VertexId> vertices_;
};

/// a followed by b, sharing a.back() == b.front().
inline DiPath join(const DiPath& a, const DiPath& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.back() != b.front()) throw InputError("join: paths do not meet");
    std::vector<VertexId> vs = a.vertices();
    vs.insert(vs.end(), b.vertices().begin() + 1, b.vertices().end());
    return DiPath(std::move(vs));
}

/// Candidate oriented perfect path double cover: a list of paths plus the
/// begin/end indexes (P^v and P_v). The type does not enforce validity;
/// verify_oppdc does. When a vertex begins several paths the index keeps
/// the first one.
class PathCover {
public:
    PathCover() = default;
    explicit PathCover(std::vector<DiPath> paths) : paths_(std::move(paths)) { reindex(); }
    PathCover(std::initializer_list<DiPath> paths) : paths_(paths) { reindex(); }

    const std::vector<DiPath>& paths() const noexcept { return paths_; }
    std::size_t size() const noexcept { return paths_.size(); }
    const DiPath& operator[](std::size_t i) const { return paths_.at(i); }

    /// Id of P^v, the path beginning at v.
    std::optional<std::size_t> begin_index(VertexId v) const { return lookup(begin_, v); }
    /// Id of P_v, the path ending at v.
    std::optional<std::size_t> end_index(VertexId v) const { return lookup(end_, v); }

    const DiPath& starting_at(VertexId v) const {
        auto i = begin_index(v);
        if (!i) throw InputError("no path begins at " + std::to_string(v));
        return paths_[*i];
    }
    const DiPath& ending_at(VertexId v) const {
        auto i = end_index(v);
        if (!i) throw InputError("no path ends at " + std::to_string(v));
        return paths_[*i];
    }

    /// One past the largest vertex id mentioned.
    std::size_t vertex_bound() const noexcept { return begin_.size(); }

    std::size_t total_length() const {
        std::size_t s = 0;
        for (const auto& p : paths_) s += p.length();
        return s;
    }

    PathCover reversed() const {
        std::vector<DiPath> r;
        r.reserve(paths_.size());
        for (const auto& p : paths_) r.push_back(p.reversed());
        return PathCover(std::move(r));
    }

    /// Maps every vertex through `map` (old id -> new id).
    PathCover relabeled(std::span<const VertexId> map) const {
        std::vector<DiPath> r;
        r.reserve(paths_.size());
        for (const auto& p : paths_) {
            std::vector<VertexId> vs;
            vs.reserve(p.vertices().size());
            for (VertexId v : p.vertices()) vs.push_back(map[v]);
            r.emplace_back(std::move(vs));
        }
        return PathCover(std::move(r));
    }

    /// Same paths listed in a canonical order (by first vertex, then content).
    PathCover canonical() const {
        std::vector<DiPath> r = paths_;
        std::sort(r.begin(), r.end(),
                  [](const DiPath& a, const DiPath& b) { return a.vertices() < b.vertices(); });
        return PathCover(std::move(r));
    }

    bool operator==(const PathCover& other) const { return paths_ == other.paths_; }

private:
    static constexpr std::int64_t none = -1;

    void reindex() {
        std::size_t bound = 0;
        for (const auto& p : paths_)
            for (VertexId v : p.vertices()) bound = std::max<std::size_t>(bound, v + 1);
        begin_.assign(bound, none);
        end_.assign(bound, none);
        for (std::size_t i = 0; i < paths_.size(); ++i) {
            if (paths_[i].empty()) continue;
            auto& b = begin_[paths_[i].front()];
            auto& e = end_[paths_[i].back()];
            if (b == none) b = static_cast<std::int64_t>(i);
            if (e == none) e = static_cast<std::int64_t>(i);
        }
    }

    static std::optional<std::size_t> lookup(const std::vector<std::int64_t>& index, VertexId v) {
        if (v >= index.size() || index[v] == none) return std::nullopt;
        return static_cast<std::size_t>(index[v]);
    }

    std::vector<DiPath> paths_;
    std::vector<std::int64_t> begin_;
    std::vector<std::int64_t> end_;
};

/// Cover text format:
///
///     paths k
///     <vertex ids of path 1, space separated, in traversal order>
///     ...
///
/// Rejects non-simple paths and vertices that begin or end two paths.
inline PathCover parse_cover(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && detail::is_blank(lines[i])) ++i;
    if (i == lines.size()) throw ParseError("cover: missing header 'paths k'", 1);
    std::string_view head = lines[i];
    while (!head.empty() && head.front() == ' ') head.remove_prefix(1);
    if (head.substr(0, 5) != "paths")
        throw ParseError("line " + std::to_string(i + 1) + ": expected header 'paths k'", i + 1);
    const std::size_t k = detail::read_integers(head.substr(5), 1, i + 1, "path count")[0];
    ++i;

    std::vector<DiPath> paths;
    std::vector<std::size_t> path_line;
    for (; i < lines.size(); ++i) {
        if (detail::is_blank(lines[i])) continue;
        const std::size_t line_no = i + 1;
        if (paths.size() == k)
            throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(k) +
                                 " paths",
                             line_no);
        std::vector<VertexId> vs;
        std::size_t value = 0;
        bool in_number = false;
        for (char c : lines[i]) {
            if (c >= '0' && c <= '9') {
                value = value * 10 + static_cast<std::size_t>(c - '0');
                in_number = true;
            } else if (c == ' ' || c == '\t') {
                if (in_number) vs.push_back(static_cast<VertexId>(value));
                value = 0;
                in_number = false;
            } else {
                throw ParseError("line " + std::to_string(line_no) + ": unexpected character '" +
                                     std::string(1, c) + "'",
                                 line_no);
            }
        }
        if (in_number) vs.push_back(static_cast<VertexId>(value));
        DiPath p(std::move(vs));
        if (!p.is_simple())
            throw ParseError("line " + std::to_string(line_no) + ": non-simple path (repeated vertex)",
                             line_no);
        paths.push_back(std::move(p));
        path_line.push_back(line_no);
    }
    if (paths.size() != k)
        throw ParseError("cover: header announces " + std::to_string(k) + " paths, found " +
                             std::to_string(paths.size()),
                         lines.size());

    PathCover cover(std::move(paths));
    for (std::size_t p = 0; p < cover.size(); ++p) {
        if (*cover.begin_index(cover[p].front()) != p)
            throw ParseError("line " + std::to_string(path_line[p]) + ": vertex " +
                                 std::to_string(cover[p].front()) + " begins more than one path",
                             path_line[p]);
        if (*cover.end_index(cover[p].back()) != p)
            throw ParseError("line " + std::to_string(path_line[p]) + ": vertex " +
                                 std::to_string(cover[p].back()) + " ends more than one path",
                             path_line[p]);
    }
    return cover;
}

inline std::string emit_cover(const PathCover& cover) {
    std::string out = "paths " + std::to_string(cover.size()) + "\n";
    for (const auto& p : cover.paths()) {
        for (std::size_t i = 0; i < p.vertices().size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(p.vertices()[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace oppdc
