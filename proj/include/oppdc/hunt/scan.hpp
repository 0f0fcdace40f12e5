#pragma once

// Batch filtering of a graph6 stream, one graph per line.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "oppdc/budget.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/edge_list.hpp"
#include "oppdc/graph/graph6.hpp"
#include "oppdc/graph/structure.hpp"
#include "oppdc/hunt/filter.hpp"

namespace oppdc {

enum class EntryKind { verdict, parse_error, known_exception, disconnected };

inline const char* to_string(EntryKind k) {
    switch (k) {
        case EntryKind::verdict: return "verdict";
        case EntryKind::parse_error: return "parse-error";
        case EntryKind::known_exception: return "known-exception";
        case EntryKind::disconnected: return "disconnected";
    }
    return "?";
}

struct ScanEntry {
    std::size_t line = 0;  // 1-based
    std::string graph6;
    EntryKind kind = EntryKind::verdict;
    std::optional<Graph> graph;
    std::optional<FilterVerdict> verdict;
    std::string message;
    std::chrono::nanoseconds elapsed{0};
};

struct ScanSummary {
    /// In stream order, blank lines skipped.
    std::vector<ScanEntry> entries;
    std::map<std::string, std::size_t> by_rule;
    std::size_t graphs = 0;
    std::size_t survivors = 0;
    std::size_t parse_errors = 0;
    std::size_t known_exceptions = 0;
    std::size_t disconnected = 0;
    std::vector<std::string> survivor_graph6;
};

namespace detail {

inline ScanEntry scan_one(std::size_t line_no, std::string_view text, Budget budget) {
    const auto t0 = std::chrono::steady_clock::now();
    ScanEntry e;
    e.line = line_no;
    e.graph6 = std::string(text);
    try {
        Graph g = parse_graph6(text);
        if (g.order() == 0 || !is_connected(g)) {
            e.kind = EntryKind::disconnected;
        } else if (is_known_exception(g)) {
            e.kind = EntryKind::known_exception;
            e.message = "K" + std::to_string(g.order()) + " has no cover";
        } else {
            e.verdict = filter_minimal_counterexample(g, budget);
        }
        e.graph = std::move(g);
    } catch (const ParseError& err) {
        e.kind = EntryKind::parse_error;
        e.message = err.what();
    }
    e.elapsed = std::chrono::steady_clock::now() - t0;
    return e;
}

}  // namespace detail

/// Filters every non-blank line of `stream`. Malformed lines become
/// parse-error entries. With jobs > 1 graphs are processed on that many
/// threads; the summary does not depend on jobs.
inline ScanSummary scan_stream(std::string_view stream, Budget budget = {}, unsigned jobs = 1) {
    budget.validate();
    std::vector<std::pair<std::size_t, std::string_view>> items;
    const auto lines = detail::split_lines(stream);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view l = lines[i];
        while (!l.empty() && (l.back() == '\r' || l.back() == ' ' || l.back() == '\t')) l.remove_suffix(1);
        while (!l.empty() && (l.front() == ' ' || l.front() == '\t')) l.remove_prefix(1);
        if (!l.empty()) items.emplace_back(i + 1, l);
    }

    ScanSummary s;
    s.entries.resize(items.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < items.size(); k = next++)
            s.entries[k] = detail::scan_one(items[k].first, items[k].second, budget);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
        work();
    }

    for (const auto& e : s.entries) {
        switch (e.kind) {
            case EntryKind::parse_error: ++s.parse_errors; continue;
            case EntryKind::known_exception: ++s.known_exceptions; break;
            case EntryKind::disconnected: ++s.disconnected; break;
            case EntryKind::verdict:
                if (e.verdict->survivor()) {
                    ++s.survivors;
                    s.survivor_graph6.push_back(e.graph6);
                } else {
                    ++s.by_rule[to_string(*e.verdict->eliminated_by)];
                }
                break;
        }
        ++s.graphs;
    }
    return s;
}

}  // namespace oppdc
