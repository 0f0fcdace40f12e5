#pragma once

// Depth-first cover search over the symmetric orientation.
//
// Every vertex begins exactly one path, so paths are built in increasing
// order of their start vertex; path k is grown arc by arc from its start and
// closed at a vertex that has not ended a path yet. The state is one bitmask
// of unused out-arcs and one of unused in-arcs per vertex.
//
// Pruning:
//  * a vertex that still has to begin a path must keep an unused out-arc;
//  * a vertex that still has to end a path must keep an unused in-arc, so a
//    head that just lost its last in-arc is forced to close the path there;
//  * every path is simple, so the remaining arcs must fit into the remaining
//    paths at (largest component order - 1) arcs each, and each remaining
//    non-isolated start needs at least one arc.
//
// The same engine does constrained completion: a set of fixed paths is
// applied first and only the missing paths are searched.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oppdc/budget.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/cover/verify.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/graph/structure.hpp"

namespace oppdc {

enum class SolveStatus { cover, unsat, budget_exhausted };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::cover: return "cover";
        case SolveStatus::unsat: return "unsat";
        case SolveStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

struct SolveOutcome {
    SolveStatus status = SolveStatus::budget_exhausted;
    std::optional<PathCover> cover;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::size_t search_max_order = 64;

namespace detail {

class CoverSearch {
public:
    CoverSearch(const Graph& g, std::span<const DiPath> fixed, BudgetMeter& meter)
        : g_(g), meter_(meter), n_(g.order()) {
        if (n_ > search_max_order)
            throw DomainError("cover search supports at most " + std::to_string(search_max_order) +
                              " vertices");
        out_free_.assign(n_, 0);
        in_free_.assign(n_, 0);
        for (const Edge& e : g.edges()) {
            out_free_[e.u] |= bit(e.v);
            out_free_[e.v] |= bit(e.u);
            in_free_[e.u] |= bit(e.v);
            in_free_[e.v] |= bit(e.u);
        }
        remaining_ = 2 * g.size();
        for (const auto& comp : connected_components(g))
            max_len_ = std::max<std::size_t>(max_len_, comp.size() - 1);

        for (const DiPath& p : fixed) apply_fixed(p);
        paths_.assign(fixed.begin(), fixed.end());

        for (VertexId v = 0; v < n_; ++v)
            if (!(started_ & bit(v))) starts_.push_back(v);
        // suffix count of non-isolated starts
        open_after_.assign(starts_.size() + 1, 0);
        for (std::size_t k = starts_.size(); k-- > 0;)
            open_after_[k] = open_after_[k + 1] + (g_.degree(starts_[k]) > 0 ? 1 : 0);
    }

    /// Runs the search. cover: paths() holds a full cover (fixed paths
    /// first). unsat: no completion exists. budget_exhausted: gave up.
    SolveStatus run() {
        if (infeasible_) return SolveStatus::unsat;
        const bool found = next_path(0);
        if (found) return SolveStatus::cover;
        return aborted_ ? SolveStatus::budget_exhausted : SolveStatus::unsat;
    }

    const std::vector<DiPath>& paths() const noexcept { return paths_; }

private:
    static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

    void apply_fixed(const DiPath& p) {
        if (p.empty()) throw InputError("fixed path is empty");
        for (VertexId v : p.vertices())
            if (v >= n_) throw InputError("fixed path leaves the graph");
        if (!p.is_simple()) throw InputError("fixed path is not simple");
        if (p.length() == 0 && g_.degree(p.front()) > 0)
            throw InputError("fixed zero-length path at non-isolated vertex");
        if (started_ & bit(p.front())) throw InputError("two fixed paths begin at the same vertex");
        if (ended_ & bit(p.back())) throw InputError("two fixed paths end at the same vertex");
        for (const Arc& a : p.arcs()) {
            if (!g_.has_edge(a.from, a.to)) throw InputError("fixed path uses non-edge " + to_string(a));
            if (!(out_free_[a.from] & bit(a.to))) throw InputError("fixed paths share arc " + to_string(a));
            out_free_[a.from] &= ~bit(a.to);
            in_free_[a.to] &= ~bit(a.from);
            --remaining_;
        }
        started_ |= bit(p.front());
        ended_ |= bit(p.back());
        // Fixed paths may already make the instance infeasible.
        for (VertexId v = 0; v < n_; ++v) {
            if (g_.degree(v) == 0) continue;
            if (!(started_ & bit(v)) && out_free_[v] == 0) infeasible_ = true;
            if (!(ended_ & bit(v)) && in_free_[v] == 0) infeasible_ = true;
        }
    }

    bool fits(std::size_t open_paths, std::size_t current_slack) const {
        return remaining_ <= open_paths * max_len_ + current_slack && remaining_ >= open_paths;
    }

    bool next_path(std::size_t k) {
        if (k == starts_.size()) return remaining_ == 0;
        const VertexId s = starts_[k];
        if (g_.degree(s) == 0) {
            if (ended_ & bit(s)) return false;
            ended_ |= bit(s);
            paths_.push_back(DiPath{s});
            if (next_path(k + 1)) return true;
            paths_.pop_back();
            ended_ &= ~bit(s);
            return false;
        }
        if (!fits(open_after_[k], 0)) return false;
        current_.assign(1, s);
        on_path_ = bit(s);
        started_ |= bit(s);
        const bool ok = grow(k);
        started_ &= ~bit(s);
        return ok;
    }

    bool grow(std::size_t k) {
        if (!meter_.tick()) {
            aborted_ = true;
            return false;
        }
        const VertexId h = current_.back();
        const bool closable = current_.size() > 1 && !(ended_ & bit(h));
        const bool forced_close = closable && in_free_[h] == 0;

        if (!forced_close) {
            const std::size_t future_open = open_after_[k + 1];
            std::uint64_t candidates = out_free_[h] & ~on_path_;
            while (candidates) {
                const auto w = static_cast<VertexId>(std::countr_zero(candidates));
                candidates &= candidates - 1;

                out_free_[h] &= ~bit(w);
                in_free_[w] &= ~bit(h);
                --remaining_;
                const bool h_needs_start = !(started_ & bit(h));
                const std::size_t len_after = current_.size();  // arcs on path once w is appended
                const std::size_t slack = max_len_ > len_after ? max_len_ - len_after : 0;
                const bool ok = !(h_needs_start && out_free_[h] == 0) && fits(future_open, slack);
                if (ok) {
                    current_.push_back(w);
                    on_path_ |= bit(w);
                    const bool found = grow(k);
                    on_path_ &= ~bit(w);
                    current_.pop_back();
                    if (found) return true;
                }
                ++remaining_;
                in_free_[w] |= bit(h);
                out_free_[h] |= bit(w);
                if (aborted_) return false;
            }
        }

        if (closable) {
            if (!fits(open_after_[k + 1], 0)) return false;
            ended_ |= bit(h);
            paths_.emplace_back(current_);
            const std::vector<VertexId> saved = current_;
            const std::uint64_t saved_on_path = on_path_;
            const bool found = next_path(k + 1);
            current_ = saved;
            on_path_ = saved_on_path;
            if (found) return true;
            paths_.pop_back();
            ended_ &= ~bit(h);
        }
        return false;
    }

    const Graph& g_;
    BudgetMeter& meter_;
    std::size_t n_;
    std::vector<std::uint64_t> out_free_, in_free_;
    std::uint64_t started_ = 0, ended_ = 0, on_path_ = 0;
    std::size_t remaining_ = 0;
    std::size_t max_len_ = 0;
    std::vector<VertexId> starts_;
    std::vector<std::size_t> open_after_;
    std::vector<VertexId> current_;
    std::vector<DiPath> paths_;
    bool aborted_ = false;
    bool infeasible_ = false;
};

inline PathCover ordered_by_start(std::vector<DiPath> paths) {
    std::sort(paths.begin(), paths.end(),
              [](const DiPath& a, const DiPath& b) { return a.front() < b.front(); });
    return PathCover(std::move(paths));
}

/// Asserts the soundness contract on every cover the solver hands out.
inline void certify(const Graph& g, const PathCover& c) {
    const auto report = verify_oppdc(g, c, true);
    if (!report.valid) throw std::logic_error("solver produced an invalid cover: " + report.summary());
}

}  // namespace detail

/// Searches for the paths missing from `fixed` so that together they form a
/// cover of g. unsat means no completion of these fixed paths exists (not
/// that g has no cover, unless `fixed` is empty).
inline SolveOutcome complete_cover(const Graph& g, std::span<const DiPath> fixed, BudgetMeter& meter) {
    const auto start_nodes = meter.nodes();
    const auto t0 = std::chrono::steady_clock::now();
    detail::CoverSearch search(g, fixed, meter);
    SolveOutcome out;
    out.status = search.run();
    if (out.status == SolveStatus::cover) {
        out.cover = detail::ordered_by_start(search.paths());
        detail::certify(g, *out.cover);
    }
    out.nodes_explored = meter.nodes() - start_nodes;
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

inline SolveOutcome complete_cover(const Graph& g, std::span<const DiPath> fixed, Budget budget) {
    BudgetMeter meter(budget);
    return complete_cover(g, fixed, meter);
}

/// Exhaustive search on a connected graph. unsat is returned only after the
/// whole search tree was explored without a budget trip.
inline SolveOutcome solve_exhaustive(const Graph& g, BudgetMeter& meter) {
    if (!is_connected(g)) throw DomainError("solve_exhaustive needs a connected graph");
    return complete_cover(g, {}, meter);
}

inline SolveOutcome solve_exhaustive(const Graph& g, Budget budget = {}) {
    BudgetMeter meter(budget);
    return solve_exhaustive(g, meter);
}

}  // namespace oppdc
