#pragma once

// Ear decompositions and ordered cycle partitions.
//
// Both searches that carry constraints are budgeted backtracking with a
// deterministic order. A "none" returned with complete == true is a
// certificate that no such decomposition exists; with complete == false it
// only means the budget ran out first.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "oppdc/budget.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/graph/structure.hpp"

namespace oppdc {

struct EarDecomposition {
    std::vector<VertexId> base_cycle;
    /// Each ear runs between two distinct, already built vertices; the
    /// vertices strictly inside are new when the ear is added.
    std::vector<std::vector<VertexId>> ears;
};

struct EarSearchResult {
    std::optional<EarDecomposition> decomposition;
    bool complete = true;
    std::uint64_t nodes = 0;
};

struct CycleDecomposition {
    std::vector<std::vector<VertexId>> cycles;
};

struct CycleSearchResult {
    std::optional<CycleDecomposition> decomposition;
    bool complete = true;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Checks that `cycle` is a simple cycle of g (length >= 3) and appends its edges.
inline bool collect_cycle_edges(const Graph& g, const std::vector<VertexId>& cycle,
                                std::vector<Edge>& out) {
    if (cycle.size() < 3) return false;
    std::vector<VertexId> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(a, b)) return false;
        out.emplace_back(a, b);
    }
    return true;
}

/// Simple cycles of g of length >= min_length in canonical form (smallest
/// vertex first, second vertex smaller than last), longest first, then
/// lexicographic. Optionally only induced (chordless) cycles.
inline std::vector<std::vector<VertexId>> simple_cycles(const Graph& g, std::size_t min_length,
                                                        bool chordless, BudgetMeter& meter) {
    std::vector<std::vector<VertexId>> cycles;
    std::vector<VertexId> path;
    std::vector<char> on_path(g.order(), 0);

    auto is_chordless = [&](const std::vector<VertexId>& c) {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 2; j < c.size(); ++j) {
                if (i == 0 && j + 1 == c.size()) continue;
                if (g.has_edge(c[i], c[j])) return false;
            }
        return true;
    };

    std::function<void(VertexId)> extend = [&](VertexId start) {
        if (!meter.tick()) return;
        VertexId head = path.back();
        for (VertexId w : g.neighbors(head)) {
            if (w < start) continue;
            if (w == start && path.size() >= std::max<std::size_t>(3, min_length) &&
                path[1] < path.back()) {
                if (!chordless || is_chordless(path)) cycles.push_back(path);
                continue;
            }
            if (w == start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            extend(start);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (VertexId s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(s);
        on_path[s] = 0;
    }
    std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return cycles;
}

inline EarDecomposition greedy_ear_decomposition(const Graph& g) {
    const std::size_t n = g.order();
    // Base cycle: first back edge found by BFS tree + tree path.
    std::vector<std::optional<VertexId>> parent(n);
    std::vector<std::size_t> depth(n, 0);
    std::vector<char> seen(n, 0);
    std::deque<VertexId> queue{0};
    seen[0] = 1;
    std::optional<Edge> closing;
    while (!queue.empty() && !closing) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            } else if (parent[v] != w) {
                closing = Edge(v, w);
                break;
            }
        }
    }
    if (!closing) throw DomainError("graph has no cycle");
    std::vector<VertexId> left{closing->u}, right{closing->v};
    while (left.back() != right.back()) {
        if (depth[left.back()] >= depth[right.back()])
            left.push_back(*parent[left.back()]);
        else
            right.push_back(*parent[right.back()]);
    }
    right.pop_back();
    EarDecomposition d;
    d.base_cycle = left;
    d.base_cycle.insert(d.base_cycle.end(), right.rbegin(), right.rend());

    std::vector<char> built(n, 0);
    std::vector<Edge> used;
    detail::collect_cycle_edges(g, d.base_cycle, used);
    std::sort(used.begin(), used.end());
    for (VertexId v : d.base_cycle) built[v] = 1;

    auto is_used = [&](Edge e) { return std::binary_search(used.begin(), used.end(), e); };
    while (used.size() < g.size()) {
        std::vector<VertexId> ear;
        for (VertexId a = 0; a < n && ear.empty(); ++a) {
            if (!built[a]) continue;
            for (VertexId b : g.neighbors(a)) {
                if (is_used(Edge(a, b))) continue;
                if (built[b]) {
                    ear = {a, b};
                    break;
                }
                // BFS from b through unbuilt vertices, avoiding a, to any built vertex.
                std::vector<std::optional<VertexId>> from(n);
                std::vector<char> visited(n, 0);
                std::deque<VertexId> q{b};
                visited[b] = visited[a] = 1;
                std::optional<VertexId> hit;
                while (!q.empty() && !hit) {
                    VertexId x = q.front();
                    q.pop_front();
                    for (VertexId y : g.neighbors(x)) {
                        if (visited[y]) continue;
                        visited[y] = 1;
                        from[y] = x;
                        if (built[y]) {
                            hit = y;
                            break;
                        }
                        q.push_back(y);
                    }
                }
                if (!hit) throw DomainError("graph is not 2-connected");
                std::vector<VertexId> tail{*hit};
                while (tail.back() != b) tail.push_back(*from[tail.back()]);
                ear = {a};
                ear.insert(ear.end(), tail.rbegin(), tail.rend());
                break;
            }
        }
        if (ear.empty()) throw DomainError("graph is not 2-connected");
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) used.emplace_back(ear[i], ear[i + 1]);
        std::sort(used.begin(), used.end());
        for (VertexId v : ear) built[v] = 1;
        d.ears.push_back(std::move(ear));
    }
    return d;
}

}  // namespace detail

/// Checks the EarDecomposition invariants against g. With require_long_ears,
/// also checks base length >= 4 and every ear length >= 2.
inline bool is_valid_ear_decomposition(const Graph& g, const EarDecomposition& d,
                                       bool require_long_ears) {
    std::vector<Edge> edges;
    if (!detail::collect_cycle_edges(g, d.base_cycle, edges)) return false;
    if (require_long_ears && d.base_cycle.size() < 4) return false;
    std::vector<char> built(g.order(), 0);
    for (VertexId v : d.base_cycle) built[v] = 1;
    for (const auto& ear : d.ears) {
        if (ear.size() < 2) return false;
        if (require_long_ears && ear.size() < 3) return false;
        if (ear.front() == ear.back() || !built[ear.front()] || !built[ear.back()]) return false;
        for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
            if (built[ear[i]]) return false;
            built[ear[i]] = 1;
        }
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
            if (!g.has_edge(ear[i], ear[i + 1])) return false;
            edges.emplace_back(ear[i], ear[i + 1]);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges == g.edges();
}

/// Ear decomposition of a 2-connected graph.
///
/// Without require_long_ears this is the classical greedy construction and
/// always succeeds. With it, the base cycle must have length >= 4 and every
/// ear length >= 2; the search state is the set of built vertices (every
/// edge inside it must already be used, since long ears never add chords),
/// so failed states are memoized.
inline EarSearchResult find_ear_decomposition(const Graph& g, bool require_long_ears,
                                              Budget budget = {}) {
    if (!is_biconnected(g)) throw DomainError("ear decomposition needs a 2-connected graph");
    EarSearchResult result;
    if (!require_long_ears) {
        result.decomposition = detail::greedy_ear_decomposition(g);
        return result;
    }
    if (g.order() > 64) throw DomainError("long-ear search supports at most 64 vertices");

    BudgetMeter meter(budget);
    const std::size_t n = g.order();
    std::vector<std::uint64_t> nbr(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.neighbors(v)) nbr[v] |= std::uint64_t{1} << w;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::unordered_set<std::uint64_t> failed;
    std::vector<std::vector<VertexId>> ears;

    // An ear a - i1 ... ik - c is admissible when its inner vertices touch the
    // built set only through its two end edges and only consecutive inner
    // vertices are adjacent.
    std::function<bool(std::uint64_t)> solve = [&](std::uint64_t built) -> bool {
        if (built == all) return true;
        if (failed.count(built)) return false;
        if (!meter.tick()) return false;

        std::vector<VertexId> path;
        std::function<bool(std::uint64_t)> grow = [&](std::uint64_t inner) -> bool {
            if (meter.exhausted()) return false;
            const VertexId a = path.front();
            const VertexId head = path.back();
            // Close at a built neighbour c != a.
            if (path.size() >= 2) {
                const std::uint64_t ends = nbr[head] & built & ~(std::uint64_t{1} << a);
                for (VertexId c = 0; c < n; ++c) {
                    if (!((ends >> c) & 1)) continue;
                    // head may touch the built set only at c (and a if it is the first inner vertex)
                    std::uint64_t allowed = std::uint64_t{1} << c;
                    if (path.size() == 2) allowed |= std::uint64_t{1} << a;
                    if ((nbr[head] & built) & ~allowed) continue;
                    path.push_back(c);
                    ears.push_back(path);
                    if (solve(built | inner)) return true;
                    ears.pop_back();
                    path.pop_back();
                    if (meter.exhausted()) return false;
                }
            }
            for (VertexId w : g.neighbors(head)) {
                const std::uint64_t bit = std::uint64_t{1} << w;
                if ((built | inner) & bit) continue;
                // w must not touch earlier inner vertices except head.
                if (nbr[w] & inner & ~(std::uint64_t{1} << head)) continue;
                // an inner vertex that is not the last one may touch built only via a (first inner)
                if (path.size() >= 2) {
                    std::uint64_t allowed = path.size() == 2 ? (std::uint64_t{1} << a) : 0;
                    if ((nbr[head] & built) & ~allowed) continue;
                }
                path.push_back(w);
                bool ok = grow(inner | bit);
                path.pop_back();
                if (ok) return true;
                if (meter.exhausted()) return false;
            }
            return false;
        };

        for (VertexId a = 0; a < n; ++a) {
            if (!((built >> a) & 1)) continue;
            for (VertexId b : g.neighbors(a)) {
                if ((built >> b) & 1) continue;
                path = {a, b};
                if (grow(std::uint64_t{1} << b)) return true;
                if (meter.exhausted()) return false;
            }
        }
        failed.insert(built);
        return false;
    };

    for (const auto& cycle : detail::simple_cycles(g, 4, true, meter)) {
        std::uint64_t built = 0;
        for (VertexId v : cycle) built |= std::uint64_t{1} << v;
        ears.clear();
        if (solve(built)) {
            EarDecomposition d{cycle, ears};
            result.decomposition = std::move(d);
            break;
        }
        if (meter.exhausted()) break;
    }
    result.complete = !meter.exhausted();
    result.nodes = meter.nodes();
    return result;
}

/// Checks the CycleDecomposition invariants: edge partition of g, C_1 of
/// length >= 4, and each later cycle bringing at least two new vertices.
/// With require_attached, each later cycle must also meet the earlier ones.
inline bool is_valid_cycle_decomposition(const Graph& g, const CycleDecomposition& d,
                                         bool require_attached = false) {
    if (d.cycles.empty()) return false;
    if (d.cycles.front().size() < 4) return false;
    std::vector<Edge> edges;
    std::vector<char> seen(g.order(), 0);
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
        const auto& c = d.cycles[i];
        if (!detail::collect_cycle_edges(g, c, edges)) return false;
        std::size_t fresh = 0, shared = 0;
        for (VertexId v : c) (seen[v] ? shared : fresh) += 1;
        if (i > 0 && fresh < 2) return false;
        if (i > 0 && require_attached && shared == 0) return false;
        for (VertexId v : c) seen[v] = 1;
    }
    std::sort(edges.begin(), edges.end());
    return edges == g.edges();
}

/// Ordered partition of E(g) into cycles with C_1 of length >= 4 and every
/// later cycle adding at least two new vertices while meeting the earlier
/// ones (so each prefix stays connected). Only graphs with all degrees even
/// can succeed. Failed used-edge states are memoized when |E| <= 64.
inline CycleSearchResult find_cycle_partition(const Graph& g, Budget budget = {}) {
    CycleSearchResult result;
    if (g.size() == 0) return result;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2) return result;
    BudgetMeter meter(budget);

    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    auto edge_index = [&](VertexId a, VertexId b) {
        return static_cast<std::size_t>(
            std::lower_bound(edges.begin(), edges.end(), Edge(a, b)) - edges.begin());
    };
    std::vector<char> used(m, 0), covered(g.order(), 0);
    std::size_t used_count = 0;
    std::unordered_set<std::uint64_t> failed;
    auto state_key = [&]() {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (used[i]) key |= std::uint64_t{1} << i;
        return key;
    };

    std::vector<std::vector<VertexId>> chosen;

    auto apply = [&](const std::vector<VertexId>& c, char value) {
        for (std::size_t i = 0; i < c.size(); ++i) used[edge_index(c[i], c[(i + 1) % c.size()])] = value;
        used_count = value ? used_count + c.size() : used_count - c.size();
    };

    std::function<bool()> solve = [&]() -> bool {
        if (used_count == m) return true;
        const bool memo = m <= 64;
        std::uint64_t key = 0;
        if (memo) {
            key = state_key();
            if (failed.count(key)) return false;
        }
        std::vector<VertexId> path;
        std::vector<char> on_path(g.order(), 0);

        // Enumerates cycles through unused edges whose smallest vertex is
        // `start` and tries each admissible one as the next cycle.
        std::function<bool(VertexId)> extend = [&](VertexId start) -> bool {
            if (!meter.tick()) return false;
            const VertexId head = path.back();
            for (VertexId w : g.neighbors(head)) {
                if (w < start || used[edge_index(head, w)]) continue;
                if (w == start) {
                    if (path.size() < 3 || path[1] > path.back()) continue;
                    std::size_t fresh = 0, shared = 0;
                    for (VertexId v : path) (covered[v] ? shared : fresh) += 1;
                    const bool first = chosen.empty();
                    if (first ? path.size() < 4 : (fresh < 2 || shared == 0)) continue;
                    const std::vector<VertexId> cycle = path;
                    std::vector<VertexId> newly;
                    for (VertexId v : cycle)
                        if (!covered[v]) newly.push_back(v);
                    apply(cycle, 1);
                    for (VertexId v : newly) covered[v] = 1;
                    chosen.push_back(cycle);
                    if (solve()) return true;
                    chosen.pop_back();
                    for (VertexId v : newly) covered[v] = 0;
                    apply(cycle, 0);
                    if (meter.exhausted()) return false;
                    continue;
                }
                if (on_path[w]) continue;
                on_path[w] = 1;
                path.push_back(w);
                const bool ok = extend(start);
                path.pop_back();
                on_path[w] = 0;
                if (ok) return true;
                if (meter.exhausted()) return false;
            }
            return false;
        };

        for (VertexId s = 0; s < g.order(); ++s) {
            path.assign(1, s);
            on_path[s] = 1;
            if (extend(s)) return true;
            on_path[s] = 0;
            if (meter.exhausted()) return false;
        }
        if (memo) failed.insert(key);
        return false;
    };

    if (solve()) result.decomposition = CycleDecomposition{chosen};
    result.complete = !meter.exhausted();
    result.nodes = meter.nodes();
    return result;
}

}  // namespace oppdc
