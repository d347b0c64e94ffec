#include "modbound/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace modbound {

std::int64_t delta9_window(int delta) {
    if (delta <= 1) return 1;
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 2;
    __int128 x = 1;
    for (int i = 0; i < 9; ++i) {
        x *= delta;
        if (x > cap) return cap;
    }
    return static_cast<std::int64_t>(x);
}

namespace {

// Visited-stamp set over [n]; reset is O(1) by bumping the epoch.
struct StampSet {
    std::vector<int> stamp;
    int epoch = 0;
    explicit StampSet(int n) : stamp(static_cast<std::size_t>(n), -1) {}
    void clear() { ++epoch; }
    bool insert(int v) {
        if (stamp[static_cast<std::size_t>(v)] == epoch) return false;
        stamp[static_cast<std::size_t>(v)] = epoch;
        return true;
    }
    bool contains(int v) const { return stamp[static_cast<std::size_t>(v)] == epoch; }
};

// F_v as set composition: H(v) ∪ H(mates(H(v))) ∪ H(mates(H(mates(H(v))))).
// Walk endpoints only, deduplicated stage by stage.
struct AlternatingReach {
    const Graph& h;
    const std::vector<int>& mate;
    StampSet f, level_b, level_d;
    std::vector<int> f_list, b_list, d_list;

    AlternatingReach(const Graph& h_graph, const std::vector<int>& mates)
        : h(h_graph), mate(mates), f(h_graph.n()), level_b(h_graph.n()), level_d(h_graph.n()) {}

    void compute(int v) {
        f.clear();
        level_b.clear();
        level_d.clear();
        f_list.clear();
        b_list.clear();
        d_list.clear();

        for (int a : h.neighbors(v)) add_endpoint(v, a);
        for (int a : f_list)
            if (mate[static_cast<std::size_t>(a)] >= 0) {
                const int b = mate[static_cast<std::size_t>(a)];
                if (b != v && level_b.insert(b)) b_list.push_back(b);
            }
        std::size_t f_before = f_list.size();
        for (int b : b_list)
            for (int c : h.neighbors(b)) add_endpoint(v, c);
        for (std::size_t i = f_before; i < f_list.size(); ++i) {
            const int c = f_list[i];
            if (mate[static_cast<std::size_t>(c)] >= 0) {
                const int d = mate[static_cast<std::size_t>(c)];
                if (d != v && level_d.insert(d)) d_list.push_back(d);
            }
        }
        for (int d : d_list)
            for (int e : h.neighbors(d)) add_endpoint(v, e);
    }

    bool in_f(int w) const { return f.contains(w); }

private:
    void add_endpoint(int v, int x) {
        if (x != v && f.insert(x)) f_list.push_back(x);
    }
};

std::int64_t saturating_cubic_sum(std::int64_t d) {
    // d + d^2 + d^3 without overflow
    const __int128 s = static_cast<__int128>(d) + static_cast<__int128>(d) * d +
                       static_cast<__int128>(d) * d * d;
    const std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 2;
    return s > cap ? cap : static_cast<std::int64_t>(s);
}

BandwidthMatching finish(int n, std::vector<int> mate, std::vector<std::pair<int, int>> pairs,
                         std::int64_t bandwidth, std::int64_t budget, MatchingMode mode,
                         ConflictScope scope) {
    BandwidthMatching m;
    m.n = n;
    m.pairs = std::move(pairs);
    m.unmatched = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (mate[static_cast<std::size_t>(v)] < 0) m.unmatched.insert(v);
    m.mate = std::move(mate);
    m.bandwidth_observed = bandwidth;
    m.delta9_budget = budget;
    m.mode = mode;
    m.scope = scope;
    return m;
}

BandwidthMatching greedy_full(const Graph& g, const MatchingOptions& opts, std::int64_t budget) {
    const int n = g.n();
    const Graph h = power_graph_3(g);
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> pairs;
    std::int64_t bandwidth = 0;
    AlternatingReach reach(h, mate);

    if (opts.trace) {
        opts.trace->delta_h = h.max_degree();
        opts.trace->delta9_budget = budget;
        opts.trace->steps.clear();
    }

    // Candidate existence is guaranteed (and enforced) up to n - Delta^9;
    // past that line the loop keeps matching best-effort inside the window,
    // which preserves all three matching guarantees and keeps the remainder
    // far smaller than the window.
    const bool strict = opts.mode == MatchingMode::strict;
    const int guaranteed_end = strict ? static_cast<int>(std::max<std::int64_t>(0, n - budget)) : 0;
    std::int64_t matched_above = 0;  // matched vertices with index > v

    for (int v = 0; v < n; ++v) {
        if (mate[static_cast<std::size_t>(v)] >= 0) {
            --matched_above;
            continue;
        }
        reach.compute(v);

        if (opts.trace) {
            std::int64_t f_plus = 0, f_plus_matched = 0;
            for (int x : reach.f_list)
                if (x > v) {
                    ++f_plus;
                    if (mate[static_cast<std::size_t>(x)] >= 0) ++f_plus_matched;
                }
            opts.trace->steps.push_back({v, static_cast<std::int64_t>(reach.f_list.size()),
                                         f_plus + (matched_above - f_plus_matched)});
        }

        const std::int64_t hi = std::min<std::int64_t>(n - 1, static_cast<std::int64_t>(v) + budget);
        int chosen = -1;
        for (std::int64_t w = v + 1; w <= hi; ++w) {
            const int wi = static_cast<int>(w);
            if (mate[static_cast<std::size_t>(wi)] < 0 && !reach.in_f(wi)) {
                chosen = wi;
                break;
            }
        }
        if (chosen < 0) {
            if (strict && v < guaranteed_end)
                throw std::runtime_error("greedy_matching: window exhausted in strict mode");
            continue;
        }
        mate[static_cast<std::size_t>(v)] = chosen;
        mate[static_cast<std::size_t>(chosen)] = v;
        pairs.emplace_back(v, chosen);
        bandwidth = std::max<std::int64_t>(bandwidth, chosen - v);
        ++matched_above;
    }
    return finish(n, std::move(mate), std::move(pairs), bandwidth, budget, opts.mode, ConflictScope::full_alternating);
}

BandwidthMatching greedy_distance_only(const Graph& g, std::int64_t budget) {
    const int n = g.n();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> pairs;
    std::int64_t bandwidth = 0;
    StampSet ball2(n);
    std::vector<int> frontier, next;

    for (int v = 0; v < n; ++v) {
        if (mate[static_cast<std::size_t>(v)] >= 0) continue;
        ball2.clear();
        ball2.insert(v);
        frontier.assign(1, v);
        for (int depth = 0; depth < 2; ++depth) {
            next.clear();
            for (int x : frontier)
                for (int y : g.neighbors(x))
                    if (ball2.insert(y)) next.push_back(y);
            frontier.swap(next);
        }
        const std::int64_t hi = std::min<std::int64_t>(n - 1, static_cast<std::int64_t>(v) + budget);
        int chosen = -1;
        for (std::int64_t w = v + 1; w <= hi; ++w) {
            const int wi = static_cast<int>(w);
            if (mate[static_cast<std::size_t>(wi)] >= 0 || ball2.contains(wi)) continue;
            bool near = false;
            for (int y : g.neighbors(wi))
                if (ball2.contains(y)) {
                    near = true;
                    break;
                }
            if (!near) {
                chosen = wi;
                break;
            }
        }
        if (chosen < 0) continue;
        mate[static_cast<std::size_t>(v)] = chosen;
        mate[static_cast<std::size_t>(chosen)] = v;
        pairs.emplace_back(v, chosen);
        bandwidth = std::max<std::int64_t>(bandwidth, chosen - v);
    }
    return finish(n, std::move(mate), std::move(pairs), bandwidth, budget, MatchingMode::permissive,
                  ConflictScope::distance_only);
}

}  // namespace

BandwidthMatching greedy_matching(const Graph& g, const MatchingOptions& opts) {
    if (!g.is_simple()) throw std::invalid_argument("greedy_matching requires a simple graph");
    const int n = g.n();
    const int delta = g.max_degree();
    const std::int64_t budget = delta9_window(delta);

    if (opts.mode == MatchingMode::strict) {
        if (delta == 1)
            throw std::invalid_argument("greedy_matching strict mode requires max degree > 1 or an edgeless graph");
        if ((delta >= 2 && n <= budget + 1) || n <= 1) {
            BandwidthMatching empty = finish(n, std::vector<int>(static_cast<std::size_t>(n), -1), {}, 0,
                                             budget, opts.mode, ConflictScope::full_alternating);
            return empty;  // the guarantee is void at this size
        }
        return greedy_full(g, opts, budget);
    }

    const ConflictScope scope = opts.scope.value_or(delta <= 16 ? ConflictScope::full_alternating
                                                                : ConflictScope::distance_only);
    if (scope == ConflictScope::full_alternating) return greedy_full(g, opts, budget);
    return greedy_distance_only(g, budget);
}

namespace {

// Shortest G-path (length <= 3) between two distinct vertices, as the vertex
// sequence from `from` to `to`. Used only to reconstruct loop witnesses.
std::vector<int> short_path(const Graph& g, int from, int to) {
    if (g.has_edge(from, to)) return {from, to};
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -2);
    parent[static_cast<std::size_t>(from)] = -1;
    std::vector<int> frontier{from}, next;
    for (int depth = 0; depth < 3; ++depth) {
        next.clear();
        for (int x : frontier)
            for (int y : g.neighbors(x))
                if (parent[static_cast<std::size_t>(y)] == -2) {
                    parent[static_cast<std::size_t>(y)] = x;
                    if (y == to) {
                        std::vector<int> path{to};
                        for (int c = x; c != -1; c = parent[static_cast<std::size_t>(c)]) path.push_back(c);
                        std::reverse(path.begin(), path.end());
                        return path;
                    }
                    next.push_back(y);
                }
        frontier.swap(next);
    }
    return {};
}

void append_tail(std::vector<int>& walk, const std::vector<int>& path) {
    walk.insert(walk.end(), path.begin() + 1, path.end());
}

// Lazily cached distance-<=3 reach lists, derived directly from G by bounded
// BFS (independent of power_graph_3).
struct ReachCache {
    const Graph& g;
    std::vector<std::vector<int>> lists;
    std::vector<char> ready;
    StampSet seen;

    explicit ReachCache(const Graph& graph)
        : g(graph), lists(static_cast<std::size_t>(graph.n())), ready(static_cast<std::size_t>(graph.n()), 0),
          seen(graph.n()) {}

    const std::vector<int>& reach3(int v) {
        if (ready[static_cast<std::size_t>(v)]) return lists[static_cast<std::size_t>(v)];
        seen.clear();
        seen.insert(v);
        std::vector<int> out, frontier{v}, next;
        for (int depth = 0; depth < 3; ++depth) {
            next.clear();
            for (int x : frontier)
                for (int y : g.neighbors(x))
                    if (seen.insert(y)) {
                        out.push_back(y);
                        next.push_back(y);
                    }
            frontier.swap(next);
        }
        lists[static_cast<std::size_t>(v)] = std::move(out);
        ready[static_cast<std::size_t>(v)] = 1;
        return lists[static_cast<std::size_t>(v)];
    }
};

}  // namespace

ShortLoopReport verify_no_short_loops(const Graph& g, const BandwidthMatching& m) {
    if (!g.is_simple()) throw std::invalid_argument("verify_no_short_loops requires a simple graph");
    ShortLoopReport rep;
    const std::vector<int>& mate = m.mate;

    for (const auto& [u, v] : m.pairs) {
        if (g.has_edge(u, v)) {
            rep.disjoint_from_graph = false;
            rep.walk_search_ok = false;
            rep.alternating_cycles_ok = false;
            rep.witness_kind = "matching edge coincides with a graph edge";
            rep.witness = {u, v, u};
            return rep;
        }
    }

    // Route 1: direct closed-walk search over G. Anchor at each matching edge (u,v),
    // leave u along the matching, come back to u through 1..3 G-runs with
    // the remaining matching edges distinct.
    {
        ReachCache cache(g);
        StampSet near_u(g.n());
        for (const auto& [u, v] : m.pairs) {
            near_u.clear();
            for (int x : cache.reach3(u)) near_u.insert(x);

            if (near_u.contains(v)) {
                rep.walk_search_ok = false;
                rep.witness_kind = "short loop, one matching edge";
                rep.witness = {u, v};
                append_tail(rep.witness, short_path(g, v, u));
            }
            if (!rep.walk_search_ok) break;

            for (int x : cache.reach3(v)) {
                if (x == u || mate[static_cast<std::size_t>(x)] < 0) continue;
                const int xm = mate[static_cast<std::size_t>(x)];
                if (near_u.contains(xm)) {
                    rep.walk_search_ok = false;
                    rep.witness_kind = "short loop, two matching edges";
                    rep.witness = {u, v};
                    append_tail(rep.witness, short_path(g, v, x));
                    rep.witness.push_back(xm);
                    append_tail(rep.witness, short_path(g, xm, u));
                    break;
                }
                for (int z : cache.reach3(xm)) {
                    if (z == u || z == v || z == x || z == xm) continue;
                    if (mate[static_cast<std::size_t>(z)] < 0) continue;
                    const int zm = mate[static_cast<std::size_t>(z)];
                    if (near_u.contains(zm)) {
                        rep.walk_search_ok = false;
                        rep.witness_kind = "short loop, three matching edges";
                        rep.witness = {u, v};
                        append_tail(rep.witness, short_path(g, v, x));
                        rep.witness.push_back(xm);
                        append_tail(rep.witness, short_path(g, xm, z));
                        rep.witness.push_back(zm);
                        append_tail(rep.witness, short_path(g, zm, u));
                        break;
                    }
                }
                if (!rep.walk_search_ok) break;
            }
            if (!rep.walk_search_ok) break;
        }
    }

    // Route 2: sufficient condition on H = G^3: no alternating H/M cycle
    // of length 2, 4 or 6.
    {
        const Graph h = power_graph_3(g);
        for (const auto& [u, v] : m.pairs) {
            if (h.has_edge(u, v)) {
                rep.alternating_cycles_ok = false;
                if (rep.witness_kind.empty()) {
                    rep.witness_kind = "alternating 2-cycle";
                    rep.witness = {u, v};
                }
                break;
            }
            bool found = false;
            for (int x : h.neighbors(v)) {
                if (x == u || mate[static_cast<std::size_t>(x)] < 0) continue;
                const int xm = mate[static_cast<std::size_t>(x)];
                if (h.has_edge(xm, u)) {
                    rep.alternating_cycles_ok = false;
                    if (rep.witness_kind.empty()) {
                        rep.witness_kind = "alternating 4-cycle";
                        rep.witness = {u, v, x, xm};
                    }
                    found = true;
                    break;
                }
                for (int z : h.neighbors(xm)) {
                    if (z == u || z == v || z == x || z == xm) continue;
                    if (mate[static_cast<std::size_t>(z)] < 0) continue;
                    if (h.has_edge(mate[static_cast<std::size_t>(z)], u)) {
                        rep.alternating_cycles_ok = false;
                        if (rep.witness_kind.empty()) {
                            rep.witness_kind = "alternating 6-cycle";
                            rep.witness = {u, v, x, xm, z, mate[static_cast<std::size_t>(z)]};
                        }
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    return rep;
}

ClaimCheckReport claim_window_check(const Graph& g, const MatchingTrace& trace) {
    ClaimCheckReport rep;
    const std::int64_t budget = delta9_window(g.max_degree());
    rep.window_budget = budget - 1;
    rep.sharper_budget = saturating_cubic_sum(trace.delta_h);
    rep.steps_checked = trace.steps.size();
    for (const auto& step : trace.steps) {
        rep.max_f_plus_union_m_plus = std::max(rep.max_f_plus_union_m_plus, step.f_plus_union_m_plus);
        rep.max_f_size = std::max(rep.max_f_size, step.f_size);
        if (step.f_plus_union_m_plus > rep.window_budget) rep.window_ok = false;
        if (step.f_size > rep.sharper_budget) rep.sharper_ok = false;
    }
    return rep;
}

}  // namespace modbound
