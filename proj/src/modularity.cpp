#include "modbound/modularity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modbound {

Partition Partition::single_part(int n) {
    if (n <= 0) throw std::invalid_argument("partition of empty vertex set");
    Partition p;
    p.part_of.assign(static_cast<std::size_t>(n), 0);
    p.k = 1;
    return p;
}

Partition Partition::all_singletons(int n) {
    if (n <= 0) throw std::invalid_argument("partition of empty vertex set");
    Partition p;
    p.part_of.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p.part_of[static_cast<std::size_t>(v)] = v;
    p.k = n;
    return p;
}

Partition Partition::two_part(const VertexSet& a) {
    const int n = a.universe();
    if (a.empty() || a.size() == n) throw std::invalid_argument("two_part: set must be proper and nonempty");
    Partition p;
    p.part_of.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p.part_of[static_cast<std::size_t>(v)] = a.contains(v) ? 0 : 1;
    p.k = 2;
    return p;
}

Partition Partition::three_part(const VertexSet& a, const VertexSet& b, const VertexSet& r) {
    const int n = a.universe();
    if (a.empty() || b.empty()) throw std::invalid_argument("three_part: a and b must be nonempty");
    if (!a.disjoint_with(b) || !a.disjoint_with(r) || !b.disjoint_with(r))
        throw std::invalid_argument("three_part: sets overlap");
    if (a.size() + b.size() + r.size() != n) throw std::invalid_argument("three_part: sets do not cover [n]");
    Partition p;
    p.part_of.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        p.part_of[static_cast<std::size_t>(v)] = a.contains(v) ? 0 : (b.contains(v) ? 1 : 2);
    p.k = r.empty() ? 2 : 3;
    return p;
}

void Partition::validate() const {
    if (part_of.empty() || k <= 0) throw std::invalid_argument("empty partition");
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(k), 0);
    for (int pid : part_of) {
        if (pid < 0 || pid >= k) throw std::invalid_argument("part id out of range");
        ++sizes[static_cast<std::size_t>(pid)];
    }
    for (std::int64_t s : sizes)
        if (s == 0) throw std::invalid_argument("empty part in partition");
}

std::vector<PartAggregates> part_aggregates(const Graph& g, const Partition& p) {
    std::vector<PartAggregates> agg(static_cast<std::size_t>(p.k));
    for (int v = 0; v < g.n(); ++v) {
        auto& a = agg[static_cast<std::size_t>(p.part_of[static_cast<std::size_t>(v)])];
        ++a.size;
        a.volume += g.degree(v);
    }
    for (const auto& [u, v] : g.edges()) {
        const int pu = p.part_of[static_cast<std::size_t>(u)];
        if (pu == p.part_of[static_cast<std::size_t>(v)]) ++agg[static_cast<std::size_t>(pu)].internal_edges;
    }
    return agg;
}

ScoreBreakdown score(const Graph& g, const Partition& p) {
    if (g.m() == 0) throw std::invalid_argument("modularity undefined for edgeless graph");
    if (!g.is_simple()) throw std::invalid_argument("modularity requires a simple graph; simplify() first");
    if (p.n() != g.n()) throw std::invalid_argument("partition size mismatch");
    p.validate();

    std::int64_t internal_sum = 0;
    std::int64_t volsq_sum = 0;
    for (const auto& a : part_aggregates(g, p)) {
        internal_sum += a.internal_edges;
        volsq_sum += a.volume * a.volume;
    }
    const double m = static_cast<double>(g.m());
    ScoreBreakdown s;
    s.coverage = static_cast<double>(internal_sum) / m;
    s.degree_tax = static_cast<double>(volsq_sum) / (4.0 * m * m);
    s.q = s.coverage - s.degree_tax;
    return s;
}

double two_part_score(const Graph& g, const VertexSet& a) {
    if (g.m() == 0) throw std::invalid_argument("modularity undefined for edgeless graph");
    if (a.empty() || a.size() == g.n()) throw std::invalid_argument("two_part_score: set must be proper and nonempty");
    const std::int64_t vol_a = g.volume(a);
    const std::int64_t vol_b = g.total_volume() - vol_a;
    const std::int64_t e_ab = boundary_edges(g, a);
    const double m = static_cast<double>(g.m());
    const double imbalance = static_cast<double>(vol_a - vol_b);
    return 0.5 - static_cast<double>(e_ab) / m - imbalance * imbalance / (8.0 * m * m);
}

NearlyBisectionBound nearly_bisection_lower_bound(const Graph& g, const VertexSet& a,
                                                  const VertexSet& b, const VertexSet& r) {
    const std::int64_t vol_g = g.total_volume();
    const std::int64_t vol_r = g.volume(r);
    if (3 * vol_r > vol_g)
        throw std::invalid_argument("nearly_bisection_lower_bound: Vol(R) > Vol(G)/3 violates the hypothesis");
    const Partition p = Partition::three_part(a, b, r);

    const std::int64_t cross = cut(g, a, b) + boundary_edges(g, r);
    const double vol = static_cast<double>(vol_g);
    const double imbalance = static_cast<double>(g.volume(a) - g.volume(b));

    NearlyBisectionBound out;
    out.lower_bound = 0.5 - static_cast<double>(cross) / static_cast<double>(g.m()) -
                      imbalance * imbalance / (2.0 * vol * vol);
    out.actual_q = score(g, p).q;
    return out;
}

namespace {

// Restricted-growth-string enumeration over all set partitions with exact
// integer aggregates. The objective 4m*sum_internal - sum(vol^2) is compared
// as an integer, so ties and the zero-modularity cases are exact.
struct OracleSearch {
    const Graph& g;
    std::vector<std::vector<int>> lower_nbrs;  // neighbors with smaller index
    std::vector<int> assign;
    std::vector<std::int64_t> part_vol;
    std::int64_t internal_sum = 0;
    std::int64_t volsq_sum = 0;
    std::int64_t best_num = 0;  // objective of the single-part partition is 0
    std::vector<int> best_assign;

    explicit OracleSearch(const Graph& graph) : g(graph) {
        const int n = g.n();
        lower_nbrs.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v))
                if (u < v) lower_nbrs[static_cast<std::size_t>(v)].push_back(u);
        assign.assign(static_cast<std::size_t>(n), -1);
        part_vol.assign(static_cast<std::size_t>(n), 0);
        best_assign.assign(static_cast<std::size_t>(n), 0);
    }

    void run() { descend(0, 0); }

    void descend(int v, int used_parts) {
        if (v == g.n()) {
            const std::int64_t num = 4 * g.m() * internal_sum - volsq_sum;
            if (num > best_num) {
                best_num = num;
                best_assign = assign;
            }
            return;
        }
        const std::int64_t d = g.degree(v);
        const int limit = std::min(used_parts, v);  // new part allowed at index used_parts
        for (int j = 0; j <= limit; ++j) {
            std::int64_t to_j = 0;
            for (int u : lower_nbrs[static_cast<std::size_t>(v)])
                if (assign[static_cast<std::size_t>(u)] == j) ++to_j;
            assign[static_cast<std::size_t>(v)] = j;
            internal_sum += to_j;
            volsq_sum += 2 * part_vol[static_cast<std::size_t>(j)] * d + d * d;
            part_vol[static_cast<std::size_t>(j)] += d;
            descend(v + 1, std::max(used_parts, j + 1));
            part_vol[static_cast<std::size_t>(j)] -= d;
            volsq_sum -= 2 * part_vol[static_cast<std::size_t>(j)] * d + d * d;
            internal_sum -= to_j;
            assign[static_cast<std::size_t>(v)] = -1;
        }
    }
};

}  // namespace

OracleResult brute_force_qstar(const Graph& g) {
    if (g.n() > 12) throw std::invalid_argument("brute_force_qstar limited to n <= 12");
    if (g.m() == 0) throw std::invalid_argument("modularity undefined for edgeless graph");
    if (!g.is_simple()) throw std::invalid_argument("brute_force_qstar requires a simple graph");

    OracleSearch search(g);
    search.run();

    OracleResult res;
    const double m = static_cast<double>(g.m());
    res.qstar = static_cast<double>(search.best_num) / (4.0 * m * m);
    res.best.part_of = search.best_assign;
    res.best.k = search.best_assign.empty() ? 0 : *std::max_element(search.best_assign.begin(), search.best_assign.end()) + 1;
    if (res.best.k == 0) res.best = Partition::single_part(g.n());
    return res;
}

RobustnessGap robustness_gap(const Graph& g, const Graph& h) {
    if (g.n() != h.n()) throw std::invalid_argument("robustness_gap: vertex counts differ");
    for (const auto& [u, v] : h.edges())
        if (!g.has_edge(u, v)) throw std::invalid_argument("robustness_gap: h is not a subgraph of g");
    RobustnessGap out;
    out.edits = g.m() - h.m();
    out.gap = std::abs(brute_force_qstar(g).qstar - brute_force_qstar(h).qstar);
    out.budget = 2.0 * static_cast<double>(out.edits) / static_cast<double>(g.m());
    return out;
}

}  // namespace modbound
