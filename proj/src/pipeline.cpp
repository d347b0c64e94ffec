#include "modbound/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "modbound/bounds.hpp"
#include "modbound/rng.hpp"

namespace modbound {

PipelineResult partition_no_cutoff(const Graph& g, std::uint64_t seed, const PipelineOptions& opts) {
    if (g.m() == 0) throw std::invalid_argument("partition_no_cutoff: graph has no edges");
    if (!g.is_simple()) throw std::invalid_argument("partition_no_cutoff: graph must be simple");
    const int n = g.n();
    const std::int64_t window = delta9_window(g.max_degree());
    if (opts.mode == MatchingMode::strict && !(window >= 1 && 6 * window < n))
        throw std::invalid_argument("partition_no_cutoff: strict mode needs Delta^9 in [1, n/6)");

    const std::vector<int> deg = g.degrees();
    std::vector<double> weights(deg.begin(), deg.end());
    WbpOptions wopts;
    wopts.mode = opts.mode;
    wopts.max_retries = opts.bisection_retries;
    const WeightBalancedResult wb = weight_balanced_partition(g, weights, mix_seed(seed, 0x6e63u), wopts);
    if (wb.a.empty() || wb.b.empty())
        throw std::runtime_error("partition_no_cutoff: matching collapsed, nothing to bisect");

    // the remainder must stay within the nearly-bisection hypothesis; with
    // Delta^9 < n/6 this is guaranteed (vol(R) <= 2 Delta^9 dbar <= vol/3)
    if (opts.mode == MatchingMode::strict && 3 * g.volume(wb.r) > g.total_volume())
        throw std::runtime_error("partition_no_cutoff: remainder volume exceeded Vol(G)/3");

    PipelineResult res;
    res.final_partition = Partition::three_part(wb.a, wb.b, wb.r);
    res.achieved = score(g, res.final_partition);

    const BoundReport bound = bound_no_cutoff(deg);
    res.theoretical_bound = bound.value;
    res.bound_vacuous = bound.vacuous;

    res.diagnostics.route = "no_cutoff";
    res.diagnostics.cut = wb.cut_ab;
    res.diagnostics.cut_bound = wb.cut_bound;
    res.diagnostics.vol_imbalance = std::abs(static_cast<double>(g.volume(wb.a) - g.volume(wb.b)));
    res.diagnostics.retries = wb.retries_used;
    res.diagnostics.bisection_achieved = wb.achieved;
    res.diagnostics.size_a = wb.a.size();
    res.diagnostics.size_b = wb.b.size();
    res.diagnostics.size_r = wb.r.size();
    res.diagnostics.bandwidth = wb.bandwidth;
    res.diagnostics.verify_ran = wb.verify_ran;
    return res;
}

BulkSplit split_bulk(const Graph& g, double C) {
    if (!(C > 1.0)) throw std::invalid_argument("split_bulk: C must exceed 1");
    if (g.m() == 0) throw std::invalid_argument("split_bulk: graph has no edges");
    const int n = g.n();
    const double dbar = g.avg_degree();
    BulkSplit bs;
    bs.cutoff = C * dbar;
    bs.low = VertexSet(n);
    bs.high = VertexSet(n);
    std::int64_t vol_low = 0;
    for (int v = 0; v < n; ++v) {
        if (static_cast<double>(g.degree(v)) < bs.cutoff) {
            bs.low.insert(v);
            vol_low += g.degree(v);
        } else {
            bs.high.insert(v);
        }
    }
    bs.gamma = static_cast<double>(vol_low) / static_cast<double>(g.m()) - 1.0;
    bs.theta = std::pow(bs.cutoff, 10.0) / static_cast<double>(n);
    bs.theta_ok = bs.theta < 0.5 * (1.0 - 1.0 / C);
    return bs;
}

HighDegreeAssignment assign_high_degree(const Graph& g, const VertexSet& u, std::uint64_t seed) {
    const int n = g.n();
    HighDegreeAssignment out;
    out.u_minus = VertexSet(n);
    out.side_a = VertexSet(n);
    out.side_b = VertexSet(n);

    // d >= sqrt(n) tested exactly as d^2 >= n
    std::vector<int> heavy;
    for (int v : u.members())
        if (static_cast<std::int64_t>(g.degree(v)) * g.degree(v) >= n) heavy.push_back(v);
    std::stable_sort(heavy.begin(), heavy.end(), [&](int x, int y) { return g.degree(x) > g.degree(y); });
    if (heavy.size() % 2 == 1) {
        out.nu = heavy.back();
        heavy.pop_back();
    }
    for (std::size_t i = 0; i + 1 < heavy.size(); i += 2) {
        out.u_plus_pairs.emplace_back(heavy[i], heavy[i + 1]);
        if (g.has_edge(heavy[i], heavy[i + 1])) ++out.pairs_in_graph;
    }
    VertexSet paired(n);
    for (const auto& [x, y] : out.u_plus_pairs) {
        paired.insert(x);
        paired.insert(y);
    }
    for (int v : u.members())
        if (!paired.contains(v)) out.u_minus.insert(v);

    std::mt19937_64 rng = substream(seed, StreamTag::high_degree_draw);
    for (const auto& [x, y] : out.u_plus_pairs) {
        if (rand_bit(rng)) {
            out.side_a.insert(x);
            out.side_b.insert(y);
        } else {
            out.side_a.insert(y);
            out.side_b.insert(x);
        }
    }
    for (int v : out.u_minus.members()) {
        if (rand_bit(rng)) out.side_a.insert(v);
        else out.side_b.insert(v);
    }
    return out;
}

PipelineResult partition_bulk_split(const Graph& g, double C, std::uint64_t seed,
                                    const PipelineOptions& opts) {
    if (g.m() == 0) throw std::invalid_argument("partition_bulk_split: graph has no edges");
    if (!g.is_simple()) throw std::invalid_argument("partition_bulk_split: graph must be simple");
    const int n = g.n();
    const BulkSplit bs = split_bulk(g, C);
    if (opts.mode == MatchingMode::strict && !bs.theta_ok)
        throw std::invalid_argument("partition_bulk_split: strict mode needs theta < (1/2)(1 - 1/C)");
    if (bs.low.empty()) throw std::invalid_argument("partition_bulk_split: bulk set L is empty");

    const InducedSubgraph sub = induced_subgraph(g, bs.low);
    const std::vector<int> deg_prime = sub.graph.degrees();
    std::vector<double> weights(deg_prime.begin(), deg_prime.end());

    WbpOptions wopts;
    wopts.mode = opts.mode;
    wopts.max_retries = opts.bisection_retries;
    const WeightBalancedResult wb =
        weight_balanced_partition(sub.graph, weights, mix_seed(seed, 0x626cu), wopts);
    if (wb.a.empty() || wb.b.empty())
        throw std::runtime_error("partition_bulk_split: matching collapsed, nothing to bisect");

    VertexSet a(n), b(n), u(n);
    for (int v : wb.a.members()) a.insert(sub.to_parent[static_cast<std::size_t>(v)]);
    for (int v : wb.b.members()) b.insert(sub.to_parent[static_cast<std::size_t>(v)]);
    for (int v : wb.r.members()) u.insert(sub.to_parent[static_cast<std::size_t>(v)]);
    for (int v : bs.high.members()) u.insert(v);

    double best_q = -2.0;
    VertexSet best_side_a;
    const int draws = std::max(1, opts.outer_retries);
    for (int k = 0; k < draws; ++k) {
        const HighDegreeAssignment hd = assign_high_degree(g, u, mix_seed(seed, 0x7568u, static_cast<std::uint64_t>(k)));
        VertexSet side_a = a;
        for (int v : hd.side_a.members()) side_a.insert(v);
        const double q = two_part_score(g, side_a);
        if (q > best_q) {
            best_q = q;
            best_side_a = side_a;
        }
    }

    PipelineResult res;
    res.final_partition = Partition::two_part(best_side_a);
    res.achieved = score(g, res.final_partition);

    const BoundReport bound = bound_main(n, g.avg_degree(), g.max_degree(), C, bs.gamma);
    res.theoretical_bound = bound.value;
    res.bound_vacuous = bound.vacuous;

    res.diagnostics.route = "bulk_split";
    res.diagnostics.C = C;
    res.diagnostics.gamma = bs.gamma;
    res.diagnostics.theta = bs.theta;
    res.diagnostics.cut = wb.cut_ab;
    res.diagnostics.cut_bound = wb.cut_bound;
    const std::int64_t vol_a = g.volume(best_side_a);
    res.diagnostics.vol_imbalance = std::abs(static_cast<double>(2 * vol_a - g.total_volume()));
    res.diagnostics.retries = wb.retries_used;
    res.diagnostics.outer_retries = draws;
    res.diagnostics.bisection_achieved = wb.achieved;
    res.diagnostics.size_a = a.size();
    res.diagnostics.size_b = b.size();
    res.diagnostics.size_r = wb.r.size();
    res.diagnostics.size_u = u.size();
    res.diagnostics.bandwidth = wb.bandwidth;
    res.diagnostics.verify_ran = wb.verify_ran;
    return res;
}

FiveTerms five_term_decomposition(const Graph& g, const VertexSet& a, const VertexSet& b,
                                  const VertexSet& ua, const VertexSet& ub) {
    const int n = g.n();
    if (!a.disjoint_with(b) || !a.disjoint_with(ua) || !a.disjoint_with(ub) || !b.disjoint_with(ua) ||
        !b.disjoint_with(ub) || !ua.disjoint_with(ub))
        throw std::invalid_argument("five_term_decomposition: sets overlap");
    if (a.size() + b.size() + ua.size() + ub.size() != n)
        throw std::invalid_argument("five_term_decomposition: sets do not cover [n]");
    if (g.m() == 0) throw std::invalid_argument("five_term_decomposition: graph has no edges");

    VertexSet ab(n), uu(n);
    for (int v : a.members()) ab.insert(v);
    for (int v : b.members()) ab.insert(v);
    for (int v : ua.members()) uu.insert(v);
    for (int v : ub.members()) uu.insert(v);

    const double m = static_cast<double>(g.m());
    const std::int64_t e_ab_in = internal_edges(g, ab);
    const std::int64_t e_a_b = cut(g, a, b);
    const std::int64_t e_u = internal_edges(g, uu);
    const std::int64_t e_ab_u = cut(g, ab, uu);
    const std::int64_t e_ua_ub = cut(g, ua, ub);
    const std::int64_t e_ua_b = cut(g, ua, b);
    const std::int64_t e_a_ub = cut(g, a, ub);
    const double vol_a = static_cast<double>(g.volume(a));
    const double vol_b = static_cast<double>(g.volume(b));
    const double vol_ua = static_cast<double>(g.volume(ua));
    const double vol_ub = static_cast<double>(g.volume(ub));

    FiveTerms t;
    t.edge_gain = (static_cast<double>(e_ab_in) - 2.0 * static_cast<double>(e_a_b)) / (2.0 * m);
    t.ab_imbalance_tax = -(vol_a - vol_b) * (vol_a - vol_b) / (8.0 * m * m);
    t.u_cross = (static_cast<double>(e_u) + static_cast<double>(e_ab_u)) / (2.0 * m) -
                (static_cast<double>(e_ua_ub) + static_cast<double>(e_ua_b) + static_cast<double>(e_a_ub)) / m;
    t.mixed_volume = -(vol_a - vol_b) * (vol_ua - vol_ub) / (4.0 * m * m);
    t.u_imbalance_tax = -(vol_ua - vol_ub) * (vol_ua - vol_ub) / (8.0 * m * m);
    return t;
}

}  // namespace modbound
