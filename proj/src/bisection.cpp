#include "modbound/bisection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "modbound/rng.hpp"

namespace modbound {

double cut_bound_rhs(std::span<const int> degrees) {
    double total = 0.0;
    for (int d : degrees) {
        if (d <= 0) continue;
        const double dd = static_cast<double>(d);
        total += dd * (0.5 - kAlonConstant / std::sqrt(dd));
    }
    return 0.5 * total;
}

BisectionResult alon_bisection(const Graph& g, const BandwidthMatching& m, std::uint64_t seed,
                               const AlonOptions& opts) {
    const int n = g.n();
    if (m.n != n) throw std::invalid_argument("alon_bisection: matching built for a different vertex count");
    if (!m.perfect()) throw std::invalid_argument("alon_bisection: matching must be perfect on V(g)");
    if (opts.verify) {
        const ShortLoopReport rep = verify_no_short_loops(g, m);
        if (!rep.pass())
            throw std::runtime_error("alon_bisection: short-loop verification failed (" + rep.witness_kind + ")");
    }

    const std::vector<int> degrees = g.degrees();
    BisectionResult res;
    res.bound_rhs = cut_bound_rhs(degrees);

    const std::size_t np = m.pairs.size();
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 0);
    std::vector<int> opposite(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> best_side;
    std::int64_t best_cut = -1;
    bool achieved = false;
    int retries_done = 0;

    for (int retry = 0; retry < opts.max_retries && !achieved; ++retry) {
        std::mt19937_64 rng = substream(seed, StreamTag::bisection_retry, static_cast<std::uint64_t>(retry));
        ++retries_done;

        for (std::size_t i = 0; i < np; ++i) {
            const bool bit = rand_bit(rng);
            side[static_cast<std::size_t>(m.pairs[i].first)] = bit ? 1 : 0;
            side[static_cast<std::size_t>(m.pairs[i].second)] = bit ? 0 : 1;
        }

        for (int round = 0; round < opts.fixup_rounds; ++round) {
            std::fill(opposite.begin(), opposite.end(), 0);
            for (const auto& [u, v] : g.edges()) {
                if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) {
                    ++opposite[static_cast<std::size_t>(u)];
                    ++opposite[static_cast<std::size_t>(v)];
                }
            }

            // An edge is active when flipping it would not increase the
            // cross-neighbour count of either endpoint. After the flip the
            // old same-side neighbours are exactly the new cross-neighbours.
            for (std::size_t i = 0; i < np; ++i) {
                const int x = m.pairs[i].first;
                const int y = m.pairs[i].second;
                const int same_x = degrees[static_cast<std::size_t>(x)] - opposite[static_cast<std::size_t>(x)];
                const int same_y = degrees[static_cast<std::size_t>(y)] - opposite[static_cast<std::size_t>(y)];
                const bool active = same_x <= opposite[static_cast<std::size_t>(x)] &&
                                    same_y <= opposite[static_cast<std::size_t>(y)];
                if (active) {
                    const bool bit = rand_bit(rng);
                    side[static_cast<std::size_t>(x)] = bit ? 1 : 0;
                    side[static_cast<std::size_t>(y)] = bit ? 0 : 1;
                }
            }
        }

        std::int64_t cut_now = 0;
        for (const auto& [u, v] : g.edges())
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) ++cut_now;

        // strict improvement only, so ties resolve to the lowest retry index
        if (best_cut < 0 || cut_now < best_cut) {
            best_cut = cut_now;
            best_side = side;
        }
        if (static_cast<double>(cut_now) <= res.bound_rhs) achieved = true;
    }

    res.cut_edges = best_cut < 0 ? 0 : best_cut;
    res.retries_used = retries_done;
    res.achieved = achieved;
    res.u_side = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (!best_side.empty() && best_side[static_cast<std::size_t>(v)] == 0) res.u_side.insert(v);
    return res;
}

WeightBalancedResult weight_balanced_partition(const Graph& g, std::span<const double> weights,
                                               std::uint64_t seed, const WbpOptions& opts) {
    const int n = g.n();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight_balanced_partition: weight vector size mismatch");
    for (double w : weights)
        if (!(w >= 0.0)) throw std::invalid_argument("weight_balanced_partition: weights must be nonnegative");

    const std::int64_t budget = delta9_window(g.max_degree());
    if (opts.mode == MatchingMode::strict && !(budget >= 1 && 2 * budget < n))
        throw std::invalid_argument("weight_balanced_partition: strict mode needs Delta^9 in [1, n/2)");

    // Weight-sorted relabeling; ties broken by original index for determinism.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return weights[static_cast<std::size_t>(x)] > weights[static_cast<std::size_t>(y)]; });
    std::vector<int> new_of_old(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) new_of_old[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    const Graph gs = relabel(g, new_of_old);

    MatchingOptions mopts;
    mopts.mode = opts.mode;
    const BandwidthMatching mm = greedy_matching(gs, mopts);

    WeightBalancedResult out;
    out.bandwidth = mm.bandwidth_observed;
    out.delta9_budget = mm.delta9_budget;
    out.scope_used = mm.scope;
    out.a = VertexSet(n);
    out.b = VertexSet(n);
    out.r = VertexSet(n);
    out.mean_weight = n == 0 ? 0.0 : std::accumulate(weights.begin(), weights.end(), 0.0) / n;

    for (int v : mm.unmatched.members()) out.r.insert(order[static_cast<std::size_t>(v)]);

    if (mm.pairs.empty()) {
        // Void matching: everything lands in R and there is nothing to bisect.
        out.achieved = false;
        for (int v : out.r.members()) out.max_r_weight = std::max(out.max_r_weight, weights[static_cast<std::size_t>(v)]);
        out.r_weight_ok = out.max_r_weight <= 2.0 * out.mean_weight + 1e-12;
        return out;
    }

    VertexSet matched_sorted(n);
    for (int v = 0; v < n; ++v)
        if (mm.mate[static_cast<std::size_t>(v)] >= 0) matched_sorted.insert(v);
    const InducedSubgraph sub = induced_subgraph(gs, matched_sorted);

    BandwidthMatching inner;
    inner.n = sub.graph.n();
    inner.mate.assign(static_cast<std::size_t>(inner.n), -1);
    inner.unmatched = VertexSet(inner.n);
    for (const auto& [x, y] : mm.pairs) {
        const int xi = sub.from_parent[static_cast<std::size_t>(x)];
        const int yi = sub.from_parent[static_cast<std::size_t>(y)];
        inner.pairs.emplace_back(std::min(xi, yi), std::max(xi, yi));
        inner.mate[static_cast<std::size_t>(xi)] = yi;
        inner.mate[static_cast<std::size_t>(yi)] = xi;
    }
    inner.delta9_budget = mm.delta9_budget;
    inner.mode = mm.mode;
    inner.scope = mm.scope;

    AlonOptions aopts;
    aopts.max_retries = opts.max_retries;
    aopts.verify = opts.verify.value_or(mm.scope == ConflictScope::full_alternating);
    out.verify_ran = aopts.verify;
    const BisectionResult br = alon_bisection(sub.graph, inner, mix_seed(seed, 0x77b5u), aopts);

    for (int i = 0; i < inner.n; ++i) {
        const int orig = order[static_cast<std::size_t>(sub.to_parent[static_cast<std::size_t>(i)])];
        if (br.u_side.contains(i)) out.a.insert(orig);
        else out.b.insert(orig);
    }
    out.cut_ab = br.cut_edges;
    out.cut_bound = br.bound_rhs;
    out.achieved = br.achieved;
    out.retries_used = br.retries_used;

    double wa = 0.0, wb = 0.0;
    for (int v : out.a.members()) wa += weights[static_cast<std::size_t>(v)];
    for (int v : out.b.members()) wb += weights[static_cast<std::size_t>(v)];
    out.weight_imbalance = std::abs(wa - wb);

    for (int v : out.r.members()) out.max_r_weight = std::max(out.max_r_weight, weights[static_cast<std::size_t>(v)]);
    out.r_weight_ok = out.max_r_weight <= 2.0 * out.mean_weight + 1e-12;

    double wmax = weights[static_cast<std::size_t>(order[0])];
    double wmin = weights[static_cast<std::size_t>(order[static_cast<std::size_t>(n) - 1])];
    out.load_balance_ok =
        out.weight_imbalance <= static_cast<double>(mm.bandwidth_observed) * (wmax - wmin) + 1e-9 * std::max(1.0, wmax);
    return out;
}

LoadBalanceReport load_balance_check(std::span<const double> weights, const BandwidthMatching& m,
                                     std::span<const std::uint8_t> orientation) {
    for (std::size_t i = 1; i < weights.size(); ++i)
        if (weights[i] > weights[i - 1]) throw std::invalid_argument("load_balance_check: weights must be non-increasing");
    if (orientation.size() != m.pairs.size())
        throw std::invalid_argument("load_balance_check: orientation size mismatch");

    long double acc = 0.0L;
    for (std::size_t k = 0; k < m.pairs.size(); ++k) {
        const auto& [i, j] = m.pairs[k];
        const long double diff = static_cast<long double>(weights[static_cast<std::size_t>(i)]) -
                                 static_cast<long double>(weights[static_cast<std::size_t>(j)]);
        acc += orientation[k] ? -diff : diff;
    }
    LoadBalanceReport rep;
    rep.lhs = static_cast<double>(std::abs(acc));
    rep.bandwidth = m.bandwidth_observed;
    rep.rhs = static_cast<double>(m.bandwidth_observed) *
              std::abs(weights.empty() ? 0.0 : weights[weights.size() - 1] - weights[0]);
    rep.ok = rep.lhs <= rep.rhs + 1e-9 * std::max(1.0, rep.rhs);
    return rep;
}

}  // namespace modbound
