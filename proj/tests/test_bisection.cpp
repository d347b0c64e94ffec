#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "modbound/bisection.hpp"
#include "modbound/generators.hpp"
#include "test_helpers.hpp"

using namespace modbound;
using namespace modbound::testing;

TEST_CASE("cut bound rhs worked examples") {
    CHECK(cut_bound_rhs({}) == 0.0);

    std::vector<int> ones(100, 1);
    CHECK(cut_bound_rhs(ones) == doctest::Approx(100.0 * 0.5 * (0.5 - kAlonConstant)));
    CHECK(cut_bound_rhs(ones) / 100.0 == doctest::Approx(0.117417).epsilon(1e-4));

    std::vector<int> cubic(200, 3);  // m = 300
    const double per_edge = 0.5 - kAlonConstant / std::sqrt(3.0);
    CHECK(cut_bound_rhs(cubic) == doctest::Approx(300.0 * per_edge));
    CHECK(per_edge == doctest::Approx(0.34690).epsilon(1e-4));

    std::vector<int> with_zeros = {0, 0, 4, 0};
    CHECK(cut_bound_rhs(with_zeros) == doctest::Approx(0.5 * 4.0 * (0.5 - kAlonConstant / 2.0)));
}

TEST_CASE("load balance: constant weights give zero on both sides") {
    const Graph g = Graph::from_edges({}, 8);
    const BandwidthMatching m = greedy_matching(g);
    std::vector<double> w(8, 3.0);
    std::vector<std::uint8_t> orient(m.pairs.size(), 0);
    const LoadBalanceReport rep = load_balance_check(w, m, orient);
    CHECK(rep.lhs == 0.0);
    CHECK(rep.ok);
}

TEST_CASE("load balance: linear ramp with adjacent pairs, all orientations") {
    const Graph g = Graph::from_edges({}, 8);
    const BandwidthMatching m = greedy_matching(g);  // pairs (0,1)..(6,7)
    std::vector<double> w(8);
    for (int i = 0; i < 8; ++i) w[static_cast<std::size_t>(i)] = 8.0 - i;
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::uint8_t> orient(4);
        for (unsigned b = 0; b < 4; ++b) orient[b] = (mask >> b) & 1u;
        const LoadBalanceReport rep = load_balance_check(w, m, orient);
        CHECK(rep.lhs <= 4.0);
        CHECK(rep.rhs == doctest::Approx(7.0));
        CHECK(rep.ok);
    }
}

TEST_CASE("load balance inequality on random non-increasing weights and matchings") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 6 + static_cast<int>(rand_below(rng, 40));
        std::vector<double> w(static_cast<std::size_t>(n));
        double acc = 10.0 + rand_unit(rng);
        for (int i = 0; i < n; ++i) {
            w[static_cast<std::size_t>(i)] = acc;
            acc -= rand_unit(rng) * 0.5;
        }
        // random partial matching with bounded bandwidth
        const int band = 1 + static_cast<int>(rand_below(rng, 6));
        BandwidthMatching m;
        m.n = n;
        m.mate.assign(static_cast<std::size_t>(n), -1);
        m.unmatched = VertexSet(n);
        for (int v = 0; v < n; ++v) {
            if (m.mate[static_cast<std::size_t>(v)] >= 0 || rand_bit(rng)) continue;
            const int lo = v + 1, hi = std::min(n - 1, v + band);
            if (lo > hi) continue;
            const int cand = lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
            if (m.mate[static_cast<std::size_t>(cand)] >= 0) continue;
            m.mate[static_cast<std::size_t>(v)] = cand;
            m.mate[static_cast<std::size_t>(cand)] = v;
            m.pairs.emplace_back(v, cand);
            m.bandwidth_observed = std::max<std::int64_t>(m.bandwidth_observed, cand - v);
        }
        std::vector<std::uint8_t> orient(m.pairs.size());
        for (auto& o : orient) o = rand_bit(rng) ? 1 : 0;
        CHECK(load_balance_check(w, m, orient).ok);
    }
}

TEST_CASE("load balance rejects unsorted weights") {
    BandwidthMatching m;
    m.n = 2;
    m.mate = {-1, -1};
    m.unmatched = VertexSet(2);
    std::vector<double> w = {1.0, 2.0};
    CHECK_THROWS_AS(load_balance_check(w, m, {}), std::invalid_argument);
}

TEST_CASE("alon bisection on an edgeless graph achieves the zero bound instantly") {
    const Graph g = Graph::from_edges({}, 10);
    const BandwidthMatching m = greedy_matching(g);
    const BisectionResult res = alon_bisection(g, m, 1);
    CHECK(res.cut_edges == 0);
    CHECK(res.bound_rhs == 0.0);
    CHECK(res.achieved);
    CHECK(res.retries_used == 1);
    CHECK(res.u_side.size() == 5);
}

TEST_CASE("alon bisection rejects imperfect matchings and short loops") {
    const Graph g = Graph::from_edges({}, 5);
    MatchingOptions opts;
    opts.mode = MatchingMode::permissive;
    const BandwidthMatching m = greedy_matching(g, opts);  // vertex 4 unmatched
    CHECK_THROWS_AS(alon_bisection(g, m, 1), std::invalid_argument);

    // a matching touching the graph fails verification
    const Graph k2 = complete_graph(2);
    BandwidthMatching bad;
    bad.n = 2;
    bad.pairs = {{0, 1}};
    bad.mate = {1, 0};
    bad.unmatched = VertexSet(2);
    CHECK_THROWS_AS(alon_bisection(k2, bad, 1), std::runtime_error);
}

TEST_CASE("alon bisection splits every matched pair and is deterministic") {
    const int n = 4000;
    const Graph g = cycle_graph(n);
    const BandwidthMatching m = greedy_matching(g);
    VertexSet matched(n);
    for (int v = 0; v < n; ++v)
        if (m.mate[static_cast<std::size_t>(v)] >= 0) matched.insert(v);
    const InducedSubgraph sub = induced_subgraph(g, matched);
    BandwidthMatching inner;
    inner.n = sub.graph.n();
    inner.mate.assign(static_cast<std::size_t>(inner.n), -1);
    inner.unmatched = VertexSet(inner.n);
    for (const auto& [x, y] : m.pairs) {
        const int xi = sub.from_parent[static_cast<std::size_t>(x)];
        const int yi = sub.from_parent[static_cast<std::size_t>(y)];
        inner.pairs.emplace_back(std::min(xi, yi), std::max(xi, yi));
        inner.mate[static_cast<std::size_t>(xi)] = yi;
        inner.mate[static_cast<std::size_t>(yi)] = xi;
    }

    AlonOptions aopts;
    aopts.max_retries = 50;
    const BisectionResult res = alon_bisection(sub.graph, inner, 7, aopts);
    for (const auto& [x, y] : inner.pairs)
        CHECK(res.u_side.contains(x) != res.u_side.contains(y));
    CHECK(res.u_side.size() * 2 == sub.graph.n());
    if (res.achieved) CHECK(static_cast<double>(res.cut_edges) <= res.bound_rhs);
    CHECK(static_cast<double>(res.cut_edges) <= 0.5 * static_cast<double>(sub.graph.m()));

    const BisectionResult res2 = alon_bisection(sub.graph, inner, 7, aopts);
    CHECK(res2.cut_edges == res.cut_edges);
    CHECK(res2.retries_used == res.retries_used);
    CHECK(res2.u_side.members() == res.u_side.members());
}

TEST_CASE("weight balanced partition on an edgeless graph") {
    const int n = 10;
    const Graph g = Graph::from_edges({}, n);
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = static_cast<double>(i);  // reversed by sorting
    const WeightBalancedResult res = weight_balanced_partition(g, w, 3);
    CHECK(res.a.size() == res.b.size());
    CHECK(res.cut_ab == 0);
    CHECK(res.weight_imbalance <= 1.0 * (9.0 - 0.0) + 1e-9);
    CHECK(res.achieved);
    CHECK(res.r.empty());
    CHECK(res.load_balance_ok);
}

TEST_CASE("weight balanced partition on a cycle: all five guarantees") {
    const int n = 4000;
    const Graph g = cycle_graph(n);
    const std::vector<int> deg = g.degrees();
    const std::vector<double> w(deg.begin(), deg.end());
    WbpOptions opts;
    opts.max_retries = 200;
    const WeightBalancedResult res = weight_balanced_partition(g, w, 11, opts);

    CHECK(res.a.size() == res.b.size());                     // 1: balanced sizes
    CHECK(res.r.size() <= 512);                              // 2: remainder inside the window
    CHECK(res.weight_imbalance == 0.0);                      // 4: regular, wmax = wmin
    CHECK(res.r_weight_ok);                                  // 5: max_R weight <= 2 mean
    CHECK(res.load_balance_ok);
    if (res.achieved)                                        // 3: cut below the rhs
        CHECK(static_cast<double>(res.cut_ab) <= res.cut_bound);
    CHECK(cut(g, res.a, res.b) == res.cut_ab);
    CHECK(res.verify_ran);
}

TEST_CASE("weight balanced partition strict-mode precondition") {
    const Graph g = cycle_graph(100);  // Delta^9 = 512 >= n/2
    std::vector<double> w(100, 1.0);
    CHECK_THROWS_AS(weight_balanced_partition(g, w, 1), std::invalid_argument);

    WbpOptions opts;
    opts.mode = MatchingMode::permissive;
    const WeightBalancedResult res = weight_balanced_partition(g, w, 1, opts);
    CHECK(res.a.size() == res.b.size());
}

TEST_CASE("weight balanced partition with degree weights on an irregular graph") {
    const Graph g = naive_gnp(3000, 2.0 / 3000.0, 31);  // sparse, max degree stays tiny
    if (g.max_degree() <= 1) return;
    const std::vector<int> deg = g.degrees();
    const std::vector<double> w(deg.begin(), deg.end());
    WbpOptions opts;
    opts.mode = delta9_window(g.max_degree()) * 2 < g.n() ? MatchingMode::strict : MatchingMode::permissive;
    const WeightBalancedResult res = weight_balanced_partition(g, w, 5, opts);
    CHECK(res.a.size() == res.b.size());
    const double wmax = *std::max_element(w.begin(), w.end());
    const double wmin = *std::min_element(w.begin(), w.end());
    CHECK(res.weight_imbalance <= static_cast<double>(res.bandwidth) * (wmax - wmin) + 1e-9);
    CHECK(cut(g, res.a, res.b) == res.cut_ab);
}

TEST_CASE("weight balanced partition invariants on a Chung-Lu ramp") {
    ChungLuWeights w;
    const int n = 30000;
    for (int i = 0; i < n; ++i) w.w.push_back(5.0 + 35.0 * i / n);
    const Graph g = gen_chung_lu(w, 11);
    const std::vector<int> deg = g.degrees();
    const std::vector<double> wd(deg.begin(), deg.end());
    WbpOptions opts;
    opts.mode = MatchingMode::permissive;
    const WeightBalancedResult res = weight_balanced_partition(g, wd, 7, opts);

    CHECK(res.a.size() == res.b.size());
    const double wmax = *std::max_element(wd.begin(), wd.end());
    const double wmin = *std::min_element(wd.begin(), wd.end());
    CHECK(res.weight_imbalance <= static_cast<double>(res.delta9_budget) * (wmax - wmin) + 1e-9);
    CHECK(res.r_weight_ok);
    CHECK(res.load_balance_ok);
    for (int v : res.r.members()) CHECK(v >= 0);  // R maps back into the graph
    if (res.achieved) CHECK(static_cast<double>(res.cut_ab) <= res.cut_bound);
    CHECK(cut(g, res.a, res.b) == res.cut_ab);
}
