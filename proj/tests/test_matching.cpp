#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "modbound/generators.hpp"
#include "modbound/io.hpp"
#include "modbound/matching.hpp"
#include "test_helpers.hpp"

using namespace modbound;
using namespace modbound::testing;

namespace {

BandwidthMatching make_matching(int n, const std::vector<std::pair<int, int>>& pairs) {
    BandwidthMatching m;
    m.n = n;
    m.mate.assign(static_cast<std::size_t>(n), -1);
    m.unmatched = VertexSet(n);
    for (auto [x, y] : pairs) {
        m.pairs.emplace_back(std::min(x, y), std::max(x, y));
        m.mate[static_cast<std::size_t>(x)] = y;
        m.mate[static_cast<std::size_t>(y)] = x;
        m.bandwidth_observed = std::max<std::int64_t>(m.bandwidth_observed, std::abs(x - y));
    }
    for (int v = 0; v < n; ++v)
        if (m.mate[static_cast<std::size_t>(v)] < 0) m.unmatched.insert(v);
    return m;
}

}  // namespace

TEST_CASE("delta9 window saturates instead of overflowing") {
    CHECK(delta9_window(0) == 1);
    CHECK(delta9_window(1) == 1);
    CHECK(delta9_window(2) == 512);
    CHECK(delta9_window(3) == 19683);
    CHECK(delta9_window(1000) >= delta9_window(999));  // saturates at the cap
    CHECK(delta9_window(1000) > 0);
}

TEST_CASE("edgeless graph pairs consecutive vertices") {
    const Graph g = Graph::from_edges({}, 6);
    const BandwidthMatching m = greedy_matching(g);
    CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}});
    CHECK(m.bandwidth_observed == 1);
    CHECK(m.unmatched.empty());
}

TEST_CASE("odd edgeless graph leaves exactly the last vertex unmatched") {
    const Graph g = Graph::from_edges({}, 7);
    const BandwidthMatching m = greedy_matching(g);
    CHECK(m.unmatched.size() == 1);
    CHECK(m.unmatched.contains(6));
}

TEST_CASE("the guarantee is void when n is at most Delta^9 + 1") {
    const Graph g = cycle_graph(12);  // Delta^9 = 512 >> 12
    const BandwidthMatching m = greedy_matching(g);
    CHECK(m.pairs.empty());
    CHECK(m.unmatched.size() == 12);

    // permissive mode still matches what it can
    MatchingOptions opts;
    opts.mode = MatchingMode::permissive;
    const BandwidthMatching pm = greedy_matching(g, opts);
    CHECK(!pm.pairs.empty());
    CHECK(verify_no_short_loops(g, pm).pass());
}

TEST_CASE("strict mode on a cycle: guarantees and verifier") {
    const int n = 4000;  // Delta = 2, Delta^9 = 512
    const Graph g = cycle_graph(n);
    MatchingTrace trace;
    MatchingOptions opts;
    opts.trace = &trace;
    const BandwidthMatching m = greedy_matching(g, opts);

    CHECK(m.delta9_budget == 512);
    CHECK(m.bandwidth_observed <= 512);
    CHECK(m.unmatched.size() <= 512);
    for (int v : m.unmatched.members()) CHECK(v >= n - 512);
    for (const auto& [x, y] : m.pairs) CHECK(!g.has_edge(x, y));

    const ShortLoopReport rep = verify_no_short_loops(g, m);
    CHECK(rep.walk_search_ok);
    CHECK(rep.alternating_cycles_ok);
    CHECK(rep.disjoint_from_graph);

    const ClaimCheckReport claim = claim_window_check(g, trace);
    CHECK(claim.window_ok);
    CHECK(claim.sharper_ok);
    CHECK(claim.steps_checked > 0);
}

TEST_CASE("monotone prefix property: every vertex before the stop line is matched") {
    const Graph g = cycle_graph(3000);
    const BandwidthMatching m = greedy_matching(g);
    const int stop = 3000 - 512;
    for (int v = 0; v < stop; ++v) CHECK(m.mate[static_cast<std::size_t>(v)] >= 0);
}

TEST_CASE("determinism: identical input gives identical matching") {
    const Graph g = gen_random_regular(3000, 3, 99);
    const BandwidthMatching a = greedy_matching(g);
    const BandwidthMatching b = greedy_matching(g);
    CHECK(a.pairs == b.pairs);
}

TEST_CASE("claim trace on an edgeless graph is trivially within budget") {
    const Graph g = Graph::from_edges({}, 50);
    MatchingTrace trace;
    MatchingOptions opts;
    opts.trace = &trace;
    greedy_matching(g, opts);
    const ClaimCheckReport claim = claim_window_check(g, trace);
    CHECK(claim.window_ok);
    CHECK(claim.sharper_ok);
    CHECK(claim.max_f_size == 0);
}

TEST_CASE("verifier rejects a matching edge that is also a graph edge") {
    const Graph g = complete_graph(2);
    const ShortLoopReport rep = verify_no_short_loops(g, make_matching(2, {{0, 1}}));
    CHECK(!rep.pass());
    CHECK(!rep.disjoint_from_graph);
}

TEST_CASE("verifier accepts the P3-plus-isolated-vertex instance") {
    const Graph g = Graph::from_edges({{0, 1}, {1, 2}}, 4);
    const ShortLoopReport rep = verify_no_short_loops(g, make_matching(4, {{0, 3}}));
    CHECK(rep.walk_search_ok);
    CHECK(rep.alternating_cycles_ok);
    CHECK(rep.disjoint_from_graph);
}

TEST_CASE("verifier finds a one-matching-edge loop through a length-3 path") {
    const Graph g = path_graph(4);  // 0-1-2-3
    const ShortLoopReport rep = verify_no_short_loops(g, make_matching(4, {{0, 3}}));
    CHECK(!rep.walk_search_ok);
    CHECK(!rep.alternating_cycles_ok);
    CHECK(!rep.witness.empty());
    CHECK(rep.witness.front() == rep.witness.back());  // closed walk
}

TEST_CASE("verifier finds a planted alternating 4-cycle") {
    // matching (0,2), (1,3); graph edges 2-1 and 3-0 close the cycle
    const Graph g = Graph::from_edges({{1, 2}, {0, 3}}, 4);
    const ShortLoopReport rep = verify_no_short_loops(g, make_matching(4, {{0, 2}, {1, 3}}));
    CHECK(!rep.walk_search_ok);
    CHECK(!rep.alternating_cycles_ok);
}

TEST_CASE("verifier finds a planted alternating 6-cycle with longer runs") {
    // matching (0,1), (4,5), (8,9); connecting G-paths of lengths 1..3
    std::vector<std::pair<int, int>> edges = {{1, 2}, {2, 3}, {3, 4},  // run of length 3
                                              {5, 6}, {6, 8},          // run of length 2
                                              {9, 0}};                 // run of length 1
    const Graph g = Graph::from_edges(std::move(edges), 10);
    const ShortLoopReport rep =
        verify_no_short_loops(g, make_matching(10, {{0, 1}, {4, 5}, {8, 9}}));
    CHECK(!rep.walk_search_ok);
    CHECK(!rep.alternating_cycles_ok);
}

TEST_CASE("no false positive when the would-be loop needs four matching edges") {
    // an alternating cycle of length 8 is allowed
    std::vector<std::pair<int, int>> edges = {{1, 2}, {3, 4}, {5, 6}, {7, 0}};
    const Graph g = Graph::from_edges(std::move(edges), 8);
    const ShortLoopReport rep =
        verify_no_short_loops(g, make_matching(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
    CHECK(rep.walk_search_ok);
    CHECK(rep.alternating_cycles_ok);
}

TEST_CASE("greedy output always passes the verifier, and both routes agree") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 600 + static_cast<int>(rand_below(rng, 2400));
        Graph g;
        if (trial % 2 == 0) {
            g = cycle_graph(n);
        } else {
            g = gen_random_regular(n + (n % 2), 3, 5000 + trial);
        }
        MatchingTrace trace;
        MatchingOptions opts;
        opts.trace = &trace;
        const BandwidthMatching m = greedy_matching(g, opts);
        const ShortLoopReport rep = verify_no_short_loops(g, m);
        CHECK(rep.walk_search_ok);
        CHECK(rep.alternating_cycles_ok);
        CHECK(rep.walk_search_ok == rep.alternating_cycles_ok);
        CHECK(claim_window_check(g, trace).pass());
    }
}

TEST_CASE("two verifier routes agree on adversarial random matchings") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = naive_gnp(24, 0.09, 980 + trial);
        // random partial matching on non-adjacent pairs
        std::vector<std::pair<int, int>> pairs;
        std::vector<char> used(24, 0);
        for (int attempt = 0; attempt < 10; ++attempt) {
            const int x = static_cast<int>(rand_below(rng, 24));
            const int y = static_cast<int>(rand_below(rng, 24));
            if (x == y || used[static_cast<std::size_t>(x)] || used[static_cast<std::size_t>(y)]) continue;
            if (g.has_edge(x, y)) continue;
            used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = 1;
            pairs.emplace_back(x, y);
        }
        const ShortLoopReport rep = verify_no_short_loops(g, make_matching(24, pairs));
        CHECK(rep.walk_search_ok == rep.alternating_cycles_ok);
    }
}

TEST_CASE("strict mode rejects max degree 1") {
    const Graph g = Graph::from_edges({{0, 1}, {2, 3}}, 4);
    CHECK_THROWS_AS(greedy_matching(g), std::invalid_argument);
}

TEST_CASE("permissive distance-only scope matches most vertices on a denser graph") {
    const Graph g = naive_gnp(2000, 12.0 / 2000.0, 8);
    MatchingOptions opts;
    opts.mode = MatchingMode::permissive;
    opts.scope = ConflictScope::distance_only;
    const BandwidthMatching m = greedy_matching(g, opts);
    CHECK(m.scope == ConflictScope::distance_only);
    CHECK(static_cast<double>(m.unmatched.size()) < 0.2 * 2000);
    for (const auto& [x, y] : m.pairs) CHECK(!g.has_edge(x, y));
}

TEST_CASE("matching dump round trip") {
    const Graph g = cycle_graph(3000);
    const BandwidthMatching m = greedy_matching(g);
    const std::string path = (std::filesystem::temp_directory_path() / "modbound_matching_test.txt").string();
    write_matching(path, m);
    const BandwidthMatching back = read_matching(path, g.n());
    CHECK(back.pairs == m.pairs);
    CHECK(back.unmatched.members() == m.unmatched.members());
    CHECK(back.bandwidth_observed == m.bandwidth_observed);
    std::remove(path.c_str());
}
