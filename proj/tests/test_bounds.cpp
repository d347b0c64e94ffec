#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "modbound/bisection.hpp"
#include "modbound/bounds.hpp"
#include "modbound/generators.hpp"
#include "modbound/pk_distribution.hpp"
#include "test_helpers.hpp"

using namespace modbound;
using namespace modbound::testing;

namespace {

// Independent re-evaluation of the main bound, long double term by term.
long double bound_main_reference(std::int64_t n, long double dbar, std::int64_t delta, long double C,
                                 long double gamma) {
    const long double cd = C * dbar;
    long double cd10 = 1.0L;
    for (int i = 0; i < 10; ++i) cd10 *= cd;
    const long double theta = cd10 / static_cast<long double>(n);
    const long double term1 = 0.26L / std::sqrt(cd) * (gamma - 2.0L * theta / cd);
    const long double term2 = theta * theta / (2.0L * dbar * dbar);
    const long double term3 = 3.0L / (8.0L * std::sqrt(static_cast<long double>(n)));
    const long double term4 =
        4.0L * static_cast<long double>(delta) * static_cast<long double>(delta) /
        (static_cast<long double>(n) * static_cast<long double>(n) * dbar * dbar);
    return term1 - term2 - term3 - term4;
}

}  // namespace

TEST_CASE("bound_main headline limit: value approaches 0.26 gamma / sqrt(C dbar)") {
    const double dbar = 4.0, C = 2.0, gamma = 1.0;
    double prev_gap = 1e9;
    for (std::int64_t n : {std::int64_t(1) << 30, std::int64_t(1) << 40, std::int64_t(1) << 50}) {
        const BoundReport rep = bound_main(n, dbar, 100, C, gamma);
        const double headline = 0.26 * gamma / std::sqrt(C * dbar);
        const double gap = std::abs(rep.value - headline);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    const BoundReport rep = bound_main(std::int64_t(1) << 50, dbar, 100, C, gamma);
    CHECK(rep.value == doctest::Approx(0.26 / std::sqrt(8.0)).epsilon(1e-6));
    CHECK(rep.hypotheses_met());
    CHECK(!rep.vacuous);
}

TEST_CASE("bound_main with gamma zero is nonpositive") {
    const BoundReport rep = bound_main(std::int64_t(1) << 40, 10.0, 50, 2.0, 0.0);
    CHECK(rep.value <= 0.0);
    CHECK(rep.vacuous);
}

TEST_CASE("bound_main agrees with an independent long-double evaluation") {
    const struct {
        std::int64_t n;
        double dbar, C, gamma;
        std::int64_t delta;
    } cases[] = {
        {100000000, 4.0, 2.0, 1.0, 100},
        {1000000, 2.5, 3.0, 0.7, 30},
        {100000, 1.0, 1.5, 0.25, 10},
        {123456789, 6.0, 2.5, 0.99, 2000},
    };
    for (const auto& c : cases) {
        const BoundReport rep = bound_main(c.n, c.dbar, c.delta, c.C, c.gamma);
        const double ref = static_cast<double>(bound_main_reference(c.n, c.dbar, c.delta, c.C, c.gamma));
        CHECK(rep.value == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("bound_main monotonicity: increasing in gamma, decreasing in C") {
    const std::int64_t n = std::int64_t(1) << 40;
    double prev = -1e9;
    for (double gamma = 0.1; gamma <= 1.0; gamma += 0.1) {
        const double v = bound_main(n, 4.0, 100, 2.0, gamma).value;
        CHECK(v > prev);
        prev = v;
    }
    prev = 1e9;
    for (double C = 1.5; C <= 8.0; C += 0.5) {
        const double v = bound_main(n, 4.0, 100, C, 0.8).value;
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("bound_main input validation") {
    CHECK_THROWS_AS(bound_main(100, 4.0, 10, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bound_main(100, 0.5, 10, 2.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bound_main(0, 4.0, 10, 2.0, 0.5), std::invalid_argument);
}

TEST_CASE("bound_no_cutoff closed forms") {
    // d-regular: c/sqrt(d) - d^20/(2 (n d)^2)
    std::vector<int> regular(50000, 3);
    const BoundReport rep = bound_no_cutoff(regular);
    const double nd = 50000.0 * 3.0;
    CHECK(rep.value ==
          doctest::Approx(kAlonConstant / std::sqrt(3.0) - std::pow(3.0, 20.0) / (2.0 * nd * nd)).epsilon(1e-12));

    std::vector<int> ones(1000, 1);
    const BoundReport rep1 = bound_no_cutoff(ones);
    CHECK(rep1.value == doctest::Approx(kAlonConstant - 0.5 / (1000.0 * 1000.0)).epsilon(1e-12));
    CHECK(rep1.value == doctest::Approx(0.265).epsilon(1e-2));

    std::vector<int> isolated = {0};
    const BoundReport rep0 = bound_no_cutoff(isolated);
    CHECK(rep0.value == 0.0);
    CHECK(rep0.vacuous);
    CHECK_THROWS_AS(bound_no_cutoff(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("powerlaw tail constant by exhaustive scan oracle") {
    std::vector<int> regular(64, 4);
    // for a d-regular sequence the scan peaks at k = d with value (d/dbar)^(tau-1) = 1
    CHECK(powerlaw_tail_A(regular, 3.0) == doctest::Approx(1.0));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> degs;
        for (int i = 0; i < 200; ++i) degs.push_back(1 + static_cast<int>(rand_below(rng, 30)));
        const double tau = 2.2 + 0.1 * trial;
        const double a_min = powerlaw_tail_A(degs, tau);
        // oracle: direct scan
        double dbar = 0.0;
        for (int d : degs) dbar += d;
        dbar /= 200.0;
        double expect = 0.0;
        for (int k = 1; k <= 40; ++k) {
            int cnt = 0;
            for (int d : degs)
                if (d >= k) ++cnt;
            expect = std::max(expect, (cnt / 200.0) * std::pow(k / dbar, tau - 1.0));
        }
        CHECK(a_min == doctest::Approx(expect).epsilon(1e-12));
        // minimality: the hypothesis holds at A_min, fails just below it
        for (int k = 1; k <= 40; ++k) {
            int cnt = 0;
            for (int d : degs)
                if (d >= k) ++cnt;
            CHECK(static_cast<double>(cnt) / 200.0 <=
                  a_min * std::pow(dbar, tau - 1.0) * std::pow(static_cast<double>(k), 1.0 - tau) + 1e-12);
        }
    }
}

TEST_CASE("powerlaw b formula") {
    CHECK(bound_powerlaw_b(3.0, 1.0) == doctest::Approx(0.1 * std::sqrt(1.0 / 8.0)).epsilon(1e-12));
    CHECK(bound_powerlaw_b(3.0, 1.0) == doctest::Approx(0.035355).epsilon(1e-4));
    CHECK_THROWS_AS(bound_powerlaw_b(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bound_powerlaw_b(3.0, 0.0), std::invalid_argument);
}

TEST_CASE("powerlaw hypothesis is monotone in tau given the scanned constant") {
    std::vector<int> degs;
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) degs.push_back(1 + static_cast<int>(rand_below(rng, 50)));
    const double tau_hi = 3.2, tau_lo = 2.4;
    const BoundReport hi = bound_powerlaw(degs, tau_hi);
    const BoundReport lo = bound_powerlaw(degs, tau_lo);
    CHECK(hi.inputs.A > 0.0);
    CHECK(lo.inputs.A > 0.0);
    CHECK(hi.value > 0.0);
    CHECK(lo.value > 0.0);
}

TEST_CASE("bound_moments closed forms") {
    std::vector<int> regular(100000, 4);
    const BoundReport rep = bound_moments(regular, 0.5);
    CHECK(rep.inputs.B == doctest::Approx(1.0));
    CHECK(rep.inputs.C == doctest::Approx(std::pow(4.0, 2.0)));  // (4B)^(1/kappa) = 16
    CHECK(rep.inputs.gamma == doctest::Approx(0.5));

    std::vector<int> small = {1, 1, 2};
    const BoundReport rep2 = bound_moments(small, 1.0);
    CHECK(rep2.inputs.B == doctest::Approx(1.125));

    // one huge degree makes the bound vacuous
    std::vector<int> heavy(1000, 1);
    heavy[0] = 999;
    const BoundReport rep3 = bound_moments(heavy, 1.0);
    CHECK(rep3.vacuous);

    CHECK_THROWS_AS(bound_moments(regular, 0.0), std::invalid_argument);
}

TEST_CASE("removed-degrees bound: both prefactor variants") {
    // keep theta small so the shared error terms cancel without float loss
    const Graph g = gen_random_regular(3000, 2, 5);
    const BoundReport st = bound_removed_degrees(g, 2.0, RemovedDegreesPrefactor::statement);
    const BoundReport pr = bound_removed_degrees(g, 2.0, RemovedDegreesPrefactor::proof);

    // recompute the sqrt sum independently
    const double cd = 2.0 * g.avg_degree();
    VertexSet low(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < cd) low.insert(v);
    const InducedSubgraph sub = induced_subgraph(g, low);
    double s = 0.0;
    for (int d : sub.graph.degrees())
        if (d > 0) s += std::sqrt(static_cast<double>(d));
    const double nd = static_cast<double>(g.n()) * g.avg_degree();
    CHECK(pr.value - st.value == doctest::Approx(kAlonConstant / (2.0 * nd) * s).epsilon(1e-9));
}

TEST_CASE("pk normalization and mean across the (m, delta) grid") {
    for (int m : {1, 2, 3, 5}) {
        for (double ratio : {-0.5, 0.0, 0.5, 0.9}) {
            const double delta = ratio * m;
            const PkDistribution dist = pk_evaluate(m, delta, m + 60);
            CHECK(std::abs(dist.total() - 1.0) <= 1e-6);
            CHECK(std::abs(dist.mean_with_tail - 2.0 * m) <= 1e-4 * m);
            for (double p : dist.p) CHECK(p >= 0.0);
            CHECK(dist.at(m - 1) == 0.0);
        }
    }
}

TEST_CASE("pk quadrature agrees with the closed form") {
    for (int m : {1, 3, 5}) {
        for (double ratio : {-0.5, 0.0, 0.9}) {
            const double delta = ratio * m;
            const PkDistribution dist = pk_evaluate(m, delta, m + 40);
            for (int k = m; k <= m + 40; ++k)
                CHECK(dist.at(k) == doctest::Approx(pk_closed_form(m, delta, k)).epsilon(1e-9));
        }
    }
}

TEST_CASE("pk exact rational values at delta = 0") {
    // p_k = 2 m (m+1) / (k (k+1) (k+2))
    for (int m : {1, 2, 3}) {
        const PkDistribution dist = pk_evaluate(m, 0.0, m + 20);
        for (int k = m; k <= m + 20; ++k) {
            const double expect = 2.0 * m * (m + 1.0) /
                                  (static_cast<double>(k) * (k + 1.0) * (k + 2.0));
            CHECK(dist.at(k) == doctest::Approx(expect).epsilon(1e-10));
        }
    }
    // m = 1: mean exactly 2
    const PkDistribution d1 = pk_evaluate(1, 0.0, 200);
    CHECK(std::abs(d1.mean_with_tail - 2.0) <= 1e-6);
}

TEST_CASE("pk tail inequality of the first tail bound") {
    // sum_{k >= Cm} k p_k <= 2^5/(tau-2) C^(2-tau) m
    for (int m : {1, 2, 3, 5}) {
        for (double ratio : {-0.5, 0.0, 0.5, 0.9}) {
            const double delta = ratio * m;
            const double tau = 3.0 + delta / m;
            for (int c : {2, 4, 8}) {
                const double lhs = pk_tail_weighted(m, delta, c * m);
                const double rhs = 32.0 / (tau - 2.0) * std::pow(static_cast<double>(c), 2.0 - tau) * m;
                CHECK(lhs <= rhs + 1e-12);
            }
        }
    }
}

TEST_CASE("pk asymptotic envelope") {
    // p_k <= 2^5 k^(-tau) m^(tau-1) for large k
    for (int m : {1, 3}) {
        const double delta = 0.0;
        const double tau = 3.0;
        for (int k : {50, 100, 400}) {
            const double envelope = 32.0 * std::pow(static_cast<double>(k), -tau) * std::pow(static_cast<double>(m), tau - 1.0);
            CHECK(pk_closed_form(m, delta, k) <= envelope);
        }
    }
}

TEST_CASE("pk parameter validation") {
    CHECK_THROWS_AS(pk_evaluate(0, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(pk_evaluate(3, 3.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(pk_evaluate(3, 0.0, 2), std::invalid_argument);
}
