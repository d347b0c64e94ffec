#include "modbound/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "modbound/bisection.hpp"

namespace modbound {

BoundReport bound_main(std::int64_t n, double dbar, std::int64_t delta_max, double C, double gamma) {
    if (n <= 0) throw std::invalid_argument("bound_main: n must be positive");
    if (!(C > 1.0)) throw std::invalid_argument("bound_main: C must exceed 1");
    if (!(dbar >= 1.0)) throw std::invalid_argument("bound_main: dbar must be at least 1");

    const double cd = C * dbar;
    const double theta = std::pow(cd, 10.0) / static_cast<double>(n);
    const double nn = static_cast<double>(n);
    const double dd = static_cast<double>(delta_max);

    BoundReport rep;
    rep.name = "main";
    rep.inputs.n = n;
    rep.inputs.dbar = dbar;
    rep.inputs.delta_max = delta_max;
    rep.inputs.C = C;
    rep.inputs.gamma = gamma;
    rep.inputs.theta = theta;
    rep.value = 0.26 / std::sqrt(cd) * (gamma - 2.0 * theta / cd) - theta * theta / (2.0 * dbar * dbar) -
                3.0 / (8.0 * std::sqrt(nn)) - 4.0 * dd * dd / (nn * nn * dbar * dbar);
    rep.hypotheses.emplace_back("theta_condition", theta < 0.5 * (1.0 - 1.0 / C));
    rep.vacuous = rep.value <= 0.0 || !rep.hypotheses_met();
    return rep;
}

BoundReport bound_no_cutoff(std::span<const int> degrees) {
    if (degrees.empty()) throw std::invalid_argument("bound_no_cutoff: empty degree sequence");
    const std::int64_t n = static_cast<std::int64_t>(degrees.size());
    std::int64_t total = 0;
    int delta = 0;
    double sqrt_sum = 0.0;
    for (int d : degrees) {
        total += d;
        delta = std::max(delta, d);
        if (d > 0) sqrt_sum += std::sqrt(static_cast<double>(d));
    }
    const double dbar = static_cast<double>(total) / static_cast<double>(n);

    BoundReport rep;
    rep.name = "no_cutoff";
    rep.inputs.n = n;
    rep.inputs.dbar = dbar;
    rep.inputs.delta_max = delta;
    rep.hypotheses.emplace_back("dbar_positive", dbar > 0.0);
    const std::int64_t window = delta9_window(delta);
    rep.hypotheses.emplace_back("delta9_window", delta >= 1 && window >= 1 && 6 * window < n);
    if (dbar > 0.0) {
        const double nd = static_cast<double>(n) * dbar;
        rep.value = kAlonConstant / static_cast<double>(n) * sqrt_sum / dbar -
                    std::pow(static_cast<double>(delta), 20.0) / (2.0 * nd * nd);
    } else {
        rep.value = 0.0;
    }
    rep.vacuous = rep.value <= 0.0 || !rep.hypotheses_met();
    return rep;
}

double powerlaw_tail_A(std::span<const int> degrees, double tau) {
    if (!(tau > 2.0)) throw std::invalid_argument("powerlaw_tail_A: tau must exceed 2");
    if (degrees.empty()) throw std::invalid_argument("powerlaw_tail_A: empty degree sequence");
    const std::int64_t n = static_cast<std::int64_t>(degrees.size());
    std::int64_t total = 0;
    int delta = 0;
    for (int d : degrees) {
        total += d;
        delta = std::max(delta, d);
    }
    const double dbar = static_cast<double>(total) / static_cast<double>(n);
    if (!(dbar > 0.0)) throw std::invalid_argument("powerlaw_tail_A: zero average degree");

    // suffix counts: tail_count[k] = |{i : d_i >= k}|
    std::vector<std::int64_t> at_least(static_cast<std::size_t>(delta) + 2, 0);
    for (int d : degrees) ++at_least[static_cast<std::size_t>(d)];
    for (int k = delta - 1; k >= 0; --k)
        at_least[static_cast<std::size_t>(k)] += at_least[static_cast<std::size_t>(k) + 1];

    double a_min = 0.0;
    for (int k = 1; k <= delta; ++k) {
        const double frac = static_cast<double>(at_least[static_cast<std::size_t>(k)]) / static_cast<double>(n);
        a_min = std::max(a_min, frac * std::pow(static_cast<double>(k) / dbar, tau - 1.0));
    }
    return a_min;
}

double bound_powerlaw_b(double tau, double A) {
    if (!(tau > 2.0)) throw std::invalid_argument("bound_powerlaw_b: tau must exceed 2");
    if (!(A > 0.0)) throw std::invalid_argument("bound_powerlaw_b: A must be positive");
    return 0.1 * std::pow((tau - 2.0) / (8.0 * A), 1.0 / (2.0 * (tau - 2.0)));
}

BoundReport bound_powerlaw(std::span<const int> degrees, double tau) {
    const double A = powerlaw_tail_A(degrees, tau);
    std::int64_t total = 0;
    for (int d : degrees) total += d;
    const double dbar = static_cast<double>(total) / static_cast<double>(degrees.size());
    const double b = bound_powerlaw_b(tau, A);

    BoundReport rep;
    rep.name = "powerlaw";
    rep.inputs.n = static_cast<std::int64_t>(degrees.size());
    rep.inputs.dbar = dbar;
    rep.inputs.delta_max = *std::max_element(degrees.begin(), degrees.end());
    rep.inputs.tau = tau;
    rep.inputs.A = A;
    rep.value = b / std::sqrt(dbar);
    rep.hypotheses.emplace_back("tau_above_2", tau > 2.0);
    rep.vacuous = rep.value <= 0.0;
    return rep;
}

BoundReport bound_moments(std::span<const int> degrees, double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("bound_moments: kappa must be positive");
    if (degrees.empty()) throw std::invalid_argument("bound_moments: empty degree sequence");
    const std::int64_t n = static_cast<std::int64_t>(degrees.size());
    std::int64_t total = 0;
    int delta = 0;
    double moment = 0.0;
    for (int d : degrees) {
        total += d;
        delta = std::max(delta, d);
        if (d > 0) moment += std::pow(static_cast<double>(d), 1.0 + kappa);
    }
    const double dbar = static_cast<double>(total) / static_cast<double>(n);
    if (!(dbar >= 1.0)) throw std::invalid_argument("bound_moments: dbar must be at least 1");
    const double b_min = moment / (static_cast<double>(n) * std::pow(dbar, 1.0 + kappa));
    const double c_value = std::pow(4.0 * b_min, 1.0 / kappa);

    BoundReport rep = bound_main(n, dbar, delta, c_value, 0.5);
    rep.name = "moments";
    rep.inputs.kappa = kappa;
    rep.inputs.B = b_min;
    return rep;
}

BoundReport bound_removed_degrees(const Graph& g, double C, RemovedDegreesPrefactor which) {
    if (!(C >= 2.0)) throw std::invalid_argument("bound_removed_degrees: C must be at least 2");
    if (g.m() == 0) throw std::invalid_argument("bound_removed_degrees: graph has no edges");
    const std::int64_t n = g.n();
    const double dbar = g.avg_degree();
    const double cd = C * dbar;
    const double theta = std::pow(cd, 10.0) / static_cast<double>(n);

    VertexSet low(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<double>(g.degree(v)) < cd) low.insert(v);
    double sqrt_sum = 0.0;
    if (!low.empty()) {
        const InducedSubgraph sub = induced_subgraph(g, low);
        for (int d : sub.graph.degrees())
            if (d > 0) sqrt_sum += std::sqrt(static_cast<double>(d));
    }

    const double nn = static_cast<double>(n);
    const double nd = nn * dbar;
    const double prefactor =
        which == RemovedDegreesPrefactor::statement ? kAlonConstant / (2.0 * nd) : kAlonConstant / nd;
    const double dd = static_cast<double>(g.max_degree());

    BoundReport rep;
    rep.name = which == RemovedDegreesPrefactor::statement ? "removed_degrees_statement" : "removed_degrees_proof";
    rep.inputs.n = n;
    rep.inputs.dbar = dbar;
    rep.inputs.delta_max = g.max_degree();
    rep.inputs.C = C;
    rep.inputs.theta = theta;
    rep.value = prefactor * sqrt_sum - theta * theta / (2.0 * dbar * dbar) - 3.0 / (8.0 * std::sqrt(nn)) -
                dd * dd / (4.0 * nd * nd);
    rep.hypotheses.emplace_back("theta_below_1", theta < 1.0);
    rep.vacuous = rep.value <= 0.0 || !rep.hypotheses_met();
    return rep;
}

}  // namespace modbound
