#include "modbound/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "modbound/rng.hpp"

namespace modbound {

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_gnp: n must be nonnegative");
    if (!(p >= 0.0) || p > 1.0) throw std::invalid_argument("gen_gnp: p must lie in [0,1]");
    std::vector<std::pair<int, int>> edges;
    if (n >= 2 && p > 0.0) {
        std::mt19937_64 rng = substream(seed, StreamTag::generation);
        if (p >= 1.0) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        } else {
            // Batagelj-Brandes skip sampling over the upper triangle.
            const double log1mp = std::log1p(-p);
            std::int64_t v = 1, w = -1;
            while (v < n) {
                const double r = rand_unit(rng);
                w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log1mp));
                while (w >= v && v < n) {
                    w -= v;
                    ++v;
                }
                if (v < n) edges.emplace_back(static_cast<int>(w), static_cast<int>(v));
            }
        }
    }
    return Graph::from_edges(std::move(edges), n, false);
}

double ChungLuWeights::wbar() const {
    return w.empty() ? 0.0 : total() / static_cast<double>(w.size());
}
double ChungLuWeights::wmin() const { return w.empty() ? 0.0 : *std::min_element(w.begin(), w.end()); }
double ChungLuWeights::wmax() const { return w.empty() ? 0.0 : *std::max_element(w.begin(), w.end()); }
double ChungLuWeights::total() const { return std::accumulate(w.begin(), w.end(), 0.0); }

void ChungLuWeights::validate() const {
    if (w.empty()) throw std::invalid_argument("chung_lu: empty weight vector");
    for (double x : w)
        if (!(x > 0.0)) throw std::invalid_argument("chung_lu: weights must be positive");
    const double s = total();
    const double mx = wmax();
    if (mx * mx > s) throw std::invalid_argument("chung_lu: max weight^2 exceeds wbar*n, some p_uv > 1");
}

Graph gen_chung_lu(const ChungLuWeights& weights, std::uint64_t seed) {
    weights.validate();
    const int n = static_cast<int>(weights.w.size());
    const double total = weights.total();
    std::mt19937_64 rng = substream(seed, StreamTag::generation);

    // Miller-Hagberg: process vertices by decreasing weight so the pair
    // probability is non-increasing along each row, enabling geometric skips.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return weights.w[static_cast<std::size_t>(x)] > weights.w[static_cast<std::size_t>(y)];
    });
    std::vector<double> ws(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ws[static_cast<std::size_t>(i)] = weights.w[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) {
        std::int64_t v = u + 1;
        double p = std::min(ws[static_cast<std::size_t>(u)] * ws[static_cast<std::size_t>(v)] / total, 1.0);
        while (v < n && p > 0.0) {
            if (p < 1.0) {
                const double r = rand_unit(rng);
                v += static_cast<std::int64_t>(std::floor(std::log1p(-r) / std::log1p(-p)));
            }
            if (v < n) {
                const double q = std::min(ws[static_cast<std::size_t>(u)] * ws[static_cast<std::size_t>(v)] / total, 1.0);
                if (rand_unit(rng) < q / p)
                    edges.emplace_back(order[static_cast<std::size_t>(u)], order[static_cast<std::size_t>(v)]);
                p = q;
                ++v;
            }
        }
    }
    return Graph::from_edges(std::move(edges), n, false);
}

void PamParams::validate() const {
    if (m < 1) throw std::invalid_argument("pam: m must be >= 1");
    if (!(delta > -m && delta < m)) throw std::invalid_argument("pam: delta must lie in (-m, m)");
    if (n < 1) throw std::invalid_argument("pam: n must be >= 1");
}

Graph gen_pam(const PamParams& params, std::uint64_t seed) {
    params.validate();
    const std::int64_t steps = static_cast<std::int64_t>(params.m) * params.n;
    const double dp = params.delta / params.m;  // delta' of the m=1 chain
    std::mt19937_64 rng = substream(seed, StreamTag::generation);

    // m=1 chain: endpoint slot array realizes attachment proportional to the
    // current degree; the uniform-vertex mass covers the +delta' part when
    // delta' >= 0, rejection thins the degree-proportional draw otherwise.
    std::vector<std::int32_t> slots;
    slots.reserve(static_cast<std::size_t>(2 * steps));
    std::vector<std::int32_t> chain_deg(static_cast<std::size_t>(steps), 0);
    std::vector<std::pair<int, int>> chain_edges;
    chain_edges.reserve(static_cast<std::size_t>(steps));

    for (std::int64_t t = 0; t < steps; ++t) {
        int target;
        if (t == 0) {
            target = 0;  // the first vertex receives a loop
        } else {
            const double total_mass = static_cast<double>(t) * (2.0 + dp) + (1.0 + dp);
            if (rand_unit(rng) * total_mass < 1.0 + dp) {
                target = static_cast<int>(t);  // self-loop of the arriving vertex
            } else if (dp >= 0.0) {
                const double old_mass = static_cast<double>(t) * (2.0 + dp);
                if (rand_unit(rng) * old_mass < static_cast<double>(t) * dp) {
                    target = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(t)));
                } else {
                    target = slots[static_cast<std::size_t>(rand_below(rng, static_cast<std::uint64_t>(2 * t)))];
                }
            } else {
                // delta' < 0: propose by degree, accept with (D + delta')/D.
                for (;;) {
                    const int cand = slots[static_cast<std::size_t>(rand_below(rng, static_cast<std::uint64_t>(2 * t)))];
                    const double dcand = static_cast<double>(chain_deg[static_cast<std::size_t>(cand)]);
                    if (rand_unit(rng) * dcand < dcand + dp) {
                        target = cand;
                        break;
                    }
                }
            }
        }
        chain_edges.emplace_back(static_cast<int>(t), target);
        slots.push_back(static_cast<std::int32_t>(t));
        slots.push_back(static_cast<std::int32_t>(target));
        ++chain_deg[static_cast<std::size_t>(t)];
        ++chain_deg[static_cast<std::size_t>(target)];
    }

    // Collapse blocks of m consecutive chain vertices.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(chain_edges.size());
    for (const auto& [u, v] : chain_edges)
        edges.emplace_back(static_cast<int>(u / params.m), static_cast<int>(v / params.m));
    return Graph::from_edges(std::move(edges), params.n, true);
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite: sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(std::move(edges), a + b, false);
}

namespace {

std::vector<std::pair<int, int>> pair_stubs(std::vector<int>& stubs, std::mt19937_64& rng) {
    // Fisher-Yates shuffle, then pair consecutive entries: a uniform pairing.
    for (std::size_t i = stubs.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rand_below(rng, i));
        std::swap(stubs[i - 1], stubs[j]);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
    return edges;
}

bool pairing_is_simple(const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) return false;
        sorted.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

Graph gen_random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
    if (n < 1 || d < 0) throw std::invalid_argument("gen_random_regular: bad parameters");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw std::invalid_argument("gen_random_regular: n*d must be even");
    if (d >= n) throw std::invalid_argument("gen_random_regular: need d < n");
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::mt19937_64 rng = substream(seed, StreamTag::generation, static_cast<std::uint64_t>(attempt));
        std::vector<int> working = stubs;
        auto edges = pair_stubs(working, rng);
        if (pairing_is_simple(edges)) return Graph::from_edges(std::move(edges), n, false);
    }
    throw std::runtime_error("gen_random_regular: no simple pairing within the retry budget");
}

FixedSequenceResult gen_fixed_degree_sequence(std::span<const int> degrees, std::uint64_t seed) {
    std::int64_t total = 0;
    for (int d : degrees) {
        if (d < 0) throw std::invalid_argument("gen_fixed_degree_sequence: negative degree");
        total += d;
    }
    if (total % 2 != 0) throw std::invalid_argument("gen_fixed_degree_sequence: degree sum must be even");

    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(total));
    for (std::size_t v = 0; v < degrees.size(); ++v)
        for (int k = 0; k < degrees[v]; ++k) stubs.push_back(static_cast<int>(v));
    std::mt19937_64 rng = substream(seed, StreamTag::generation);
    auto edges = pair_stubs(stubs, rng);

    const Graph multi = Graph::from_edges(std::move(edges), static_cast<int>(degrees.size()), true);
    SimplifyResult simp = simplify(multi);
    FixedSequenceResult out;
    out.loops_removed = simp.loops_removed;
    out.multi_removed = simp.multi_removed;
    out.exact = simp.loops_removed == 0 && simp.multi_removed == 0;
    out.graph = std::move(simp.graph);
    return out;
}

Graph gen_havel_hakimi(std::span<const int> degrees) {
    const int n = static_cast<int>(degrees.size());
    std::vector<std::pair<int, int>> remaining;  // (residual degree, vertex)
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v) {
        if (degrees[static_cast<std::size_t>(v)] < 0 || degrees[static_cast<std::size_t>(v)] >= n)
            throw std::invalid_argument("gen_havel_hakimi: sequence not graphical");
        total += degrees[static_cast<std::size_t>(v)];
        remaining.emplace_back(degrees[static_cast<std::size_t>(v)], v);
    }
    if (total % 2 != 0) throw std::invalid_argument("gen_havel_hakimi: sequence not graphical");

    std::vector<std::pair<int, int>> edges;
    for (;;) {
        std::stable_sort(remaining.begin(), remaining.end(),
                         [](const auto& x, const auto& y) { return x.first > y.first; });
        if (remaining.empty() || remaining.front().first == 0) break;
        const auto [d, v] = remaining.front();
        remaining.erase(remaining.begin());
        if (d > static_cast<int>(remaining.size()))
            throw std::invalid_argument("gen_havel_hakimi: sequence not graphical");
        for (int k = 0; k < d; ++k) {
            auto& [dk, u] = remaining[static_cast<std::size_t>(k)];
            if (dk == 0) throw std::invalid_argument("gen_havel_hakimi: sequence not graphical");
            --dk;
            edges.emplace_back(std::min(v, u), std::max(v, u));
        }
    }
    return Graph::from_edges(std::move(edges), n, false);
}

}  // namespace modbound
