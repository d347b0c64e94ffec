#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modbound/graph.hpp"

namespace modbound {

/// Binomial random graph: each unordered pair is an edge independently with
/// probability p. Linear-time skip sampling.
Graph gen_gnp(int n, double p, std::uint64_t seed);

struct ChungLuWeights {
    std::vector<double> w;

    double wbar() const;
    double wmin() const;
    double wmax() const;
    double total() const;
    /// Requires w_v > 0 and max w_v^2 <= wbar * n (keeps every p_uv <= 1).
    void validate() const;
};

/// Independent edges with p_uv = w_u w_v / (wbar n), no loops.
Graph gen_chung_lu(const ChungLuWeights& weights, std::uint64_t seed);

struct PamParams {
    int m = 1;
    double delta = 0.0;
    int n = 1;

    double tau() const { return 3.0 + delta / m; }
    void validate() const;  // m >= 1, -m < delta < m, n >= 1
};

/// Preferential attachment multigraph with n vertices and exactly m*n edges,
/// built by the collapsing construction: the m=1 chain with delta/m run for
/// m*n steps, then consecutive blocks of m vertices merged. The first vertex
/// carries m loops; intermediate steps may create loops and parallel edges.
Graph gen_pam(const PamParams& params, std::uint64_t seed);

Graph gen_complete_bipartite(int a, int b);

/// Exactly d-regular simple graph via configuration-model pairing with
/// whole-sample rejection on loops/parallels.
Graph gen_random_regular(int n, int d, std::uint64_t seed, int max_attempts = 50);

struct FixedSequenceResult {
    Graph graph;
    std::int64_t loops_removed = 0;
    std::int64_t multi_removed = 0;
    bool exact = false;  // realized degrees equal the request
};

/// One configuration-model pairing followed by simplify(); reports how far
/// the realized degrees drifted.
FixedSequenceResult gen_fixed_degree_sequence(std::span<const int> degrees, std::uint64_t seed);

/// Deterministic simple realization; throws when the sequence is not
/// graphical.
Graph gen_havel_hakimi(std::span<const int> degrees);

}  // namespace modbound
