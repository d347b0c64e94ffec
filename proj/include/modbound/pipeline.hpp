#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modbound/bisection.hpp"
#include "modbound/graph.hpp"
#include "modbound/modularity.hpp"

namespace modbound {

struct PipelineDiagnostics {
    std::string route;
    double C = 0.0;
    double gamma = 0.0;
    double theta = 0.0;
    std::int64_t cut = 0;
    double cut_bound = 0.0;
    double vol_imbalance = 0.0;
    int retries = 0;
    int outer_retries = 0;
    bool bisection_achieved = false;
    std::int64_t size_a = 0, size_b = 0, size_r = 0, size_u = 0;
    std::int64_t bandwidth = 0;
    bool verify_ran = false;
};

struct PipelineResult {
    Partition final_partition;
    ScoreBreakdown achieved;  // q_achieved = achieved.q, recomputed from the partition
    double theoretical_bound = 0.0;
    bool bound_vacuous = false;
    PipelineDiagnostics diagnostics;
};

struct PipelineOptions {
    MatchingMode mode = MatchingMode::strict;
    int bisection_retries = 500;
    int outer_retries = 50;  // high-degree redraws on the bulk route
};

/// Max-degree-bounded route: degree-weighted balanced bisection of the whole
/// graph, scored as the three-part partition {A, B, R}. Strict mode requires
/// Delta^9 in [1, n/6).
PipelineResult partition_no_cutoff(const Graph& g, std::uint64_t seed, const PipelineOptions& opts = {});

struct BulkSplit {
    VertexSet low, high;   // L = {v : d_v < C*dbar}, H = complement
    double gamma = 0.0;    // Vol(L)/m - 1, reported as-is (may be <= 0)
    double theta = 0.0;    // (C*dbar)^10 / n
    bool theta_ok = false; // theta < (1/2)(1 - 1/C)
    double cutoff = 0.0;   // C*dbar
};

BulkSplit split_bulk(const Graph& g, double C);

struct HighDegreeAssignment {
    std::vector<std::pair<int, int>> u_plus_pairs;  // consecutive in degree order
    VertexSet u_minus;
    std::optional<int> nu;  // leftover degree >= sqrt(n) vertex parked in U^-
    VertexSet side_a, side_b;
    std::int64_t pairs_in_graph = 0;  // |E(g) ∩ pairs|
};

/// U+ = degree >= sqrt(n) vertices of u, trimmed to even size; pairs formed
/// 1st-2nd, 3rd-4th, ... by descending degree and split across sides; the
/// rest of u assigned independently uniformly.
HighDegreeAssignment assign_high_degree(const Graph& g, const VertexSet& u, std::uint64_t seed);

/// Bulk + high-degree route: balanced bisection of G[L] with the degrees
/// inside G[L] as weights, then best-of-k random placement of H ∪ R.
PipelineResult partition_bulk_split(const Graph& g, double C, std::uint64_t seed,
                                    const PipelineOptions& opts = {});

struct FiveTerms {
    double edge_gain = 0.0;
    double ab_imbalance_tax = 0.0;
    double u_cross = 0.0;
    double mixed_volume = 0.0;
    double u_imbalance_tax = 0.0;
    double sum() const { return edge_gain + ab_imbalance_tax + u_cross + mixed_volume + u_imbalance_tax; }
};

/// Decomposition of the two-part score of {A ∪ U_A, B ∪ U_B}; the five terms
/// sum to two_part_score exactly (up to float error).
FiveTerms five_term_decomposition(const Graph& g, const VertexSet& a, const VertexSet& b,
                                  const VertexSet& ua, const VertexSet& ub);

}  // namespace modbound
