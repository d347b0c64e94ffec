#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modbound/graph.hpp"
#include "modbound/matching.hpp"

namespace modbound {

/// Fixed constant of the bisection theorem, c = 3/(8*sqrt(2)) ~ 0.265.
inline const double kAlonConstant = 3.0 / (8.0 * std::sqrt(2.0));

/// (1/2) * sum_i d_i (1/2 - c/sqrt(d_i)); degree-0 terms contribute 0.
double cut_bound_rhs(std::span<const int> degrees);

struct BisectionResult {
    VertexSet u_side;
    std::int64_t cut_edges = 0;
    double bound_rhs = 0.0;
    int retries_used = 0;
    bool achieved = false;
};

struct AlonOptions {
    int max_retries = 500;
    bool verify = true;     // run the short-loop verifier before bisecting
    int fixup_rounds = 4;   // mark-active/resample passes per retry
};

/// Random-orientation bisection along a perfect matching: orient every
/// matching edge uniformly, mark an edge active when reorienting it would
/// not increase the cross-neighbour count of either endpoint, resample the
/// active edges, and keep the induced split. A single mark/resample pass
/// leaves part of the obtainable gain on the table, so the pass is applied
/// fixup_rounds times; the cut target is unchanged. Retries until the cut
/// meets cut_bound_rhs or the budget runs out; returns the best split seen.
BisectionResult alon_bisection(const Graph& g, const BandwidthMatching& m, std::uint64_t seed,
                               const AlonOptions& opts = {});

struct WeightBalancedResult {
    VertexSet a, b, r;
    double weight_imbalance = 0.0;
    std::int64_t cut_ab = 0;
    double cut_bound = 0.0;  // rhs over the degrees of G minus R
    bool achieved = false;
    int retries_used = 0;
    std::int64_t bandwidth = 0;
    std::int64_t delta9_budget = 0;
    double max_r_weight = 0.0;
    double mean_weight = 0.0;
    bool r_weight_ok = true;    // max_{v in R} w_v <= 2 * mean
    bool load_balance_ok = true;
    ConflictScope scope_used = ConflictScope::full_alternating;
    bool verify_ran = false;
};

struct WbpOptions {
    MatchingMode mode = MatchingMode::strict;
    int max_retries = 500;
    std::optional<bool> verify;  // default: on unless the matching ran distance_only
};

/// Sorts vertices by weight (non-increasing), builds the greedy matching in
/// that order, strips the unmatched remainder R, and bisects the rest along
/// the matching. Guarantees |A| = |B|; in strict mode R sits in the final
/// Delta^9 positions and max_{v in R} w_v <= 2 * mean weight.
WeightBalancedResult weight_balanced_partition(const Graph& g, std::span<const double> weights,
                                               std::uint64_t seed, const WbpOptions& opts = {});

struct LoadBalanceReport {
    double lhs = 0.0;
    double rhs = 0.0;
    std::int64_t bandwidth = 0;
    bool ok = true;
};

/// |sum_{(i,j) in M} f(i) - f(j)| <= bandwidth * |f(n-1) - f(0)| for a
/// non-increasing f and any orientation (orientation[k] flips pair k).
LoadBalanceReport load_balance_check(std::span<const double> weights, const BandwidthMatching& m,
                                     std::span<const std::uint8_t> orientation);

}  // namespace modbound
