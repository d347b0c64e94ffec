#pragma once

#include <cstdint>
#include <vector>

#include "modbound/graph.hpp"

namespace modbound {

/// Total assignment of vertices to parts 0..k-1; every part nonempty.
struct Partition {
    std::vector<int> part_of;
    int k = 0;

    static Partition single_part(int n);
    static Partition all_singletons(int n);
    /// Two parts: a and its complement. a must be a proper nonempty subset.
    static Partition two_part(const VertexSet& a);
    /// {a, b, r} partition; r may be empty (then two parts).
    static Partition three_part(const VertexSet& a, const VertexSet& b, const VertexSet& r);

    int n() const { return static_cast<int>(part_of.size()); }
    void validate() const;  // throws when some part id in [0,k) is empty or out of range
};

struct ScoreBreakdown {
    double coverage = 0.0;
    double degree_tax = 0.0;
    double q = 0.0;
};

struct PartAggregates {
    std::int64_t size = 0;
    std::int64_t volume = 0;
    std::int64_t internal_edges = 0;
};

/// Modularity score q = sum_A [ e(A)/m - (Vol(A)/2m)^2 ]. Aggregates are
/// exact integers; the division happens once at the end. Requires a simple
/// graph with m >= 1.
ScoreBreakdown score(const Graph& g, const Partition& p);

std::vector<PartAggregates> part_aggregates(const Graph& g, const Partition& p);

/// q of the bipartition {A, A^c} via the two-part identity
/// 1/2 - e(A,B)/m - (Vol(A)-Vol(B))^2 / (8 m^2).
double two_part_score(const Graph& g, const VertexSet& a);

struct NearlyBisectionBound {
    double lower_bound = 0.0;
    double actual_q = 0.0;
};

/// Lower bound 1/2 - (e(A,B) + boundary(R))/e(G) - (Vol(A)-Vol(B))^2 / (2 Vol(G)^2)
/// for a partition {a, b, r} with Vol(r) <= Vol(G)/3 (throws otherwise),
/// together with the exact score of that partition. All cross-part edges are
/// charged, including the ones leaving R; with only e(A,B) charged the
/// inequality is false (C6 with {0,1,2}, {3,4}, {5} is a counterexample).
/// For empty R this is the two-part identity with the 2*Vol(G)^2 tax
/// denominator.
NearlyBisectionBound nearly_bisection_lower_bound(const Graph& g, const VertexSet& a,
                                                  const VertexSet& b, const VertexSet& r);

struct OracleResult {
    double qstar = 0.0;
    Partition best;
};

/// Exact maximum of q over all set partitions, by restricted-growth-string
/// enumeration with incremental aggregates. n <= 12.
OracleResult brute_force_qstar(const Graph& g);

struct RobustnessGap {
    double gap = 0.0;     // |q*(g) - q*(h)|
    double budget = 0.0;  // 2 * edits / e(g)
    std::int64_t edits = 0;
};

/// h must be obtained from g by edge deletions only; both at oracle scale.
RobustnessGap robustness_gap(const Graph& g, const Graph& h);

}  // namespace modbound
