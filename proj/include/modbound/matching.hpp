#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modbound/graph.hpp"

namespace modbound {

/// strict follows the greedy construction verbatim (loop stops Delta^9 short
/// of the end, a missing candidate is a hard error). permissive extends the
/// loop over all vertices and simply leaves a vertex unmatched when its
/// window holds no valid partner; it exists for experiments where
/// Delta^9 >= n makes the strict guarantee void.
enum class MatchingMode { strict, permissive };

/// Which conflict structures candidate partners are screened against.
/// full_alternating materializes the distance-3 graph and excludes the whole
/// alternating-path family; distance_only excludes partners within graph
/// distance 3 and is the fallback when the distance-3 graph is too large to
/// build (dense permissive runs).
enum class ConflictScope { full_alternating, distance_only };

struct BandwidthMatching {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // v < w under the current ordering
    std::vector<int> mate;                   // -1 when unmatched
    VertexSet unmatched;
    std::int64_t bandwidth_observed = 0;
    std::int64_t delta9_budget = 0;
    MatchingMode mode = MatchingMode::strict;
    ConflictScope scope = ConflictScope::full_alternating;

    bool perfect() const { return unmatched.empty(); }
};

struct MatchStepRecord {
    int v = 0;
    std::int64_t f_size = 0;                 // |F_v|, both directions
    std::int64_t f_plus_union_m_plus = 0;    // |F_v^+ ∪ M_v^+|
};

struct MatchingTrace {
    std::int64_t delta_h = 0;  // max degree of the distance-3 graph
    std::int64_t delta9_budget = 0;
    std::vector<MatchStepRecord> steps;
};

struct MatchingOptions {
    MatchingMode mode = MatchingMode::strict;
    std::optional<ConflictScope> scope;  // default: full when Delta <= 16
    MatchingTrace* trace = nullptr;      // recorded only under full_alternating
};

/// Saturating Delta^9 window; 1 for Delta <= 1.
std::int64_t delta9_window(int delta);

/// Greedy bandwidth-bounded partial matching disjoint from E(G) with no
/// short loops. Vertices are taken in their current order; callers that
/// want a weight ordering relabel first.
BandwidthMatching greedy_matching(const Graph& g, const MatchingOptions& opts = {});

struct ShortLoopReport {
    bool walk_search_ok = true;        // direct closed-walk search over G
    bool alternating_cycles_ok = true;  // alternating H/M cycles of length 2, 4, 6
    bool disjoint_from_graph = true;
    std::string witness_kind;
    std::vector<int> witness;  // closed vertex walk for the first violation found

    bool pass() const { return walk_search_ok && alternating_cycles_ok && disjoint_from_graph; }
};

/// Exhaustive short-loop search: closed walks alternating G-runs of length
/// 1..3 with 1..3 distinct matching edges, plus the sufficient alternating
/// H/M cycle check. The two verdicts are computed by independent routes.
ShortLoopReport verify_no_short_loops(const Graph& g, const BandwidthMatching& m);

struct ClaimCheckReport {
    bool window_ok = true;   // |F_v^+ ∪ M_v^+| <= Delta^9 - 1
    bool sharper_ok = true;  // |F_v| <= dH + dH^2 + dH^3
    std::int64_t max_f_plus_union_m_plus = 0;
    std::int64_t max_f_size = 0;
    std::int64_t window_budget = 0;
    std::int64_t sharper_budget = 0;
    std::size_t steps_checked = 0;

    bool pass() const { return window_ok && sharper_ok; }
};

ClaimCheckReport claim_window_check(const Graph& g, const MatchingTrace& trace);

}  // namespace modbound
