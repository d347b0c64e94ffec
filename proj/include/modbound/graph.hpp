#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace modbound {

/// Subset of the vertex range [0, universe).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), bits_(static_cast<std::size_t>(universe), 0) {}
    VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    void insert(int v) {
        if (!bits_[static_cast<std::size_t>(v)]) {
            bits_[static_cast<std::size_t>(v)] = 1;
            ++count_;
        }
    }
    void erase(int v) {
        if (bits_[static_cast<std::size_t>(v)]) {
            bits_[static_cast<std::size_t>(v)] = 0;
            --count_;
        }
    }
    bool contains(int v) const {
        return v >= 0 && v < universe_ && bits_[static_cast<std::size_t>(v)] != 0;
    }

    int universe() const { return universe_; }
    std::int64_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count_));
        for (int v = 0; v < universe_; ++v)
            if (bits_[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    VertexSet complement() const {
        VertexSet s(universe_);
        for (int v = 0; v < universe_; ++v)
            if (!bits_[static_cast<std::size_t>(v)]) s.insert(v);
        return s;
    }

    bool disjoint_with(const VertexSet& other) const {
        const VertexSet& small = size() <= other.size() ? *this : other;
        const VertexSet& big = size() <= other.size() ? other : *this;
        for (int v = 0; v < small.universe_; ++v)
            if (small.bits_[static_cast<std::size_t>(v)] && big.contains(v)) return false;
        return true;
    }

private:
    int universe_ = 0;
    std::int64_t count_ = 0;
    std::vector<std::uint8_t> bits_;
};

struct DegreeStats {
    double dbar = 0.0;
    int delta_max = 0;
    int delta_min = 0;
    std::vector<std::int64_t> degree_histogram;  // index = degree value
};

/// Immutable sparse undirected (multi)graph. Loops contribute 2 to the
/// incident degree and 1 to the edge count m, so sum(deg) == 2m always.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Endpoints must lie in [0, n). In simple
    /// mode (allow_multi == false) loops and parallel edges are rejected.
    static Graph from_edges(std::vector<std::pair<int, int>> edges, int n, bool allow_multi = false);

    int n() const { return n_; }
    std::int64_t m() const { return static_cast<std::int64_t>(edges_.size()); }
    bool allows_multi() const { return allows_multi_; }
    std::int64_t loop_count() const { return loop_count_; }
    std::int64_t multi_edge_count() const { return multi_edge_count_; }
    bool is_simple() const { return loop_count_ == 0 && multi_edge_count_ == 0; }

    int degree(int v) const {
        return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)]);
    }
    std::span<const int> neighbors(int v) const {
        return {adjacency_.data() + offsets_[static_cast<std::size_t>(v)],
                adjacency_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }
    /// Normalized edge list (u <= v); each loop appears once.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int max_degree() const;
    int min_degree() const;
    double avg_degree() const { return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(m()) / n_; }
    std::vector<int> degrees() const;
    std::int64_t volume(const VertexSet& s) const;
    std::int64_t total_volume() const { return 2 * m(); }
    DegreeStats degree_stats() const;

private:
    int n_ = 0;
    bool allows_multi_ = false;
    std::int64_t loop_count_ = 0;
    std::int64_t multi_edge_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::int64_t> offsets_;
    std::vector<int> adjacency_;  // sorted per vertex; loops listed twice
};

struct SimplifyResult {
    Graph graph;
    std::int64_t loops_removed = 0;
    std::int64_t multi_removed = 0;
};

/// Drops loops and collapses parallel edge classes to single edges.
SimplifyResult simplify(const Graph& g);

/// Number of edges with one endpoint in a and the other in b. Throws if the
/// sets overlap.
std::int64_t cut(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Number of edges with both endpoints in a.
std::int64_t internal_edges(const Graph& g, const VertexSet& a);

/// Number of edges with exactly one endpoint in a.
std::int64_t boundary_edges(const Graph& g, const VertexSet& a);

/// The distance-<=3 graph H: u ~ v iff 0 < dist_g(u, v) <= 3. Requires a
/// simple input; satisfies Delta(H) <= Delta + Delta(Delta-1) + Delta(Delta-1)^2.
Graph power_graph_3(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;    // new id -> old id (ascending)
    std::vector<int> from_parent;  // old id -> new id, -1 outside
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Rebuilds g under the permutation new_id_of_old.
Graph relabel(const Graph& g, std::span<const int> new_id_of_old);

}  // namespace modbound
