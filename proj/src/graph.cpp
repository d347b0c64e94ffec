#include "modbound/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modbound {

Graph Graph::from_edges(std::vector<std::pair<int, int>> edges, int n, bool allow_multi) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") with n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());

    std::int64_t loops = 0, multi = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first == edges[i].second) ++loops;
        else if (i > 0 && edges[i] == edges[i - 1]) ++multi;
    }
    if (!allow_multi) {
        if (loops > 0) throw std::invalid_argument("loop edge rejected in simple mode");
        if (multi > 0) throw std::invalid_argument("parallel edge rejected in simple mode");
    }

    Graph g;
    g.n_ = n;
    g.allows_multi_ = allow_multi;
    g.loop_count_ = loops;
    g.multi_edge_count_ = multi;
    g.edges_ = std::move(edges);

    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];  // loop counted twice at one vertex
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[static_cast<std::size_t>(v) + 1] = g.offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    g.adjacency_.resize(static_cast<std::size_t>(g.offsets_[static_cast<std::size_t>(n)]));
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
        g.adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto first = g.adjacency_.begin() + g.offsets_[static_cast<std::size_t>(v)];
        auto last = g.adjacency_.begin() + g.offsets_[static_cast<std::size_t>(v) + 1];
        std::sort(first, last);
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
    return out;
}

std::int64_t Graph::volume(const VertexSet& s) const {
    std::int64_t vol = 0;
    for (int v = 0; v < n_; ++v)
        if (s.contains(v)) vol += degree(v);
    return vol;
}

DegreeStats Graph::degree_stats() const {
    DegreeStats st;
    st.delta_max = max_degree();
    st.delta_min = min_degree();
    st.dbar = avg_degree();
    st.degree_histogram.assign(static_cast<std::size_t>(st.delta_max) + 1, 0);
    for (int v = 0; v < n_; ++v) ++st.degree_histogram[static_cast<std::size_t>(degree(v))];
    return st;
}

SimplifyResult simplify(const Graph& g) {
    std::vector<std::pair<int, int>> kept;
    kept.reserve(g.edges().size());
    SimplifyResult res;
    for (const auto& e : g.edges()) {
        if (e.first == e.second) {
            ++res.loops_removed;
        } else if (!kept.empty() && kept.back() == e) {
            ++res.multi_removed;  // edges() is sorted, so parallels are adjacent
        } else {
            kept.push_back(e);
        }
    }
    res.graph = Graph::from_edges(std::move(kept), g.n(), false);
    return res;
}

std::int64_t cut(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (!a.disjoint_with(b)) throw std::invalid_argument("cut: vertex sets overlap");
    std::int64_t c = 0;
    for (const auto& [u, v] : g.edges()) {
        const bool ua = a.contains(u), ub = b.contains(u);
        const bool va = a.contains(v), vb = b.contains(v);
        if ((ua && vb) || (ub && va)) ++c;
    }
    return c;
}

std::int64_t internal_edges(const Graph& g, const VertexSet& a) {
    std::int64_t c = 0;
    for (const auto& [u, v] : g.edges())
        if (a.contains(u) && a.contains(v)) ++c;
    return c;
}

std::int64_t boundary_edges(const Graph& g, const VertexSet& a) {
    std::int64_t c = 0;
    for (const auto& [u, v] : g.edges())
        if (a.contains(u) != a.contains(v)) ++c;
    return c;
}

Graph power_graph_3(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("power_graph_3 requires a simple graph");
    const int n = g.n();
    std::vector<std::pair<int, int>> h_edges;
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    std::vector<int> frontier, next;
    for (int v = 0; v < n; ++v) {
        stamp[static_cast<std::size_t>(v)] = v;
        frontier.assign(1, v);
        for (int depth = 0; depth < 3; ++depth) {
            next.clear();
            for (int x : frontier) {
                for (int y : g.neighbors(x)) {
                    if (stamp[static_cast<std::size_t>(y)] != v) {
                        stamp[static_cast<std::size_t>(y)] = v;
                        next.push_back(y);
                        if (v < y) h_edges.emplace_back(v, y);
                    }
                }
            }
            frontier.swap(next);
        }
    }
    return Graph::from_edges(std::move(h_edges), n, false);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    InducedSubgraph out;
    out.to_parent = s.members();
    out.from_parent.assign(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.from_parent[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        const int nu = out.from_parent[static_cast<std::size_t>(u)];
        const int nv = out.from_parent[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
    }
    out.graph = Graph::from_edges(std::move(edges), static_cast<int>(out.to_parent.size()), g.allows_multi());
    return out;
}

Graph relabel(const Graph& g, std::span<const int> new_id_of_old) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(new_id_of_old[static_cast<std::size_t>(u)], new_id_of_old[static_cast<std::size_t>(v)]);
    return Graph::from_edges(std::move(edges), g.n(), g.allows_multi());
}

}  // namespace modbound
