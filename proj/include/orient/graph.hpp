#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "orient/errors.hpp"

namespace orient {

using VertexId = int;
using Edge = std::pair<int, int>;  // normalized u < v

constexpr int kUnreachable = -1;  // distance sentinel; never used in arithmetic

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Edges are stored normalized (u < v) and sorted; adjacency lists are sorted.
class UndirectedGraph {
  public:
    UndirectedGraph() = default;

    static UndirectedGraph from_edges(int n, std::vector<Edge> edges) {
        UndirectedGraph g;
        g.n_ = n;
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("self-loop");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("vertex id out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("parallel edge");
        g.edges_ = std::move(edges);
        g.adj_.assign(n, {});
        for (const auto& [u, v] : g.edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& a : g.adj_) std::sort(a.begin(), a.end());
        return g;
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Index of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const {
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const UndirectedGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Shortest-path hop distances from src; kUnreachable where there is no path.
inline std::vector<int> bfs_distances(const UndirectedGraph& g, int src) {
    std::vector<int> dist(g.n(), kUnreachable);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

inline bool is_connected(const UndirectedGraph& g) {
    if (g.n() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d == kUnreachable; });
}

/// Maximum undirected eccentricity; kUnreachable if disconnected.
inline int undirected_diameter(const UndirectedGraph& g) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        for (int d : bfs_distances(g, v)) {
            if (d == kUnreachable) return kUnreachable;
            best = std::max(best, d);
        }
    }
    return best;
}

namespace detail {

// Shared lowpoint DFS for bridges and cut vertices (iterative; id order).
struct LowpointResult {
    std::vector<Edge> bridges;
    std::vector<int> cut_vertices;
};

inline LowpointResult lowpoint_scan(const UndirectedGraph& g) {
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<bool> is_cut(n, false);
    LowpointResult out;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        // stack holds (vertex, index into adjacency)
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < g.neighbors(u).size()) {
                int w = g.neighbors(u)[i++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    ++child_count[u];
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p]) out.bridges.push_back(make_edge(p, u));
                    if (parent[p] != -1 && low[u] >= disc[p]) is_cut[p] = true;
                }
            }
        }
        if (child_count[root] >= 2) is_cut[root] = true;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

}  // namespace detail

/// Edges whose removal disconnects g. Requires g connected.
inline std::vector<Edge> find_bridges(const UndirectedGraph& g) {
    if (!is_connected(g)) throw NotConnectedError();
    return detail::lowpoint_scan(g).bridges;
}

inline bool is_bridgeless(const UndirectedGraph& g) {
    return is_connected(g) && detail::lowpoint_scan(g).bridges.empty();
}

/// Vertices whose removal disconnects g. Requires g connected.
inline std::vector<int> find_cut_vertices(const UndirectedGraph& g) {
    if (!is_connected(g)) throw NotConnectedError();
    return detail::lowpoint_scan(g).cut_vertices;
}

/// Connected components of g minus `removed`, each sorted, ordered by minimum
/// element.
inline std::vector<std::vector<int>> connected_components_without(
    const UndirectedGraph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(g.n(), false);
    for (int v : removed) gone[v] = true;
    std::vector<bool> seen(g.n(), false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.n(); ++s) {
        if (gone[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!gone[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // BFS from ascending roots already yields components ordered by min element.
    return comps;
}

/// Induced subgraph on `vertices` (sorted, deduplicated); second result maps
/// new dense ids back to host ids.
inline std::pair<UndirectedGraph, std::vector<int>> induced_subgraph(
    const UndirectedGraph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (local[u] != -1 && local[v] != -1)
            edges.push_back(make_edge(local[u], local[v]));
    return {UndirectedGraph::from_edges(static_cast<int>(vertices.size()), std::move(edges)),
            std::move(vertices)};
}

inline UndirectedGraph remove_edge(const UndirectedGraph& g, int u, int v) {
    std::vector<Edge> edges;
    edges.reserve(g.m());
    Edge gone = make_edge(u, v);
    for (const auto& e : g.edges())
        if (e != gone) edges.push_back(e);
    return UndirectedGraph::from_edges(g.n(), std::move(edges));
}

}  // namespace orient
