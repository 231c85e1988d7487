#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "orient/domination.hpp"
#include "orient/graph.hpp"

namespace orient {

using Arc = std::pair<int, int>;  // (tail, head)

/// An assignment of a direction to every edge of a base graph.
class Orientation {
  public:
    Orientation() = default;

    /// dir[i] == false: edges()[i] directed first->second; true: reversed.
    Orientation(UndirectedGraph base, std::vector<bool> dir)
        : base_(std::move(base)), dir_(std::move(dir)) {
        detail::check(static_cast<int>(dir_.size()) == base_.m(),
                      "direction vector must cover every edge");
        rebuild();
    }

    static Orientation from_arcs(const UndirectedGraph& base,
                                 const std::vector<Arc>& arcs) {
        std::vector<bool> dir(base.m(), false);
        std::vector<bool> seen(base.m(), false);
        for (const auto& [t, h] : arcs) {
            int i = base.edge_index(t, h);
            if (i < 0) throw std::invalid_argument("arc is not an edge of the base graph");
            if (seen[i]) throw std::invalid_argument("edge directed twice");
            seen[i] = true;
            dir[i] = (t > h);
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            throw std::invalid_argument("some edge was left undirected");
        return Orientation(base, std::move(dir));
    }

    const UndirectedGraph& base() const { return base_; }
    int n() const { return base_.n(); }
    int tail(int edge) const { return dir_[edge] ? base_.edges()[edge].second : base_.edges()[edge].first; }
    int head(int edge) const { return dir_[edge] ? base_.edges()[edge].first : base_.edges()[edge].second; }
    const std::vector<bool>& dir() const { return dir_; }
    const std::vector<std::vector<int>>& out() const { return out_; }
    const std::vector<std::vector<int>>& in() const { return in_; }

    std::vector<Arc> arcs() const {
        std::vector<Arc> a;
        a.reserve(base_.m());
        for (int i = 0; i < base_.m(); ++i) a.push_back({tail(i), head(i)});
        return a;
    }

    bool has_arc(int t, int h) const {
        int i = base_.edge_index(t, h);
        return i >= 0 && tail(i) == t;
    }

    Orientation reversed() const {
        std::vector<bool> d = dir_;
        d.flip();
        return Orientation(base_, std::move(d));
    }

  private:
    void rebuild() {
        out_.assign(base_.n(), {});
        in_.assign(base_.n(), {});
        for (int i = 0; i < base_.m(); ++i) {
            out_[tail(i)].push_back(head(i));
            in_[head(i)].push_back(tail(i));
        }
        for (auto& a : out_) std::sort(a.begin(), a.end());
        for (auto& a : in_) std::sort(a.begin(), a.end());
    }

    UndirectedGraph base_;
    std::vector<bool> dir_;
    std::vector<std::vector<int>> out_, in_;
};

inline std::vector<int> directed_distances(const Orientation& h, int src) {
    std::vector<int> dist(h.n(), kUnreachable);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : h.out()[u]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

inline bool is_strongly_connected(const Orientation& h) {
    if (h.n() <= 1) return true;
    auto reach = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<bool> seen(h.n(), false);
        std::queue<int> q;
        seen[0] = true;
        q.push(0);
        int count = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u])
                if (!seen[w]) { seen[w] = true; ++count; q.push(w); }
        }
        return count == h.n();
    };
    return reach(h.out()) && reach(h.in());
}

/// Strong orientation by depth-first search: tree edges root-to-leaf, non-tree
/// edges descendant-to-ancestor. Deterministic (ascending neighbor order).
inline Orientation robbins_orient(const UndirectedGraph& g) {
    if (!is_connected(g)) throw NotConnectedError();
    auto bridges = detail::lowpoint_scan(g).bridges;
    if (!bridges.empty()) throw HasBridgeError(std::move(bridges));

    std::vector<int> disc(g.n(), -1);
    std::vector<bool> dir(g.m(), false), assigned(g.m(), false);
    int timer = 0;
    std::vector<std::pair<int, size_t>> stack;
    if (g.n() > 0) {
        disc[0] = timer++;
        stack.push_back({0, 0});
    }
    while (!stack.empty()) {
        auto& [u, i] = stack.back();
        if (i >= g.neighbors(u).size()) {
            stack.pop_back();
            continue;
        }
        int w = g.neighbors(u)[i++];
        int e = g.edge_index(u, w);
        if (assigned[e]) continue;
        assigned[e] = true;
        if (disc[w] == -1) {
            disc[w] = timer++;
            dir[e] = (g.edges()[e].first != u);  // tree edge u -> w
            stack.push_back({w, 0});
        } else {
            dir[e] = (g.edges()[e].first != u);  // back edge u -> ancestor w
        }
    }
    Orientation h(g, std::move(dir));
    detail::check(is_strongly_connected(h), "robbins orientation must be strong");
    return h;
}

constexpr int kNoPairs = -1;  // profile class with no ordered pairs

/// (diam, diam_0, diam_1, diam_2): maxima of directed distances over ordered
/// pairs grouped by how many endpoints lie outside the dominating set.
struct DiameterProfile {
    int diam = 0;
    int diam0 = kNoPairs;
    int diam1 = kNoPairs;
    int diam2 = kNoPairs;

    bool operator==(const DiameterProfile&) const = default;
};

inline DiameterProfile diam_profile(const Orientation& h, const std::vector<int>& dset) {
    if (!is_strongly_connected(h)) throw NotStrongError();
    std::vector<bool> outside(h.n(), true);
    for (int v : dset) outside[v] = false;
    DiameterProfile p;
    for (int u = 0; u < h.n(); ++u) {
        auto dist = directed_distances(h, u);
        for (int v = 0; v < h.n(); ++v) {
            int cls = (outside[u] ? 1 : 0) + (outside[v] ? 1 : 0);
            int* slot = cls == 0 ? &p.diam0 : cls == 1 ? &p.diam1 : &p.diam2;
            *slot = std::max(*slot, dist[v]);
            p.diam = std::max(p.diam, dist[v]);
        }
    }
    return p;
}

/// max{diam0+4, diam1+2, diam2} with absent classes skipped: the bound the
/// subgraph-extension construction guarantees for the full graph.
inline int extension_bound(const DiameterProfile& p) {
    int b = 0;
    if (p.diam0 != kNoPairs) b = std::max(b, p.diam0 + 4);
    if (p.diam1 != kNoPairs) b = std::max(b, p.diam1 + 2);
    if (p.diam2 != kNoPairs) b = std::max(b, p.diam2);
    return b;
}

/// Reverses a directed cycle given as a list of arcs (closed, edge-distinct).
inline Orientation reverse_cycle(const Orientation& h, const std::vector<Arc>& cycle) {
    if (!is_strongly_connected(h)) throw NotStrongError();
    if (cycle.empty()) throw NotACycleError();
    std::vector<bool> used(h.base().m(), false);
    for (size_t i = 0; i < cycle.size(); ++i) {
        const auto& [t, head] = cycle[i];
        if (!h.has_arc(t, head)) throw NotACycleError();
        int e = h.base().edge_index(t, head);
        if (used[e]) throw NotACycleError();
        used[e] = true;
        if (cycle[(i + 1) % cycle.size()].first != head) throw NotACycleError();
    }
    std::vector<bool> dir = h.dir();
    for (const auto& [t, head] : cycle) dir[h.base().edge_index(t, head)].flip();
    Orientation out(h.base(), std::move(dir));
    detail::check(is_strongly_connected(out), "cycle reversal must stay strong");
    return out;
}

/// Reverses a directed x->y path, provided a second edge-disjoint directed
/// x->y path exists in h.
inline Orientation reverse_path(const Orientation& h, const std::vector<Arc>& path) {
    if (!is_strongly_connected(h)) throw NotStrongError();
    if (path.empty()) throw NotAPathError();
    std::vector<bool> used(h.base().m(), false);
    for (size_t i = 0; i < path.size(); ++i) {
        const auto& [t, head] = path[i];
        if (!h.has_arc(t, head)) throw NotAPathError();
        int e = h.base().edge_index(t, head);
        if (used[e]) throw NotAPathError();
        used[e] = true;
        if (i + 1 < path.size() && path[i + 1].first != head) throw NotAPathError();
    }
    int x = path.front().first, y = path.back().second;
    // BFS from x to y avoiding the path's edges.
    std::vector<bool> seen(h.n(), false);
    std::queue<int> q;
    seen[x] = true;
    q.push(x);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : h.out()[u]) {
            if (used[h.base().edge_index(u, w)]) continue;
            if (!seen[w]) { seen[w] = true; q.push(w); }
        }
    }
    if (!seen[y]) throw NotAPathError();
    std::vector<bool> dir = h.dir();
    for (const auto& [t, head] : path) dir[h.base().edge_index(t, head)].flip();
    Orientation out(h.base(), std::move(dir));
    detail::check(is_strongly_connected(out), "path reversal must stay strong");
    return out;
}

inline Orientation reverse_all(const Orientation& h) { return h.reversed(); }

}  // namespace orient
