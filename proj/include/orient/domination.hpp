#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

constexpr int kExactDominationLimit = 32;

inline bool is_dominating_set(const UndirectedGraph& g, const std::vector<int>& dset) {
    std::vector<bool> in(g.n(), false);
    for (int v : dset) in[v] = true;
    for (int v = 0; v < g.n(); ++v) {
        if (in[v]) continue;
        bool covered = false;
        for (int w : g.neighbors(v))
            if (in[w]) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

enum class DominationMode { kExact, kGreedy };

namespace detail {

inline std::vector<int> greedy_dominating_set(const UndirectedGraph& g) {
    int n = g.n();
    std::vector<bool> covered(n, false), chosen(n, false);
    int left = n;
    std::vector<int> out;
    while (left > 0) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            if (chosen[v]) continue;
            int gain = covered[v] ? 0 : 1;
            for (int w : g.neighbors(v)) gain += covered[w] ? 0 : 1;
            if (gain > best_gain) { best_gain = gain; best = v; }
        }
        chosen[best] = true;
        out.push_back(best);
        if (!covered[best]) { covered[best] = true; --left; }
        for (int w : g.neighbors(best))
            if (!covered[w]) { covered[w] = true; --left; }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Branch and bound over closed-neighborhood bitmasks. Branches on the lowest
// undominated vertex; candidates in ascending id order, so the first optimum
// found is the canonical one.
struct DominationSearch {
    int n;
    std::vector<uint64_t> closed;
    uint64_t all;
    std::vector<int> best;
    std::vector<int> cur;
    int max_closed_bits = 1;

    void run(uint64_t covered) {
        if (cur.size() + 1 >= best.size()) return;  // can't strictly improve
        if (covered == all) {
            best = cur;
            return;
        }
        int remaining = n - std::popcount(covered);
        int lb = (remaining + max_closed_bits - 1) / max_closed_bits;
        if (cur.size() + lb >= best.size()) return;
        int v = std::countr_zero(~covered & all);
        // Some chosen vertex must dominate v: try each of N[v].
        for (int c = 0; c < n; ++c) {
            if (!((closed[v] >> c) & 1)) continue;
            cur.push_back(c);
            run(covered | closed[c]);
            cur.pop_back();
        }
    }
};

}  // namespace detail

/// Minimum (exact) or maximal-coverage-first (greedy) dominating set.
/// Exact mode is limited to graphs with at most `limit` vertices.
inline std::vector<int> min_dominating_set(const UndirectedGraph& g,
                                           DominationMode mode,
                                           int limit = kExactDominationLimit) {
    if (g.n() == 0) return {};
    if (mode == DominationMode::kGreedy) return detail::greedy_dominating_set(g);
    if (g.n() > limit)
        throw TooLargeError("exact domination limited to " + std::to_string(limit) +
                            " vertices, got " + std::to_string(g.n()));
    detail::DominationSearch s;
    s.n = g.n();
    s.closed.assign(s.n, 0);
    for (int v = 0; v < s.n; ++v) {
        s.closed[v] = uint64_t{1} << v;
        for (int w : g.neighbors(v)) s.closed[v] |= uint64_t{1} << w;
        s.max_closed_bits = std::max(s.max_closed_bits, std::popcount(s.closed[v]));
    }
    s.all = s.n == 64 ? ~uint64_t{0} : (uint64_t{1} << s.n) - 1;
    s.best = detail::greedy_dominating_set(g);
    s.run(0);
    std::sort(s.best.begin(), s.best.end());
    return s.best;
}

/// A graph bundled with a dominating set and, where defined, the map sending
/// each outside vertex to its unique dominator neighbor (-1 elsewhere).
struct DominatedPair {
    UndirectedGraph graph;
    std::vector<int> dset;  // sorted
    std::vector<int> fmap;  // size n; -1 for dominators and ambiguous vertices

    bool in_dset(int v) const {
        return std::binary_search(dset.begin(), dset.end(), v);
    }
};

/// Builds a DominatedPair, computing fmap entries wherever the dominator
/// neighbor is unique. Throws NotDominatingError if dset does not dominate.
inline DominatedPair make_dominated_pair(UndirectedGraph g, std::vector<int> dset) {
    std::sort(dset.begin(), dset.end());
    dset.erase(std::unique(dset.begin(), dset.end()), dset.end());
    if (!is_dominating_set(g, dset)) throw NotDominatingError();
    DominatedPair p;
    p.fmap.assign(g.n(), -1);
    std::vector<bool> in(g.n(), false);
    for (int v : dset) in[v] = true;
    for (int v = 0; v < g.n(); ++v) {
        if (in[v]) continue;
        int dom = -1, count = 0;
        for (int w : g.neighbors(v)) {
            if (in[w]) { dom = w; ++count; }
        }
        if (count == 1) p.fmap[v] = dom;
    }
    p.graph = std::move(g);
    p.dset = std::move(dset);
    return p;
}

}  // namespace orient
