#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orient/orientation.hpp"

namespace orient {

constexpr int kOracleEdgeLimit = 26;

struct OracleResult {
    int value = 0;
    Orientation witness;
    bool exact = true;  // false when a budget cut the search short
};

namespace detail {

// Branch and bound over edge directions. Edges are ordered DFS-tree first,
// then back edges; the first branch of every edge is its robbins direction,
// so the first completed leaf is the robbins orientation and pruning has a
// strong incumbent immediately. The reported witness is the first leaf in
// this canonical branch order attaining the final value, which makes results
// reproducible and independent of the number of worker threads.
class OrientationSearch {
  public:
    OrientationSearch(const UndirectedGraph& g, const Orientation& robbins)
        : g_(g), n_(g.n()), m_(g.m()) {
        order_.reserve(m_);
        preferred_tail_.assign(m_, -1);
        std::vector<int> disc(n_, -1);
        std::vector<int> back;
        int timer = 0;
        std::vector<std::pair<int, size_t>> stack{{0, 0}};
        std::vector<bool> seen_edge(m_, false);
        disc[0] = timer++;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i >= g.neighbors(u).size()) { stack.pop_back(); continue; }
            int w = g.neighbors(u)[i++];
            int e = g.edge_index(u, w);
            if (seen_edge[e]) continue;
            seen_edge[e] = true;
            if (disc[w] == -1) {
                disc[w] = timer++;
                order_.push_back(e);
                stack.push_back({w, 0});
            } else {
                back.push_back(e);
            }
        }
        order_.insert(order_.end(), back.begin(), back.end());
        for (int e = 0; e < m_; ++e) preferred_tail_[e] = robbins.tail(e);

        inc_.assign(n_, {});
        for (int e = 0; e < m_; ++e) {
            inc_[g.edges()[e].first].push_back(e);
            inc_[g.edges()[e].second].push_back(e);
        }
        assign_.assign(m_, -1);
        in_possible_.assign(n_, 0);
        out_possible_.assign(n_, 0);
        for (int v = 0; v < n_; ++v)
            in_possible_[v] = out_possible_[v] = static_cast<int>(inc_[v].size());
        dist_.assign(n_, 0);
        queue_.assign(n_, 0);
        global_floor_ = undirected_diameter(g);
    }

    // best_limit: prune anything >= best_limit. stop_at: finish as soon as a
    // leaf with value <= stop_at is recorded. shared_best: optional cross-
    // worker incumbent (monotonically tightening).
    void run(int best_limit, int stop_at, std::atomic<int>* shared_best) {
        best_ = best_limit;
        stop_at_ = stop_at;
        shared_best_ = shared_best;
        stopped_ = false;
        descend(0);
    }

    // Applies the first `k` canonical choices given by the bits of `prefix`
    // (bit i = choice for order_[i]); returns false if pruned outright.
    bool apply_prefix(int k, unsigned prefix) {
        for (int i = 0; i < k; ++i) {
            int e = order_[i];
            set_edge(e, ((prefix >> i) & 1u) == 0u);
            if (!prune_ok(i + 1)) return false;
        }
        prefix_ = k;
        return true;
    }

    void run_suffix(int best_limit, std::atomic<int>* shared_best) {
        best_ = best_limit;
        stop_at_ = -1;
        shared_best_ = shared_best;
        stopped_ = false;
        descend(prefix_);
    }

    bool found() const { return !best_assign_.empty(); }
    int best() const { return best_; }

    // True when the reported value is certainly the minimum: either the
    // search space was exhausted or the value meets the undirected-diameter
    // floor.
    bool proved_optimal() const { return !stopped_ || best_ <= global_floor_; }

    Orientation witness(const UndirectedGraph& g) const {
        std::vector<bool> dir(m_);
        for (int e = 0; e < m_; ++e) {
            int tail = best_assign_[e] == 0 ? g.edges()[e].first : g.edges()[e].second;
            dir[e] = (tail != g.edges()[e].first);
        }
        return Orientation(g, std::move(dir));
    }

  private:
    void set_edge(int e, bool preferred) {
        int a = g_.edges()[e].first, b = g_.edges()[e].second;
        int tail = preferred ? preferred_tail_[e] : (preferred_tail_[e] == a ? b : a);
        assign_[e] = (tail == a) ? 0 : 1;
        // The edge can no longer serve as an in-arc of its tail nor an
        // out-arc of its head.
        --in_possible_[tail];
        --out_possible_[tail == a ? b : a];
    }

    void unset_edge(int e) {
        int a = g_.edges()[e].first, b = g_.edges()[e].second;
        int tail = assign_[e] == 0 ? a : b;
        ++in_possible_[tail];
        ++out_possible_[tail == a ? b : a];
        assign_[e] = -1;
    }

    bool prune_ok(int depth) {
        if (n_ >= 2) {
            for (int v = 0; v < n_; ++v)
                if (in_possible_[v] == 0 || out_possible_[v] == 0) return false;
        }
        int lb = mixed_bound();
        if (lb == kUnreachable) return false;
        (void)depth;
        return lb < current_best();
    }

    int current_best() {
        if (shared_best_) {
            int global = shared_best_->load(std::memory_order_relaxed);
            if (global < best_) best_ = global;
        }
        return best_;
    }

    // Max over sources of eccentricity where unassigned edges count both ways;
    // a lower bound for every completion. kUnreachable if some pair is already
    // separated.
    int mixed_bound() {
        int worst = 0;
        for (int s = 0; s < n_; ++s) {
            int head = 0, tail_pos = 0, reached = 1;
            std::fill(dist_.begin(), dist_.end(), kUnreachable);
            dist_[s] = 0;
            queue_[tail_pos++] = s;
            while (head < tail_pos) {
                int u = queue_[head++];
                for (int e : inc_[u]) {
                    int a = g_.edges()[e].first, b = g_.edges()[e].second;
                    int w = (u == a) ? b : a;
                    if (assign_[e] != -1) {
                        int tl = assign_[e] == 0 ? a : b;
                        if (tl != u) continue;  // directed the other way
                    }
                    if (dist_[w] == kUnreachable) {
                        dist_[w] = dist_[u] + 1;
                        worst = std::max(worst, dist_[w]);
                        queue_[tail_pos++] = w;
                        ++reached;
                    }
                }
            }
            if (reached < n_) return kUnreachable;
        }
        return worst;
    }

    void descend(int depth) {
        if (stopped_) return;
        if (depth == m_) {
            int value = mixed_bound();  // fully assigned: the exact diameter
            if (value != kUnreachable && value < current_best()) {
                best_ = value;
                best_assign_.assign(assign_.begin(), assign_.end());
                if (shared_best_) {
                    int cur = shared_best_->load(std::memory_order_relaxed);
                    while (value < cur &&
                           !shared_best_->compare_exchange_weak(cur, value)) {}
                }
                if ((stop_at_ >= 0 && best_ <= stop_at_) || best_ <= global_floor_)
                    stopped_ = true;
            }
            return;
        }
        int e = order_[depth];
        for (int choice = 0; choice < 2 && !stopped_; ++choice) {
            set_edge(e, choice == 0);
            if (prune_ok(depth + 1)) descend(depth + 1);
            unset_edge(e);
        }
    }

    const UndirectedGraph& g_;
    int n_, m_;
    std::vector<int> order_;
    std::vector<int> preferred_tail_;
    std::vector<std::vector<int>> inc_;
    std::vector<int8_t> assign_;
    std::vector<int> in_possible_, out_possible_;
    std::vector<int> dist_, queue_;
    std::vector<int8_t> best_assign_;
    int best_ = 0;
    int stop_at_ = -1;
    int global_floor_ = 0;
    int prefix_ = 0;
    std::atomic<int>* shared_best_ = nullptr;
    bool stopped_ = false;
};

inline int parallel_min_value(const UndirectedGraph& g, const Orientation& robbins,
                              int initial_best, int threads) {
    int m = g.m();
    int k = 0;
    while ((1 << k) < 4 * threads && k < m && k < 12) ++k;
    std::atomic<int> best{initial_best};
    std::atomic<unsigned> next{0};
    unsigned total = 1u << k;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (unsigned p = next.fetch_add(1); p < total; p = next.fetch_add(1)) {
                OrientationSearch worker(g, robbins);
                if (!worker.apply_prefix(k, p)) continue;
                worker.run_suffix(best.load(), &best);
            }
        });
    }
    for (auto& th : pool) th.join();
    return best.load();
}

}  // namespace detail

/// Minimum of diam over all strongly connected orientations of g, plus one
/// witness attaining it. With `budget`, returns early with any orientation of
/// diam <= budget if one is found (exact == false unless the search finished).
inline OracleResult exact_min_oriented_diameter(
    const UndirectedGraph& g, std::optional<int> budget = std::nullopt,
    int max_edges = kOracleEdgeLimit, int threads = 1) {
    if (!is_connected(g)) throw NotConnectedError();
    auto bridges = detail::lowpoint_scan(g).bridges;
    if (!bridges.empty()) throw HasBridgeError(std::move(bridges));
    if (g.m() > max_edges)
        throw TooLargeError("oracle limited to " + std::to_string(max_edges) +
                            " edges, got " + std::to_string(g.m()));
    if (g.n() <= 1) return {0, Orientation(g, {}), true};

    Orientation robbins = robbins_orient(g);
    int robbins_diam = diam_profile(robbins, {}).diam;
    int stop_at = budget.value_or(-1);

    if (!budget && threads > 1) {
        int value = detail::parallel_min_value(g, robbins, robbins_diam + 1, threads);
        // Deterministic witness: first leaf at the optimum in canonical order.
        detail::OrientationSearch search(g, robbins);
        search.run(value + 1, value, nullptr);
        detail::check(search.found() && search.best() == value,
                      "witness re-search must reproduce the parallel optimum");
        return {value, search.witness(g), true};
    }

    detail::OrientationSearch search(g, robbins);
    search.run(robbins_diam + 1, stop_at, nullptr);
    detail::check(search.found(), "the robbins leaf must be reachable");
    return {search.best(), search.witness(g), search.proved_optimal()};
}

}  // namespace orient
