#pragma once

#include <string>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// Extremal chain with domination number gamma: dominators 0..gamma-1, one
/// isolated triangle on each end dominator, and a seven-edge connector block
/// between consecutive dominators. 5*gamma vertices, 7*gamma-1 edges.
///
/// Vertex numbering: X_i = i-1 for i = 1..gamma; then the first triangle
/// {A, B} = {gamma, gamma+1}; then per connector i the block
/// C_i, D_i, E_i, F_i at gamma+2+4(i-1); finally {G, H} = {5g-2, 5g-1}.
struct FamilyInstance {
    UndirectedGraph graph;
    std::vector<int> dset;
};

inline FamilyInstance gen_family(int gamma) {
    if (gamma < 1) throw std::invalid_argument("gamma must be positive");
    int n = 5 * gamma;
    std::vector<Edge> edges;
    auto X = [&](int i) { return i - 1; };  // i in 1..gamma
    int a = gamma, b = gamma + 1;
    edges.push_back(make_edge(a, b));
    edges.push_back(make_edge(a, X(1)));
    edges.push_back(make_edge(b, X(1)));
    for (int i = 1; i < gamma; ++i) {
        int c = gamma + 2 + 4 * (i - 1);
        int d = c + 1, e = c + 2, f = c + 3;
        edges.push_back(make_edge(X(i), c));
        edges.push_back(make_edge(c, e));
        edges.push_back(make_edge(e, d));
        edges.push_back(make_edge(d, X(i)));
        edges.push_back(make_edge(e, f));
        edges.push_back(make_edge(f, X(i + 1)));
        edges.push_back(make_edge(X(i + 1), e));
    }
    int g2 = 5 * gamma - 2, h2 = 5 * gamma - 1;
    edges.push_back(make_edge(g2, h2));
    edges.push_back(make_edge(g2, X(gamma)));
    edges.push_back(make_edge(h2, X(gamma)));

    FamilyInstance out;
    out.graph = UndirectedGraph::from_edges(n, std::move(edges));
    for (int i = 1; i <= gamma; ++i) out.dset.push_back(X(i));
    return out;
}

inline UndirectedGraph gen_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));      // outer cycle
        edges.push_back(make_edge(i, i + 5));            // spokes
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    }
    return UndirectedGraph::from_edges(10, std::move(edges));
}

/// K4 with the three edges at vertex 0 subdivided: 0-4-1, 0-5-2, 0-6-3.
inline UndirectedGraph gen_k4_subdivided() {
    std::vector<Edge> edges = {{0, 4}, {1, 4}, {0, 5}, {2, 5}, {0, 6}, {3, 6},
                               {1, 2}, {1, 3}, {2, 3}};
    return UndirectedGraph::from_edges(7, std::move(edges));
}

inline UndirectedGraph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return UndirectedGraph::from_edges(n, std::move(edges));
}

inline UndirectedGraph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return UndirectedGraph::from_edges(n, std::move(edges));
}

/// Names: "petersen", "k4_subdivided", "cycle(N)", "complete(N)".
inline UndirectedGraph gen_named(const std::string& name) {
    if (name == "petersen") return gen_petersen();
    if (name == "k4_subdivided") return gen_k4_subdivided();
    auto parse_arg = [&](const std::string& prefix) -> int {
        if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0 ||
            name[prefix.size()] != '(' || name.back() != ')')
            return -1;
        try {
            return std::stoi(name.substr(prefix.size() + 1,
                                         name.size() - prefix.size() - 2));
        } catch (const std::exception&) {
            return -1;
        }
    };
    if (int k = parse_arg("cycle"); k > 0) return gen_cycle(k);
    if (int k = parse_arg("complete"); k > 0) return gen_complete(k);
    throw UnknownNameError(name);
}

}  // namespace orient
