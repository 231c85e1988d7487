#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orient/orientation.hpp"

namespace orient {

// Text formats (ASCII, LF, space-separated):
//   graph file:        "p <n> <m>" header, then m lines "e <u> <v>" with u < v
//   orientation file:  "p <n> <m>" header, then m lines "a <tail> <head>"
//   vertex-set file:   whitespace-separated vertex ids
// Lines starting with "c" are comments everywhere; unknown types are errors.

inline void serialize_graph(std::ostream& os, const UndirectedGraph& g) {
    os << "p " << g.n() << " " << g.m() << "\n";
    for (const auto& [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
}

inline std::string graph_to_string(const UndirectedGraph& g) {
    std::ostringstream os;
    serialize_graph(os, g);
    return os.str();
}

namespace detail {

struct LineReader {
    std::istream& is;
    int lineno = 0;

    bool next(std::string& out) {
        while (std::getline(is, out)) {
            ++lineno;
            if (out.empty() || out[0] == 'c') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    }
};

inline bool split3(const std::string& line, char expect, long& x, long& y) {
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag >> x >> y) || tag.size() != 1 || tag[0] != expect) return false;
    std::string rest;
    return !(ss >> rest);
}

}  // namespace detail

inline UndirectedGraph parse_graph(std::istream& is) {
    detail::LineReader r{is};
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    long n = 0, m = 0;
    if (!detail::split3(line, 'p', n, m) || n < 0 || m < 0)
        r.fail("expected 'p <n> <m>' header");
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(m) + " edge lines");
        long u = 0, v = 0;
        if (!detail::split3(line, 'e', u, v)) r.fail("expected 'e <u> <v>'");
        if (u >= v || u < 0 || v >= n) r.fail("edge endpoints must satisfy 0 <= u < v < n");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (r.next(line)) r.fail("trailing content");
    try {
        return UndirectedGraph::from_edges(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline UndirectedGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

inline void serialize_orientation(std::ostream& os, const Orientation& h) {
    os << "p " << h.n() << " " << h.base().m() << "\n";
    for (int e = 0; e < h.base().m(); ++e)
        os << "a " << h.tail(e) << " " << h.head(e) << "\n";
}

inline std::string orientation_to_string(const Orientation& h) {
    std::ostringstream os;
    serialize_orientation(os, h);
    return os.str();
}

/// Parses an arc file and binds it to `base`; every base edge must be
/// directed exactly once.
inline Orientation parse_orientation(std::istream& is, const UndirectedGraph& base) {
    detail::LineReader r{is};
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    long n = 0, m = 0;
    if (!detail::split3(line, 'p', n, m)) r.fail("expected 'p <n> <m>' header");
    if (n != base.n() || m != base.m()) r.fail("arc file does not match the graph");
    std::vector<Arc> arcs;
    for (long i = 0; i < m; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(m) + " arc lines");
        long t = 0, h = 0;
        if (!detail::split3(line, 'a', t, h)) r.fail("expected 'a <tail> <head>'");
        if (t < 0 || h < 0 || t >= n || h >= n) r.fail("arc endpoint out of range");
        arcs.push_back({static_cast<int>(t), static_cast<int>(h)});
    }
    if (r.next(line)) r.fail("trailing content");
    try {
        return Orientation::from_arcs(base, arcs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline std::vector<int> parse_vertex_set(std::istream& is, int n) {
    std::vector<int> out;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        long v = 0;
        while (ss >> v) {
            if (v < 0 || v >= n)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": vertex id out of range");
            out.push_back(static_cast<int>(v));
        }
        if (!ss.eof())
            throw ParseError("line " + std::to_string(lineno) + ": expected integers");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline void serialize_vertex_set(std::ostream& os, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i) os << vs[i] << (i + 1 < vs.size() ? ' ' : '\n');
    if (vs.empty()) os << "\n";
}

}  // namespace orient
