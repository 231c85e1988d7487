#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orient {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotConnectedError : GraphError {
    NotConnectedError() : GraphError("graph is not connected") {}
};

struct HasBridgeError : GraphError {
    std::vector<std::pair<int, int>> bridges;
    explicit HasBridgeError(std::vector<std::pair<int, int>> b)
        : GraphError(format(b)), bridges(std::move(b)) {}

  private:
    static std::string format(const std::vector<std::pair<int, int>>& b) {
        std::string s = "graph has bridge(s):";
        for (const auto& [u, v] : b) {
            s += " " + std::to_string(u) + "-" + std::to_string(v);
        }
        return s;
    }
};

struct TooLargeError : GraphError {
    explicit TooLargeError(const std::string& what) : GraphError(what) {}
};

struct NotDominatingError : GraphError {
    NotDominatingError() : GraphError("vertex set is not dominating") {}
};

struct NotStrongError : GraphError {
    NotStrongError() : GraphError("orientation is not strongly connected") {}
};

struct NotACycleError : GraphError {
    NotACycleError() : GraphError("edge list is not a directed cycle") {}
};

struct NotAPathError : GraphError {
    NotAPathError() : GraphError("not one of two edge-disjoint directed paths") {}
};

struct NotSubgraphError : GraphError {
    NotSubgraphError() : GraphError("given graph is not a subgraph of the host") {}
};

struct StaleStepError : GraphError {
    StaleStepError() : GraphError("reduction step no longer matches the pair") {}
};

struct ConventionViolatedError : GraphError {
    explicit ConventionViolatedError(const std::string& what) : GraphError(what) {}
};

struct InconsistentPathDirectionError : GraphError {
    InconsistentPathDirectionError()
        : GraphError("replacement path is not directed consistently") {}
};

struct UnknownNameError : GraphError {
    explicit UnknownNameError(const std::string& name)
        : GraphError("unknown graph name: " + name) {}
};

struct ParseError : GraphError {
    explicit ParseError(const std::string& what) : GraphError(what) {}
};

namespace detail {

// Always-on invariant check; these guard paper-derived postconditions, so a
// failure means a real bug rather than a recoverable input problem.
inline void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("invariant violated: ") + msg);
}

}  // namespace detail

}  // namespace orient
