// Shared fixtures and independent reference implementations for tests.
// Nothing here calls into the code path it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "moncp/graph.hpp"
#include "moncp/problem.hpp"

namespace moncp::testing {

/// Star K1,4 with the centre at index 0.
inline Graph star_k14() {
    std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    return Graph::from_edges(5, e, false);
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e, false);
}

inline Graph triangle() {
    std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
    return Graph::from_edges(3, e, false);
}

inline Graph directed_cycle3() {
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
    return Graph::from_edges(3, e, true);
}

inline Graph directed_chain3() {
    std::vector<Edge> e{{0, 1}, {1, 2}};
    return Graph::from_edges(3, e, true);
}

/// 4 -> 1, 1 -> 2 -> 3 -> 1 with node "k" at index k-1.
inline Graph dfvs_fixture() {
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {3, 0}};
    return Graph::from_edges(4, e, true, {"1", "2", "3", "4"});
}

inline ProblemInstance star_instance() {
    return {star_k14(), ControlModel::MDS, labels_from_indices(5, std::vector<NodeId>{1})};
}

inline ProblemInstance triangle_instance() {
    return {triangle(), ControlModel::NCUA, labels_from_indices(3, std::vector<NodeId>{0})};
}

inline ProblemInstance dfvs_instance() {
    return {dfvs_fixture(), ControlModel::DFVS, labels_from_indices(4, std::vector<NodeId>{2})};
}

inline Graph random_graph(std::size_t n, double p, bool directed, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (i != j && (directed || i < j) && coin(rng)) e.emplace_back(i, j);
    return Graph::from_edges(n, e, directed);
}

inline DecisionVector random_bits(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    DecisionVector x(n);
    for (auto& b : x) b = coin(rng);
    return x;
}

/// Ordering-weight system for DFVS, solved as difference constraints: for every
/// edge i -> j, w_i - w_j + n·x_i >= 1, with 0 <= w <= n - 1. Feasible iff
/// Bellman-Ford finds no negative cycle. Sources must also be selected.
inline bool dfvs_weights_satisfiable(const Graph& g, const DecisionVector& x) {
    const long long n = static_cast<long long>(g.num_nodes());
    struct Arc {
        std::size_t from, to;
        long long w;
    };
    std::vector<Arc> arcs;
    const std::size_t zero = g.num_nodes();  // reference variable z = 0
    for (auto [i, j] : g.edges()) arcs.push_back({i, j, n * x[i] - 1});  // w_j - w_i <= n x_i - 1
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        arcs.push_back({zero, v, n - 1});  // w_v - z <= n - 1
        arcs.push_back({v, zero, 0});      // z - w_v <= 0
    }
    std::vector<long long> dist(g.num_nodes() + 1, 0);
    for (std::size_t round = 0; round <= g.num_nodes() + 1; ++round) {
        bool changed = false;
        for (const auto& a : arcs)
            if (dist[a.from] + a.w < dist[a.to]) {
                dist[a.to] = dist[a.from] + a.w;
                changed = true;
            }
        if (!changed) return true;
    }
    return false;
}

/// Literal search over integer weights in [0, n-1]^n. Only for n <= 6.
inline bool dfvs_weights_bruteforce(const Graph& g, const DecisionVector& x) {
    const std::size_t n = g.num_nodes();
    std::vector<long long> w(n, 0);
    const long long top = static_cast<long long>(n) - 1;
    for (;;) {
        bool ok = true;
        for (auto [i, j] : g.edges())
            if (w[i] - w[j] + static_cast<long long>(n) * x[i] < 1) {
                ok = false;
                break;
            }
        if (ok) return true;
        std::size_t k = 0;
        while (k < n && w[k] == top) w[k++] = 0;
        if (k == n) return false;
        ++w[k];
    }
}

inline bool sources_selected(const Graph& g, const DecisionVector& x) {
    std::vector<int> indeg(g.num_nodes(), 0);
    for (auto [a, b] : g.edges()) ++indeg[b];
    for (std::size_t v = 0; v < g.num_nodes(); ++v)
        if (indeg[v] == 0 && !x[v]) return false;
    return true;
}

/// Kuhn's augmenting-path matching on the split representation.
inline std::size_t reference_matching_size(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::vector<NodeId>> adj(n);
    for (auto [a, b] : g.edges()) adj[a].push_back(b);
    std::vector<long> match_in(n, -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t u) {
        for (NodeId v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            if (match_in[v] < 0 || augment(static_cast<std::size_t>(match_in[v]))) {
                match_in[v] = static_cast<long>(u);
                return true;
            }
        }
        return false;
    };
    std::size_t size = 0;
    for (std::size_t u = 0; u < n; ++u) {
        seen.assign(n, 0);
        size += augment(u);
    }
    return size;
}

}  // namespace moncp::testing
