#include "moncp/baselines.hpp"

#include <algorithm>

namespace moncp {

RunResult nsga2_cdp_solve(const ProblemInstance& p, const SolverConfig& cfg, const SolverHooks& hooks) {
    SolverConfig single = cfg;
    single.disable_subpop1 = true;
    single.disable_subpop2 = true;
    single.use_cdp_main = true;
    return detail::run_generational(p, single, "nsga2-cdp", hooks);
}

std::vector<NodeId> greedy_mds(const Graph& g) {
    if (g.directed()) throw UsageError("greedy dominating set needs an undirected graph");
    const std::size_t n = g.num_nodes();
    std::vector<std::uint8_t> dominated(n, 0);
    std::vector<NodeId> chosen;
    std::size_t remaining = n;
    while (remaining) {
        NodeId best = 0;
        std::size_t best_gain = 0;
        for (NodeId v = 0; v < n; ++v) {
            std::size_t gain = dominated[v] ? 0 : 1;
            for (NodeId u : g.out_neighbors(v)) gain += dominated[u] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        chosen.push_back(best);
        if (!dominated[best]) {
            dominated[best] = 1;
            --remaining;
        }
        for (NodeId u : g.out_neighbors(best))
            if (!dominated[u]) {
                dominated[u] = 1;
                --remaining;
            }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::vector<NodeId> greedy_vertex_cover(const Graph& g) {
    if (g.directed()) throw UsageError("greedy vertex cover needs an undirected graph");
    const std::size_t n = g.num_nodes();
    std::vector<std::uint8_t> in_cover(n, 0);
    std::vector<std::size_t> live_degree(n);
    for (NodeId v = 0; v < n; ++v) live_degree[v] = g.out_degree(v);
    std::vector<NodeId> chosen;
    for (;;) {
        NodeId best = 0;
        std::size_t best_deg = 0;
        for (NodeId v = 0; v < n; ++v)
            if (live_degree[v] > best_deg) {
                best_deg = live_degree[v];
                best = v;
            }
        if (best_deg == 0) break;
        in_cover[best] = 1;
        live_degree[best] = 0;
        chosen.push_back(best);
        for (NodeId u : g.out_neighbors(best))
            if (!in_cover[u]) --live_degree[u];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::vector<NodeId> greedy_fvs(const Graph& g) {
    if (!g.directed()) throw UsageError("greedy feedback vertex set needs a directed graph");
    const std::size_t n = g.num_nodes();
    std::vector<std::uint8_t> removed(n, 0);
    std::vector<NodeId> chosen = source_nodes(g);
    for (NodeId s : chosen) removed[s] = 1;

    for (;;) {
        auto comps = strongly_connected_components(g, removed);
        std::vector<std::uint8_t> cyclic(n, 0);
        bool any = false;
        for (const auto& c : comps)
            if (c.size() >= 2) {
                any = true;
                for (NodeId v : c) cyclic[v] = 1;
            }
        if (!any) break;
        NodeId best = 0;
        std::size_t best_score = 0;
        bool have = false;
        for (NodeId v = 0; v < n; ++v) {
            if (!cyclic[v]) continue;
            std::size_t in = 0, out = 0;
            for (NodeId u : g.in_neighbors(v)) in += removed[u] ? 0 : 1;
            for (NodeId u : g.out_neighbors(v)) out += removed[u] ? 0 : 1;
            const std::size_t score = in * out;
            if (!have || score > best_score) {
                have = true;
                best_score = score;
                best = v;
            }
        }
        removed[best] = 1;
        chosen.push_back(best);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::vector<NodeId> mms_driver_set(const Graph& g) {
    auto m = maximum_bipartite_matching(g);
    if (m.unmatched_in.empty()) return {0};
    return m.unmatched_in;
}

BaselineResult score_driver_set(const ProblemInstance& p, std::string method, std::vector<NodeId> drivers) {
    std::sort(drivers.begin(), drivers.end());
    DecisionVector x(p.dimension(), 0);
    for (NodeId v : drivers) x.at(v) = 1;
    auto e = evaluate(p, x);
    return {std::move(method), std::move(drivers), e.f1, e.f2_raw, e.feasible};
}

BaselineResult greedy_baseline(const ProblemInstance& p) {
    switch (p.model()) {
    case ControlModel::MDS: return score_driver_set(p, "greedy-mds", greedy_mds(p.graph()));
    case ControlModel::NCUA: return score_driver_set(p, "greedy-vertex-cover", greedy_vertex_cover(p.graph()));
    case ControlModel::DFVS: return score_driver_set(p, "greedy-fvs", greedy_fvs(p.graph()));
    }
    throw std::invalid_argument("unknown control model");
}

}  // namespace moncp
