#pragma once

#include <string>
#include <vector>

#include "moncp/problem.hpp"
#include "moncp/solver.hpp"

namespace moncp {

/// Single driver set from one of the classic single-objective methods.
struct BaselineResult {
    std::string method;
    std::vector<NodeId> drivers;  // ascending
    std::int64_t f1 = 0;
    std::int64_t f2 = 0;          // f2_raw against the instance labels
    bool feasible = false;
};

/// NSGA-II with the constrained dominance principle: one population, ε = 0,
/// same budget accounting and output as solve().
RunResult nsga2_cdp_solve(const ProblemInstance& p, const SolverConfig& cfg, const SolverHooks& hooks = {});

/// Repeatedly adds the node covering most undominated nodes (lowest index on ties).
std::vector<NodeId> greedy_mds(const Graph& g);

/// Repeatedly takes the higher-degree endpoint of an uncovered edge, degree
/// counted over uncovered edges; lowest index on ties.
std::vector<NodeId> greedy_vertex_cover(const Graph& g);

/// All source nodes, then the max in·out-degree node of any remaining
/// non-trivial SCC until the residual graph is acyclic.
std::vector<NodeId> greedy_fvs(const Graph& g);

/// Unmatched nodes of a maximum matching; {0} when the matching is perfect.
std::vector<NodeId> mms_driver_set(const Graph& g);

/// Runs the greedy method matching the instance's control model and scores it.
BaselineResult greedy_baseline(const ProblemInstance& p);

/// Scores an arbitrary driver set against an instance.
BaselineResult score_driver_set(const ProblemInstance& p, std::string method, std::vector<NodeId> drivers);

}  // namespace moncp
