#pragma once

#include <string>
#include <vector>

#include "moncp/problem.hpp"
#include "moncp/solver.hpp"

namespace moncp {

class OracleRefusal : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact Pareto front of a small instance.
struct OracleFront {
    std::vector<FrontPoint> pf;               // ascending f1
    std::vector<std::vector<DecisionVector>> ps;  // every vector attaining pf[k], lexicographic
    std::string instance_hash;
    std::uint64_t vectors_checked = 0;
};

inline constexpr std::size_t default_oracle_limit = 20;

/// Walks all 2^n selections in Gray-code order. Throws OracleRefusal when
/// n > n_limit.
OracleFront enumerate_pareto(const ProblemInstance& p, std::size_t n_limit = default_oracle_limit);

}  // namespace moncp
