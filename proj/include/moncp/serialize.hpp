#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "moncp/baselines.hpp"
#include "moncp/oracle.hpp"
#include "moncp/problem.hpp"
#include "moncp/solver.hpp"

namespace moncp {

using json = nlohmann::ordered_json;

inline constexpr int result_schema_version = 1;

json config_to_json(const SolverConfig& cfg);

/// Result document. Timing is left out so that reruns are byte-identical;
/// it belongs in the run manifest.
json run_result_to_json(const RunResult& r, const ProblemInstance& p);
json oracle_to_json(const OracleFront& f, const ProblemInstance& p);
json baseline_to_json(const BaselineResult& b, const ProblemInstance& p);

std::vector<std::string> selected_names(const Graph& g, const DecisionVector& x);

class MalformedResult : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Common view of any result document (run, oracle or baseline).
struct ResultDocument {
    std::string kind;       // "run_result" | "oracle_front" | "baseline_result"
    std::string label;      // algorithm/variant or method
    std::string model;
    std::uint64_t seed = 0;
    std::string instance_hash;
    std::vector<FrontPoint> pf;
    std::vector<std::vector<std::string>> ps;  // driver names per PF point
};

ResultDocument parse_result_document(const json& j);
ResultDocument read_result_file(const std::string& path);

/// Serialized with 2-space indentation and a trailing newline.
void write_json_file(const std::string& path, const json& j);

}  // namespace moncp
