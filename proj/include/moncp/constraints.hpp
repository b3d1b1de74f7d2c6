#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moncp/graph.hpp"

namespace moncp {

/// Binary node selection; bit i set means node i is a driver.
using DecisionVector = std::vector<std::uint8_t>;

/// Structural control framework deciding which selections control the network.
enum class ControlModel { MDS, DFVS, NCUA };

std::string_view to_string(ControlModel m) noexcept;
ControlModel parse_control_model(std::string_view s);

/// MDS and NCUA need an undirected graph, DFVS a directed one.
bool requires_directed(ControlModel m) noexcept;
void check_compatible(ControlModel m, const Graph& g);

struct ConstraintReport {
    double total_violation = 0.0;
    std::size_t num_constraints = 0;
    std::size_t violated_count = 0;
    std::vector<double> detail;  // per-constraint deficit; only when requested

    bool feasible() const noexcept { return violated_count == 0; }
    double normalized() const noexcept {
        return num_constraints ? total_violation / static_cast<double>(num_constraints) : 0.0;
    }
};

/// One constraint per node: node selected or adjacent to a selected node.
ConstraintReport violation_mds(const Graph& g, std::span<const std::uint8_t> x, bool with_detail = false);

/// One constraint per edge: at least one endpoint selected.
ConstraintReport violation_ncua(const Graph& g, std::span<const std::uint8_t> x, bool with_detail = false);

/// Every source node selected and the graph minus the selection is acyclic.
/// Violation counts unselected sources plus residual nodes sitting in
/// strongly connected components of size >= 2. `detail` holds one entry per
/// source followed by the cyclic-node count.
ConstraintReport violation_dfvs(const Graph& g, std::span<const std::uint8_t> x, bool with_detail = false);

ConstraintReport violation(ControlModel m, const Graph& g, std::span<const std::uint8_t> x, bool with_detail = false);

bool is_feasible(ControlModel m, const Graph& g, std::span<const std::uint8_t> x);

}  // namespace moncp
