#include "moncp/constraints.hpp"

#include <stdexcept>

namespace moncp {

namespace {

void check_size(const Graph& g, std::span<const std::uint8_t> x) {
    if (x.size() != g.num_nodes())
        throw std::invalid_argument("decision vector has " + std::to_string(x.size()) + " bits, graph has " +
                                    std::to_string(g.num_nodes()) + " nodes");
}

void add_deficit(ConstraintReport& r, double deficit, bool with_detail) {
    if (deficit > 0) {
        r.total_violation += deficit;
        ++r.violated_count;
    }
    if (with_detail) r.detail.push_back(deficit);
}

}  // namespace

std::string_view to_string(ControlModel m) noexcept {
    switch (m) {
    case ControlModel::MDS: return "mds";
    case ControlModel::DFVS: return "dfvs";
    case ControlModel::NCUA: return "ncua";
    }
    return "?";
}

ControlModel parse_control_model(std::string_view s) {
    if (s == "mds" || s == "MDS") return ControlModel::MDS;
    if (s == "dfvs" || s == "DFVS") return ControlModel::DFVS;
    if (s == "ncua" || s == "NCUA") return ControlModel::NCUA;
    throw std::invalid_argument("unknown control model '" + std::string(s) + "'");
}

bool requires_directed(ControlModel m) noexcept { return m == ControlModel::DFVS; }

void check_compatible(ControlModel m, const Graph& g) {
    if (requires_directed(m) != g.directed())
        throw UsageError(std::string(to_string(m)) + " requires " + (requires_directed(m) ? "a directed" : "an undirected") +
                         " graph");
}

ConstraintReport violation_mds(const Graph& g, std::span<const std::uint8_t> x, bool with_detail) {
    check_compatible(ControlModel::MDS, g);
    check_size(g, x);
    ConstraintReport r;
    r.num_constraints = g.num_nodes();
    if (with_detail) r.detail.reserve(r.num_constraints);
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
        int covered = x[i];
        if (!covered)
            for (NodeId j : g.out_neighbors(i))
                if (x[j]) {
                    covered = 1;
                    break;
                }
        add_deficit(r, covered ? 0.0 : 1.0, with_detail);
    }
    return r;
}

ConstraintReport violation_ncua(const Graph& g, std::span<const std::uint8_t> x, bool with_detail) {
    check_compatible(ControlModel::NCUA, g);
    check_size(g, x);
    ConstraintReport r;
    r.num_constraints = g.num_edges();
    if (with_detail) r.detail.reserve(r.num_constraints);
    for (auto [u, v] : g.edges()) add_deficit(r, (x[u] || x[v]) ? 0.0 : 1.0, with_detail);
    return r;
}

ConstraintReport violation_dfvs(const Graph& g, std::span<const std::uint8_t> x, bool with_detail) {
    check_compatible(ControlModel::DFVS, g);
    check_size(g, x);
    ConstraintReport r;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (g.in_degree(v) != 0) continue;
        ++r.num_constraints;
        add_deficit(r, x[v] ? 0.0 : 1.0, with_detail);
    }
    ++r.num_constraints;  // cycle-structure family
    std::size_t cyclic = 0;
    for (const auto& comp : strongly_connected_components(g, x))
        if (comp.size() >= 2) cyclic += comp.size();
    add_deficit(r, static_cast<double>(cyclic), with_detail);
    return r;
}

ConstraintReport violation(ControlModel m, const Graph& g, std::span<const std::uint8_t> x, bool with_detail) {
    switch (m) {
    case ControlModel::MDS: return violation_mds(g, x, with_detail);
    case ControlModel::DFVS: return violation_dfvs(g, x, with_detail);
    case ControlModel::NCUA: return violation_ncua(g, x, with_detail);
    }
    throw std::invalid_argument("unknown control model");
}

bool is_feasible(ControlModel m, const Graph& g, std::span<const std::uint8_t> x) {
    return violation(m, g, x).total_violation == 0.0;
}

}  // namespace moncp
