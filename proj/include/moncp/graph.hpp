#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moncp {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UsageError : public std::logic_error {
    using std::logic_error::logic_error;
};

/// Immutable interaction network. Undirected graphs store every edge once as
/// (low, high); directed graphs store (tail, head). Self-loops and duplicate
/// edges never survive construction.
class Graph {
public:
    Graph() = default;

    /// Builds from index pairs. Endpoints must be < num_nodes. Names default to
    /// the decimal index when `names` is empty.
    static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges, bool directed,
                            std::vector<std::string> names = {});

    std::size_t num_nodes() const noexcept { return names_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    bool directed() const noexcept { return directed_; }

    const std::vector<std::string>& node_names() const noexcept { return names_; }
    const std::string& name(NodeId v) const { return names_.at(v); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Undirected neighbours, or successors when directed.
    std::span<const NodeId> out_neighbors(NodeId v) const;
    /// Predecessors. Same as out_neighbors for undirected graphs.
    std::span<const NodeId> in_neighbors(NodeId v) const;

    std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
    std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }

    /// Index of `name`, or num_nodes() when absent.
    std::size_t find(const std::string& name) const;

private:
    void check_node(NodeId v) const;

    bool directed_ = false;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    // CSR adjacency
    std::vector<std::size_t> out_offsets_, in_offsets_;
    std::vector<NodeId> out_adj_, in_adj_;
};

/// Edge-list text: two identifiers per line, '#' comments, blank lines
/// ignored. `extra_nodes` lists identifiers that must exist even without
/// edges; they are appended after the edge endpoints in first-appearance
/// order.
Graph parse_edge_list(std::istream& in, bool directed, std::span<const std::string> extra_nodes = {});
Graph parse_edge_list(const std::string& text, bool directed);

/// One identifier per line ('#' comments allowed).
std::vector<std::string> parse_node_list(std::istream& in);

/// Inverse of parse_edge_list for graphs without isolated nodes.
std::string serialize_edge_list(const Graph& g);

/// ∂(v) on an undirected graph.
std::vector<NodeId> neighborhood(const Graph& g, NodeId v);

/// Nodes with in-degree zero in a directed graph.
std::vector<NodeId> source_nodes(const Graph& g);

/// Strongly connected components of the subgraph induced by nodes with
/// removed[v] == 0. An empty `removed` keeps every node. Iterative Tarjan,
/// O(n + |E|).
std::vector<std::vector<NodeId>> strongly_connected_components(const Graph& g,
                                                               std::span<const std::uint8_t> removed = {});

/// Split-node bipartite view of a directed graph (out-copy -> in-copy per
/// edge) matched with Hopcroft-Karp.
struct Matching {
    std::vector<Edge> pairs;               // (tail, head) of matched edges
    std::vector<NodeId> unmatched_in;      // in-copies with no matched edge
};

Matching maximum_bipartite_matching(const Graph& g);

/// Incidence view used for vertex-cover diagnostics: right node k is edge k.
struct BipartiteView {
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    std::vector<Edge> incidences;
};

BipartiteView bipartite_view(const Graph& g);

}  // namespace moncp
