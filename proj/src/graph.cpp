#include "moncp/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace moncp {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool reverse, std::vector<std::size_t>& offsets,
               std::vector<NodeId>& adj) {
    offsets.assign(n + 1, 0);
    for (auto [a, b] : edges) ++offsets[(reverse ? b : a) + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    adj.resize(offsets[n]);
    auto cursor = offsets;
    for (auto [a, b] : edges) {
        if (reverse) std::swap(a, b);
        adj[cursor[a]++] = b;
    }
    for (std::size_t i = 0; i < n; ++i) std::sort(adj.begin() + offsets[i], adj.begin() + offsets[i + 1]);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(std::move(tok));
    return tokens;
}

bool skip_line(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges, bool directed,
                        std::vector<std::string> names) {
    if (num_nodes > std::numeric_limits<NodeId>::max()) throw std::invalid_argument("graph too large");
    Graph g;
    g.directed_ = directed;
    if (names.empty()) {
        names.reserve(num_nodes);
        for (std::size_t i = 0; i < num_nodes; ++i) names.push_back(std::to_string(i));
    } else if (names.size() != num_nodes) {
        throw std::invalid_argument("name table size does not match node count");
    }
    g.names_ = std::move(names);

    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= num_nodes || b >= num_nodes) throw std::out_of_range("edge endpoint out of range");
        if (a == b) continue;
        if (!directed && a > b) std::swap(a, b);
        canon.emplace_back(a, b);
    }
    // Dedup while keeping first-appearance order.
    std::vector<Edge> sorted = canon;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != canon.size()) {
        std::vector<std::uint8_t> seen(sorted.size(), 0);
        std::vector<Edge> kept;
        kept.reserve(sorted.size());
        for (const auto& e : canon) {
            auto idx = std::lower_bound(sorted.begin(), sorted.end(), e) - sorted.begin();
            if (!seen[idx]) {
                seen[idx] = 1;
                kept.push_back(e);
            }
        }
        canon = std::move(kept);
    }
    g.edges_ = std::move(canon);

    if (directed) {
        build_csr(num_nodes, g.edges_, false, g.out_offsets_, g.out_adj_);
        build_csr(num_nodes, g.edges_, true, g.in_offsets_, g.in_adj_);
    } else {
        std::vector<Edge> both;
        both.reserve(2 * g.edges_.size());
        for (auto [a, b] : g.edges_) {
            both.emplace_back(a, b);
            both.emplace_back(b, a);
        }
        build_csr(num_nodes, both, false, g.out_offsets_, g.out_adj_);
        g.in_offsets_ = g.out_offsets_;
        g.in_adj_ = g.out_adj_;
    }
    return g;
}

void Graph::check_node(NodeId v) const {
    if (v >= num_nodes()) throw std::out_of_range("node index " + std::to_string(v) + " out of range");
}

std::span<const NodeId> Graph::out_neighbors(NodeId v) const {
    check_node(v);
    return {out_adj_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const NodeId> Graph::in_neighbors(NodeId v) const {
    check_node(v);
    return {in_adj_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::size_t Graph::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<std::size_t>(it - names_.begin());
}

Graph parse_edge_list(std::istream& in, bool directed, std::span<const std::string> extra_nodes) {
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& s) {
        auto [it, inserted] = index.try_emplace(s, static_cast<NodeId>(names.size()));
        if (inserted) names.push_back(s);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        auto tokens = tokenize(line);
        if (tokens.size() != 2)
            throw ParseError("expected 2 node identifiers, found " + std::to_string(tokens.size()), lineno);
        NodeId a = intern(tokens[0]);
        NodeId b = intern(tokens[1]);
        edges.emplace_back(a, b);
    }
    if (in.bad()) throw std::runtime_error("failed reading edge list");
    for (const auto& s : extra_nodes) intern(s);
    if (names.empty()) throw ParseError("empty graph", 0);
    auto n = names.size();
    return Graph::from_edges(n, edges, directed, std::move(names));
}

Graph parse_edge_list(const std::string& text, bool directed) {
    std::istringstream ss(text);
    return parse_edge_list(ss, directed);
}

std::vector<std::string> parse_node_list(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (skip_line(line)) continue;
        auto tokens = tokenize(line);
        out.push_back(tokens.front());
    }
    return out;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [a, b] : g.edges()) out << g.name(a) << '\t' << g.name(b) << '\n';
    return out.str();
}

std::vector<NodeId> neighborhood(const Graph& g, NodeId v) {
    if (g.directed()) throw UsageError("neighborhood() needs an undirected graph; use in/out neighbours");
    auto nb = g.out_neighbors(v);
    return {nb.begin(), nb.end()};
}

std::vector<NodeId> source_nodes(const Graph& g) {
    if (!g.directed()) throw UsageError("source nodes are only defined on directed graphs");
    std::vector<NodeId> out;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.in_degree(v) == 0) out.push_back(v);
    return out;
}

std::vector<std::vector<NodeId>> strongly_connected_components(const Graph& g, std::span<const std::uint8_t> removed) {
    const std::size_t n = g.num_nodes();
    if (!removed.empty() && removed.size() != n) throw std::invalid_argument("removed mask size mismatch");
    auto alive = [&](NodeId v) { return removed.empty() || !removed[v]; };

    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<NodeId> stack;
    std::vector<std::pair<NodeId, std::size_t>> call;  // (node, next neighbour position)
    std::vector<std::vector<NodeId>> comps;
    std::uint32_t counter = 0;

    for (NodeId root = 0; root < n; ++root) {
        if (!alive(root) || index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            auto succ = g.out_neighbors(v);
            if (pos < succ.size()) {
                NodeId w = succ[pos++];
                if (!alive(w)) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            NodeId done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<NodeId> comp;
                NodeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != done);
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

Matching maximum_bipartite_matching(const Graph& g) {
    if (!g.directed()) throw UsageError("matching-based driver sets need a directed graph");
    const std::size_t n = g.num_nodes();
    constexpr NodeId none = std::numeric_limits<NodeId>::max();
    constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<NodeId> match_out(n, none), match_in(n, none);
    std::vector<std::uint32_t> dist(n);

    // Hopcroft-Karp: left = out-copies, right = in-copies.
    auto bfs = [&] {
        std::queue<NodeId> q;
        bool found = false;
        for (NodeId u = 0; u < n; ++u) {
            if (match_out[u] == none) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = inf;
            }
        }
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            for (NodeId v : g.out_neighbors(u)) {
                NodeId w = match_in[v];
                if (w == none) {
                    found = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    std::vector<std::size_t> it(n);
    std::vector<NodeId> path;
    auto dfs = [&](NodeId root) {
        // iterative augmenting-path search along the BFS layering
        path.assign(1, root);
        while (!path.empty()) {
            NodeId u = path.back();
            auto succ = g.out_neighbors(u);
            bool advanced = false;
            while (it[u] < succ.size()) {
                NodeId v = succ[it[u]];
                NodeId w = match_in[v];
                if (w == none) {
                    // augment along path
                    for (std::size_t k = path.size(); k-- > 0;) {
                        NodeId left = path[k];
                        NodeId right = g.out_neighbors(left)[it[left]];
                        match_out[left] = right;
                        match_in[right] = left;
                    }
                    return true;
                }
                if (dist[w] == dist[u] + 1) {
                    path.push_back(w);
                    advanced = true;
                    break;
                }
                ++it[u];
            }
            if (advanced) continue;
            dist[u] = inf;
            path.pop_back();
            if (!path.empty()) ++it[path.back()];
        }
        return false;
    };

    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (NodeId u = 0; u < n; ++u)
            if (match_out[u] == none) dfs(u);
    }

    Matching m;
    for (NodeId u = 0; u < n; ++u)
        if (match_out[u] != none) m.pairs.emplace_back(u, match_out[u]);
    for (NodeId v = 0; v < n; ++v)
        if (match_in[v] == none) m.unmatched_in.push_back(v);
    return m;
}

BipartiteView bipartite_view(const Graph& g) {
    if (g.directed()) throw UsageError("bipartite incidence view is defined for undirected graphs");
    return {g.num_nodes(), g.num_edges(), g.edges()};
}

}  // namespace moncp
