#include "moncp/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moncp {

namespace {

std::vector<std::string> gene_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    return names;
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, bool directed, Rng& rng) {
    if (n == 0) throw std::invalid_argument("graph needs at least one node");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = directed ? 0 : i + 1; j < n; ++j)
            if (i != j && coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges, directed, gene_names(n));
}

Graph barabasi_albert(std::size_t n, std::size_t m, bool directed, Rng& rng) {
    if (m == 0) throw std::invalid_argument("attachment count m must be >= 1");
    if (n < 3) throw std::invalid_argument("preferential attachment needs n >= 3");
    if (m > 3 && n <= m) throw std::invalid_argument("n must exceed m");
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<NodeId> endpoints{0, 1, 1, 2, 0, 2};  // one entry per edge end
    std::size_t start = 3;
    // grow the seed into a clique when m exceeds its size
    for (; start < n && start < m; ++start) {
        for (NodeId u = 0; u < start; ++u) {
            edges.emplace_back(u, start);
            endpoints.push_back(u);
            endpoints.push_back(static_cast<NodeId>(start));
        }
    }
    std::vector<NodeId> targets;
    for (std::size_t v = start; v < n; ++v) {
        targets.clear();
        std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
        while (targets.size() < m) {
            NodeId t = endpoints[pick(rng)];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, static_cast<NodeId>(v));
            endpoints.push_back(t);
            endpoints.push_back(static_cast<NodeId>(v));
        }
    }
    if (directed) {
        std::bernoulli_distribution coin(0.5);
        for (auto& e : edges)
            if (coin(rng)) std::swap(e.first, e.second);
    }
    return Graph::from_edges(n, edges, directed, gene_names(n));
}

LabelVector random_labels(std::size_t n, double fraction, Rng& rng) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) throw std::invalid_argument("label fraction must lie in [0, 1]");
    const auto k = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(std::min(k, n));
    return labels_from_indices(n, order);
}

}  // namespace moncp
