#pragma once

#include <cstdint>

#include "moncp/evo.hpp"
#include "moncp/graph.hpp"
#include "moncp/problem.hpp"

namespace moncp {

/// G(n, p): each unordered pair (ordered pair when directed) independently.
Graph erdos_renyi(std::size_t n, double p, bool directed, Rng& rng);

/// Preferential attachment: a seed triangle, then every new node attaches
/// to m distinct existing nodes with probability proportional to degree.
/// Directed graphs orient each edge by a fair coin.
Graph barabasi_albert(std::size_t n, std::size_t m, bool directed, Rng& rng);

/// ceil(fraction · n) labelled nodes chosen uniformly without replacement.
LabelVector random_labels(std::size_t n, double fraction, Rng& rng);

}  // namespace moncp
