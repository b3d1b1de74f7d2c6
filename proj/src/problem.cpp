#include "moncp/problem.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace moncp {

std::size_t LabelVector::positives() const noexcept {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), std::uint8_t{1}));
}

LabelVector load_labels(const Graph& g, std::istream& in) {
    if (!in) throw std::runtime_error("label stream is not readable");
    std::unordered_map<std::string, NodeId> index;
    for (NodeId i = 0; i < g.num_nodes(); ++i) index.emplace(g.name(i), i);

    LabelVector lv;
    lv.labels.assign(g.num_nodes(), 0);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string name, flag;
        if (!(ss >> name) || name.front() == '#') continue;
        if (ss >> flag && flag == "0") continue;
        auto it = index.find(name);
        if (it == index.end()) {
            ++lv.unmatched;
            continue;
        }
        lv.labels[it->second] = 1;
    }
    if (in.bad()) throw std::runtime_error("failed reading label stream");
    return lv;
}

LabelVector labels_from_indices(std::size_t n, std::span<const NodeId> targets) {
    LabelVector lv;
    lv.labels.assign(n, 0);
    for (NodeId t : targets) lv.labels.at(t) = 1;
    return lv;
}

ProblemInstance::ProblemInstance(Graph graph, ControlModel model, LabelVector labels)
    : graph_(std::move(graph)), model_(model), labels_(std::move(labels)) {
    if (labels_.size() != graph_.num_nodes())
        throw std::invalid_argument("label vector length " + std::to_string(labels_.size()) + " != node count " +
                                    std::to_string(graph_.num_nodes()));
    check_compatible(model_, graph_);
    if (graph_.num_nodes() == 0) throw std::invalid_argument("problem needs at least one node");
}

Evaluation evaluate(const ProblemInstance& p, std::span<const std::uint8_t> x) {
    if (x.size() != p.dimension()) throw std::invalid_argument("decision vector dimension mismatch");
    Evaluation e;
    const auto& l = p.labels().labels;
    for (std::size_t i = 0; i < x.size(); ++i) {
        e.f1 += x[i];
        e.f2_raw += x[i] & l[i];
    }
    e.cv = violation(p.model(), p.graph(), x).total_violation;
    e.feasible = e.cv == 0.0;
    return e;
}

void Evaluator::evaluate_batch(std::span<const DecisionVector> xs, std::span<Evaluation> out) {
    if (xs.size() != out.size()) throw std::invalid_argument("batch output size mismatch");
    const std::size_t n = xs.size();
    count_.fetch_add(n, std::memory_order_relaxed);
    const std::size_t workers = std::min<std::size_t>(threads_, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = evaluate(*problem_, xs[i]);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([this, xs, out, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = evaluate(*problem_, xs[i]);
        });
    }
}

}  // namespace moncp
