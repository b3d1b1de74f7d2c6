#pragma once

#include <atomic>
#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "moncp/constraints.hpp"
#include "moncp/graph.hpp"

namespace moncp {

/// Prior drug-target membership per node.
struct LabelVector {
    std::vector<std::uint8_t> labels;
    std::size_t unmatched = 0;  // names in the source list absent from the graph

    std::size_t size() const noexcept { return labels.size(); }
    std::size_t positives() const noexcept;
};

/// Reads one identifier per line; "name<TAB>flag" lines are accepted and
/// only flag values other than 0 mark a target.
LabelVector load_labels(const Graph& g, std::istream& in);
LabelVector labels_from_indices(std::size_t n, std::span<const NodeId> targets);

struct Evaluation {
    std::int64_t f1 = 0;      // |D|
    std::int64_t f2_raw = 0;  // |D ∩ DT|, maximized
    double cv = 0.0;          // aggregate constraint violation
    bool feasible = false;

    /// Minimized form of the second objective.
    std::int64_t f2_min() const noexcept { return -f2_raw; }
    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

class ProblemInstance {
public:
    ProblemInstance(Graph graph, ControlModel model, LabelVector labels);

    const Graph& graph() const noexcept { return graph_; }
    ControlModel model() const noexcept { return model_; }
    const LabelVector& labels() const noexcept { return labels_; }
    std::size_t dimension() const noexcept { return graph_.num_nodes(); }

private:
    Graph graph_;
    ControlModel model_;
    LabelVector labels_;
};

/// Objectives plus one violation computation.
Evaluation evaluate(const ProblemInstance& p, std::span<const std::uint8_t> x);

/// Evaluation entry point that charges every call against a shared budget.
class Evaluator {
public:
    explicit Evaluator(const ProblemInstance& p, unsigned threads = 1) : problem_(&p), threads_(threads ? threads : 1) {}

    Evaluation operator()(std::span<const std::uint8_t> x) {
        count_.fetch_add(1, std::memory_order_relaxed);
        return evaluate(*problem_, x);
    }

    /// Evaluates xs[i] into out[i]. Work is split into contiguous chunks, one
    /// per thread, so results do not depend on the thread count.
    void evaluate_batch(std::span<const DecisionVector> xs, std::span<Evaluation> out);

    std::uint64_t count() const noexcept { return count_.load(std::memory_order_relaxed); }
    const ProblemInstance& problem() const noexcept { return *problem_; }
    unsigned threads() const noexcept { return threads_; }

private:
    const ProblemInstance* problem_;
    unsigned threads_;
    std::atomic<std::uint64_t> count_{0};
};

}  // namespace moncp
