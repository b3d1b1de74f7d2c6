#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "moncp/problem.hpp"

namespace moncp {

using Rng = std::mt19937_64;

struct Individual {
    DecisionVector x;
    Evaluation eval;
    std::uint32_t generation = 0;  // birth generation, diagnostics only
};

using Population = std::vector<Individual>;

std::vector<Evaluation> evaluations_of(std::span<const Individual> pop);

/// ε(t) = eps0 · (1 − t/Tc)^cp for t < Tc, else 0.
struct EpsilonSchedule {
    double eps0 = 0.0;
    double control_generations = 0.0;  // Tc
    double exponent = 2.0;             // cp

    double level(double generation) const noexcept;
};

DecisionVector random_vector(std::size_t n, Rng& rng);

/// `size` uniformly random bit vectors, evaluated through `eval` (one budget
/// unit each).
Population initialize_population(Evaluator& eval, std::size_t size, Rng& rng);

/// Per-position swap with probability 0.5.
std::pair<DecisionVector, DecisionVector> uniform_crossover(const DecisionVector& a, const DecisionVector& b, Rng& rng);

/// Flips every bit independently with probability `rate`.
DecisionVector bitflip_mutation(DecisionVector x, double rate, Rng& rng);

/// Pareto dominance on the minimized pair (f1, -f2_raw). Constraints ignored.
bool dominates(const Evaluation& a, const Evaluation& b) noexcept;

/// Constrained dominance: feasible beats infeasible, lower violation wins
/// among infeasible, Pareto dominance among feasible.
bool constrained_dominates(const Evaluation& a, const Evaluation& b) noexcept;

/// Fronts of indices into `evals`, best first, members in ascending index
/// order. O(N log N + N·F) for two objectives.
std::vector<std::vector<std::size_t>> nondominated_sort(std::span<const Evaluation> evals);

/// Crowding distance of each member of `front` (indices into `evals`).
/// Boundary points get +inf; among repeated objective vectors only the first
/// occurrence keeps its distance, the copies get 0.
std::vector<double> crowding_distance(std::span<const Evaluation> evals, std::span<const std::size_t> front);

struct Selection {
    std::vector<std::size_t> survivors;  // indices into the pool
    std::vector<std::size_t> rank;       // 0-based front, aligned with survivors
    std::vector<double> crowding;        // aligned with survivors
};

/// Environmental selection of the main population under violation level ε.
/// Members with cv ≤ ε compete by front then crowding; the rest follow by
/// ascending cv (stable).
Selection epsilon_select(std::span<const Evaluation> pool, std::size_t count, double epsilon);

enum class Objective { F1, F2 };

double objective_value(const Evaluation& e, Objective which) noexcept;

/// 1-based ranks; tied values share the mean of their positions.
std::vector<double> mean_ranks(std::span<const double> values);

/// R_obj + weight · R_cv; lower is better.
std::vector<double> rankings_fitness(std::span<const Evaluation> evals, Objective which, double cv_weight = 1.0);

/// Indices of the `count` best members under rankings fitness (stable).
std::vector<std::size_t> select_by_rankings(std::span<const Evaluation> evals, std::size_t count, Objective which,
                                            double cv_weight = 1.0);

/// Indices of the `count` best by (cv, objective) lexicographic order.
std::vector<std::size_t> select_by_violation_then_objective(std::span<const Evaluation> evals, std::size_t count,
                                                            Objective which);

/// `better(i, j)` is true when member i beats member j.
using Comparator = std::function<bool(std::size_t, std::size_t)>;

/// `k` binary tournaments with replacement over [0, pop_size).
std::vector<std::size_t> tournament_select(std::size_t pop_size, std::size_t k, const Comparator& better, Rng& rng);

/// Produces `count` children from a mating pool: consecutive pool entries are
/// crossed, both children kept until `count` is reached, then mutated.
std::vector<DecisionVector> make_offspring(std::span<const Individual> parents, std::span<const std::size_t> pool,
                                           std::size_t count, double mutation_rate, Rng& rng);

}  // namespace moncp
