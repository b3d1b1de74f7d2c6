#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moncp/evo.hpp"
#include "moncp/problem.hpp"

namespace moncp {

struct SolverConfig {
    std::size_t pop_size = 300;        // N, main population
    std::size_t aux_size = 90;         // N1, each auxiliary population
    std::uint64_t max_evaluations = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;

    double mutation_rate = -1.0;       // < 0 selects 1/n
    double eps_control_fraction = 0.8; // Tc as a fraction of the planned generations
    double eps_exponent = 2.0;         // cp
    std::optional<double> eps0;        // default: median cv of the initial main population
    double cv_rank_weight = 1.0;       // weight on R_cv in the rankings fitness

    bool disable_subpop1 = false;
    bool disable_subpop2 = false;
    bool disable_rankings = false;     // subpops order by (cv, objective) instead
    bool use_cdp_main = false;         // ε fixed at 0 in the main population
    bool record_trace = true;

    /// Throws std::invalid_argument describing the first violated rule.
    void validate() const;
    std::size_t active_subpops() const noexcept { return (disable_subpop1 ? 0 : 1) + (disable_subpop2 ? 0 : 1); }
    /// Short tag naming the variant, e.g. "lscv-mcea/nopops".
    std::string variant_tag() const;
};

struct TraceRow {
    std::uint32_t generation = 0;
    std::uint64_t evaluations = 0;
    double epsilon = 0.0;
    double feasible_ratio = 0.0;
    std::size_t front_size = 0;
    std::optional<std::int64_t> best_feasible_f1;
};

struct FrontPoint {
    std::int64_t f1 = 0;
    std::int64_t f2 = 0;  // f2_raw, maximized
    friend bool operator==(const FrontPoint&, const FrontPoint&) = default;
    friend auto operator<=>(const FrontPoint&, const FrontPoint&) = default;
};

/// Feasible non-dominated subset of a population; PF ascending in f1.
struct FeasibleFront {
    std::vector<DecisionVector> ps;                       // one representative per PF point
    std::vector<FrontPoint> pf;                           // aligned with ps
    std::vector<std::vector<DecisionVector>> alternates;  // other distinct vectors per PF point
};

FeasibleFront nondominated_feasible_front(std::span<const Individual> pop);

struct RunResult {
    std::string algorithm;
    SolverConfig config;
    Population population;
    FeasibleFront front;
    bool feasible_found = false;
    /// When nothing feasible survived: non-dominated members at minimum cv.
    std::vector<DecisionVector> min_cv_set;
    double min_cv = 0.0;
    std::uint64_t evaluations = 0;
    std::uint32_t generations = 0;
    double wall_seconds = 0.0;
    std::vector<TraceRow> trace;
};

/// Observation points for tests and diagnostics. `pool` is the combined
/// population a selection step chooses from; which = 0 main, 1/2 auxiliary.
struct SolverHooks {
    std::function<void(std::uint32_t generation, std::span<const Individual> mixed)> on_offspring;
    std::function<void(std::uint32_t generation, int which, std::span<const Individual> pool)> on_selection;
};

/// Multi-population ε-constrained solver: a main population on both
/// objectives plus two auxiliary populations, one per objective, sharing all
/// offspring each generation.
RunResult solve(const ProblemInstance& p, const SolverConfig& cfg, const SolverHooks& hooks = {});

struct AuxiliaryValue {
    double objective = 0.0;
    double cv = 0.0;
};

/// Single-objective view of an evaluated individual: f1 (which = 1) or
/// -f2_raw (which = 2). No evaluation is spent.
AuxiliaryValue auxiliary_evaluate(const Individual& ind, int which);

namespace detail {
/// Shared generational loop; NSGA-II-CDP runs it with no auxiliaries and ε = 0.
RunResult run_generational(const ProblemInstance& p, const SolverConfig& cfg, std::string algorithm,
                           const SolverHooks& hooks);
}

}  // namespace moncp
