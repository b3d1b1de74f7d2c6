#include "moncp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace moncp {

void SolverConfig::validate() const {
    if (pop_size < 2 || pop_size % 2) throw std::invalid_argument("main population size must be even and >= 2");
    if (active_subpops() && (aux_size < 2 || aux_size % 2))
        throw std::invalid_argument("auxiliary population size must be even and >= 2");
    if (max_evaluations < pop_size + active_subpops() * aux_size)
        throw std::invalid_argument("evaluation budget smaller than the initial populations");
    if (mutation_rate > 1.0) throw std::invalid_argument("mutation rate must be <= 1");
    if (eps_control_fraction < 0.0 || eps_control_fraction > 1.0)
        throw std::invalid_argument("epsilon control fraction must lie in [0, 1]");
    if (eps_exponent <= 0.0) throw std::invalid_argument("epsilon exponent must be positive");
    if (eps0 && *eps0 < 0.0) throw std::invalid_argument("initial epsilon must be non-negative");
    if (cv_rank_weight < 0.0) throw std::invalid_argument("violation rank weight must be non-negative");
    if (threads == 0) throw std::invalid_argument("threads must be >= 1");
}

std::string SolverConfig::variant_tag() const {
    std::string tag = "lscv-mcea";
    std::vector<std::string> parts;
    if (disable_subpop1 && disable_subpop2)
        parts.emplace_back("nopops");
    else if (disable_subpop1)
        parts.emplace_back("nop1");
    else if (disable_subpop2)
        parts.emplace_back("nop2");
    if (disable_rankings) parts.emplace_back("norank");
    if (use_cdp_main) parts.emplace_back("cdp");
    for (std::size_t i = 0; i < parts.size(); ++i) tag += (i ? "+" : "/") + parts[i];
    return tag;
}

FeasibleFront nondominated_feasible_front(std::span<const Individual> pop) {
    std::vector<std::size_t> feasible;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (pop[i].eval.cv == 0.0) feasible.push_back(i);

    FeasibleFront out;
    for (std::size_t i : feasible) {
        bool dominated = false;
        for (std::size_t j : feasible)
            if (dominates(pop[j].eval, pop[i].eval)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        FrontPoint pt{pop[i].eval.f1, pop[i].eval.f2_raw};
        auto it = std::find(out.pf.begin(), out.pf.end(), pt);
        if (it == out.pf.end()) {
            out.pf.push_back(pt);
            out.ps.push_back(pop[i].x);
            out.alternates.emplace_back();
            continue;
        }
        const auto k = static_cast<std::size_t>(it - out.pf.begin());
        auto& alts = out.alternates[k];
        if (pop[i].x != out.ps[k] && std::find(alts.begin(), alts.end(), pop[i].x) == alts.end())
            alts.push_back(pop[i].x);
    }
    // ascending f1, stable for equal keys (cannot happen on a front)
    std::vector<std::size_t> order(out.pf.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.pf[a] < out.pf[b]; });
    FeasibleFront sorted;
    for (std::size_t k : order) {
        sorted.pf.push_back(out.pf[k]);
        sorted.ps.push_back(std::move(out.ps[k]));
        auto alts = std::move(out.alternates[k]);
        std::sort(alts.begin(), alts.end());
        sorted.alternates.push_back(std::move(alts));
    }
    return sorted;
}

AuxiliaryValue auxiliary_evaluate(const Individual& ind, int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("auxiliary task must be 1 or 2");
    return {objective_value(ind.eval, which == 1 ? Objective::F1 : Objective::F2), ind.eval.cv};
}

namespace {

double median_cv(std::span<const Individual> pop) {
    std::vector<double> cv;
    cv.reserve(pop.size());
    for (const auto& ind : pop) cv.push_back(ind.eval.cv);
    std::sort(cv.begin(), cv.end());
    const std::size_t m = cv.size();
    return m % 2 ? cv[m / 2] : 0.5 * (cv[m / 2 - 1] + cv[m / 2]);
}

Population gather(std::span<const Individual> a, std::span<const Individual> b) {
    Population out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Population take(Population& pool, std::span<const std::size_t> idx) {
    Population out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(pool[i]);
    return out;
}

/// Auxiliary population with its task objective.
struct AuxTask {
    Objective objective;
    Population members;
    bool enabled = false;
};

std::vector<double> aux_fitness(const AuxTask& task, const SolverConfig& cfg) {
    auto evals = evaluations_of(task.members);
    if (!cfg.disable_rankings) return rankings_fitness(evals, task.objective, cfg.cv_rank_weight);
    auto order = select_by_violation_then_objective(evals, evals.size(), task.objective);
    std::vector<double> fit(evals.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) fit[order[pos]] = static_cast<double>(pos);
    return fit;
}

std::vector<std::size_t> aux_survivors(std::span<const Evaluation> pool, std::size_t count, Objective obj,
                                       const SolverConfig& cfg) {
    if (cfg.disable_rankings) return select_by_violation_then_objective(pool, count, obj);
    return select_by_rankings(pool, count, obj, cfg.cv_rank_weight);
}

}  // namespace

namespace detail {

RunResult run_generational(const ProblemInstance& p, const SolverConfig& cfg, std::string algorithm,
                           const SolverHooks& hooks) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = p.dimension();
    const double mutation_rate = cfg.mutation_rate < 0.0 ? 1.0 / static_cast<double>(n) : cfg.mutation_rate;

    Rng rng(cfg.seed);
    Evaluator evaluator(p, cfg.threads);

    Population pop = initialize_population(evaluator, cfg.pop_size, rng);
    AuxTask aux[2] = {{Objective::F1, {}, !cfg.disable_subpop1}, {Objective::F2, {}, !cfg.disable_subpop2}};
    for (auto& task : aux)
        if (task.enabled) task.members = initialize_population(evaluator, cfg.aux_size, rng);

    const std::size_t main_kids = cfg.pop_size / 2;
    const std::size_t aux_kids = cfg.aux_size / 2;
    const std::size_t per_generation = main_kids + cfg.active_subpops() * aux_kids;
    const double planned_generations =
        static_cast<double>(cfg.max_evaluations - std::min<std::uint64_t>(cfg.max_evaluations, evaluator.count())) /
        static_cast<double>(per_generation);

    EpsilonSchedule schedule{cfg.eps0.value_or(median_cv(pop)), cfg.eps_control_fraction * planned_generations,
                             cfg.eps_exponent};
    auto epsilon_at = [&](std::uint32_t gen) { return cfg.use_cdp_main ? 0.0 : schedule.level(gen); };

    // rank / crowding of the current main population, for mating selection
    Selection main_state = epsilon_select(evaluations_of(pop), pop.size(), epsilon_at(0));
    {
        Population ordered = take(pop, main_state.survivors);
        pop = std::move(ordered);
    }

    RunResult result;
    result.algorithm = std::move(algorithm);
    result.config = cfg;

    auto record = [&](std::uint32_t gen, double eps) {
        if (!cfg.record_trace) return;
        TraceRow row;
        row.generation = gen;
        row.evaluations = evaluator.count();
        row.epsilon = eps;
        std::size_t feasible = 0;
        for (const auto& ind : pop) {
            if (ind.eval.cv != 0.0) continue;
            ++feasible;
            if (!row.best_feasible_f1 || ind.eval.f1 < *row.best_feasible_f1) row.best_feasible_f1 = ind.eval.f1;
        }
        row.feasible_ratio = static_cast<double>(feasible) / static_cast<double>(pop.size());
        row.front_size = nondominated_feasible_front(pop).pf.size();
        result.trace.push_back(row);
    };
    record(0, epsilon_at(0));

    std::uint32_t gen = 0;
    while (evaluator.count() < cfg.max_evaluations) {
        const double eps = epsilon_at(gen);

        // mating: main population by (ε-feasibility, front rank, crowding)
        const Comparator main_better = [&](std::size_t i, std::size_t j) {
            const double ci = pop[i].eval.cv, cj = pop[j].eval.cv;
            const bool fi = ci <= eps, fj = cj <= eps;
            if (fi && fj) {
                if (main_state.rank[i] != main_state.rank[j]) return main_state.rank[i] < main_state.rank[j];
                return main_state.crowding[i] > main_state.crowding[j];
            }
            if (fi != fj) return fi;
            return ci < cj;
        };
        auto pool = tournament_select(pop.size(), main_kids, main_better, rng);
        std::vector<DecisionVector> kids = make_offspring(pop, pool, main_kids, mutation_rate, rng);

        for (auto& task : aux) {
            if (!task.enabled) continue;
            auto fit = aux_fitness(task, cfg);
            const Comparator better = [&](std::size_t i, std::size_t j) { return fit[i] < fit[j]; };
            auto mates = tournament_select(task.members.size(), aux_kids, better, rng);
            auto more = make_offspring(task.members, mates, aux_kids, mutation_rate, rng);
            for (auto& k : more) kids.push_back(std::move(k));
        }

        std::vector<Evaluation> kid_evals(kids.size());
        evaluator.evaluate_batch(kids, kid_evals);
        Population mixed(kids.size());
        for (std::size_t i = 0; i < kids.size(); ++i) mixed[i] = {std::move(kids[i]), kid_evals[i], gen + 1};
        if (hooks.on_offspring) hooks.on_offspring(gen + 1, mixed);

        // environmental selection, every population sees the full mixed set
        {
            Population combined = gather(pop, mixed);
            if (hooks.on_selection) hooks.on_selection(gen + 1, 0, combined);
            auto evals = evaluations_of(combined);
            const double next_eps = epsilon_at(gen + 1);
            main_state = epsilon_select(evals, cfg.pop_size, next_eps);
            pop = take(combined, main_state.survivors);
        }
        for (int k = 0; k < 2; ++k) {
            auto& task = aux[k];
            if (!task.enabled) continue;
            Population combined = gather(task.members, mixed);
            if (hooks.on_selection) hooks.on_selection(gen + 1, k + 1, combined);
            auto evals = evaluations_of(combined);
            auto keep = aux_survivors(evals, cfg.aux_size, task.objective, cfg);
            task.members = take(combined, keep);
        }
        ++gen;
        record(gen, epsilon_at(gen));
    }

    result.generations = gen;
    result.evaluations = evaluator.count();
    result.front = nondominated_feasible_front(pop);
    result.feasible_found = !result.front.pf.empty();
    if (!result.feasible_found) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& ind : pop) best = std::min(best, ind.eval.cv);
        std::vector<Evaluation> at_min;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < pop.size(); ++i)
            if (pop[i].eval.cv == best) {
                at_min.push_back(pop[i].eval);
                idx.push_back(i);
            }
        auto fronts = nondominated_sort(at_min);
        for (std::size_t pos : fronts.front()) {
            const auto& x = pop[idx[pos]].x;
            if (std::find(result.min_cv_set.begin(), result.min_cv_set.end(), x) == result.min_cv_set.end())
                result.min_cv_set.push_back(x);
        }
        result.min_cv = best;
    }
    result.population = std::move(pop);
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace detail

RunResult solve(const ProblemInstance& p, const SolverConfig& cfg, const SolverHooks& hooks) {
    return detail::run_generational(p, cfg, cfg.variant_tag(), hooks);
}

}  // namespace moncp
