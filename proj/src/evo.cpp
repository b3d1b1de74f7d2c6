#include "moncp/evo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moncp {

std::vector<Evaluation> evaluations_of(std::span<const Individual> pop) {
    std::vector<Evaluation> out;
    out.reserve(pop.size());
    for (const auto& ind : pop) out.push_back(ind.eval);
    return out;
}

double EpsilonSchedule::level(double generation) const noexcept {
    if (generation >= control_generations || control_generations <= 0) return 0.0;
    return eps0 * std::pow(1.0 - generation / control_generations, exponent);
}

DecisionVector random_vector(std::size_t n, Rng& rng) {
    DecisionVector x(n);
    std::bernoulli_distribution coin(0.5);
    for (auto& b : x) b = coin(rng) ? 1 : 0;
    return x;
}

Population initialize_population(Evaluator& eval, std::size_t size, Rng& rng) {
    std::vector<DecisionVector> xs;
    xs.reserve(size);
    for (std::size_t i = 0; i < size; ++i) xs.push_back(random_vector(eval.problem().dimension(), rng));
    std::vector<Evaluation> evals(size);
    eval.evaluate_batch(xs, evals);
    Population pop(size);
    for (std::size_t i = 0; i < size; ++i) pop[i] = {std::move(xs[i]), evals[i], 0};
    return pop;
}

std::pair<DecisionVector, DecisionVector> uniform_crossover(const DecisionVector& a, const DecisionVector& b, Rng& rng) {
    if (a.size() != b.size()) throw std::invalid_argument("crossover parents differ in length");
    std::pair<DecisionVector, DecisionVector> kids{a, b};
    std::bernoulli_distribution swap(0.5);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (swap(rng)) std::swap(kids.first[i], kids.second[i]);
    return kids;
}

DecisionVector bitflip_mutation(DecisionVector x, double rate, Rng& rng) {
    if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("mutation rate must lie in [0, 1]");
    if (rate == 0.0) return x;
    std::bernoulli_distribution flip(rate);
    for (auto& b : x)
        if (flip(rng)) b ^= 1;
    return x;
}

bool dominates(const Evaluation& a, const Evaluation& b) noexcept {
    const auto a2 = a.f2_min(), b2 = b.f2_min();
    return a.f1 <= b.f1 && a2 <= b2 && (a.f1 < b.f1 || a2 < b2);
}

bool constrained_dominates(const Evaluation& a, const Evaluation& b) noexcept {
    const bool fa = a.cv == 0.0, fb = b.cv == 0.0;
    if (fa && fb) return dominates(a, b);
    if (fa != fb) return fa;
    return a.cv < b.cv;
}

std::vector<std::vector<std::size_t>> nondominated_sort(std::span<const Evaluation> evals) {
    std::vector<std::size_t> order(evals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (evals[i].f1 != evals[j].f1) return evals[i].f1 < evals[j].f1;
        return evals[i].f2_min() < evals[j].f2_min();
    });
    // In lexicographic order the last member of each front has that front's
    // smallest second coordinate, so it alone decides whether a new point is
    // dominated by the front.
    std::vector<std::vector<std::size_t>> fronts;
    for (std::size_t idx : order) {
        const auto& p = evals[idx];
        std::size_t k = 0;
        for (; k < fronts.size(); ++k)
            if (!dominates(evals[fronts[k].back()], p)) break;
        if (k == fronts.size()) fronts.emplace_back();
        fronts[k].push_back(idx);
    }
    for (auto& f : fronts) std::sort(f.begin(), f.end());
    return fronts;
}

std::vector<double> crowding_distance(std::span<const Evaluation> evals, std::span<const std::size_t> front) {
    const std::size_t m = front.size();
    std::vector<double> dist(m, 0.0);
    if (m == 0) return dist;

    // Unique objective vectors, first occurrence wins.
    std::vector<std::size_t> uniq;  // positions into front
    for (std::size_t a = 0; a < m; ++a) {
        const auto& e = evals[front[a]];
        bool seen = false;
        for (std::size_t u : uniq) {
            const auto& f = evals[front[u]];
            if (f.f1 == e.f1 && f.f2_raw == e.f2_raw) {
                seen = true;
                break;
            }
        }
        if (!seen) uniq.push_back(a);
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (uniq.size() <= 2) {
        for (std::size_t u : uniq) dist[u] = inf;
        return dist;
    }
    for (int obj = 0; obj < 2; ++obj) {
        auto value = [&](std::size_t pos) {
            const auto& e = evals[front[pos]];
            return obj == 0 ? static_cast<double>(e.f1) : static_cast<double>(e.f2_min());
        };
        auto sorted = uniq;
        std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
        const double lo = value(sorted.front()), hi = value(sorted.back());
        dist[sorted.front()] = inf;
        dist[sorted.back()] = inf;
        if (hi == lo) continue;
        for (std::size_t k = 1; k + 1 < sorted.size(); ++k)
            dist[sorted[k]] += (value(sorted[k + 1]) - value(sorted[k - 1])) / (hi - lo);
    }
    return dist;
}

Selection epsilon_select(std::span<const Evaluation> pool, std::size_t count, double epsilon) {
    if (pool.size() < count) throw std::invalid_argument("selection pool smaller than target size");
    std::vector<std::size_t> relaxed, rest;
    for (std::size_t i = 0; i < pool.size(); ++i) (pool[i].cv <= epsilon ? relaxed : rest).push_back(i);

    Selection sel;
    sel.survivors.reserve(count);
    std::size_t last_rank = 0;
    if (!relaxed.empty()) {
        std::vector<Evaluation> sub;
        sub.reserve(relaxed.size());
        for (std::size_t i : relaxed) sub.push_back(pool[i]);
        auto fronts = nondominated_sort(sub);
        for (std::size_t r = 0; r < fronts.size() && sel.survivors.size() < count; ++r) {
            auto crowd = crowding_distance(sub, fronts[r]);
            const std::size_t room = count - sel.survivors.size();
            std::vector<std::size_t> order(fronts[r].size());
            std::iota(order.begin(), order.end(), 0);
            if (order.size() > room) {
                std::stable_sort(order.begin(), order.end(),
                                 [&](std::size_t a, std::size_t b) { return crowd[a] > crowd[b]; });
                order.resize(room);
            }
            for (std::size_t pos : order) {
                sel.survivors.push_back(relaxed[fronts[r][pos]]);
                sel.rank.push_back(r);
                sel.crowding.push_back(crowd[pos]);
            }
            last_rank = r + 1;
        }
    }
    if (sel.survivors.size() < count) {
        std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return pool[a].cv < pool[b].cv; });
        for (std::size_t i = 0; sel.survivors.size() < count; ++i) {
            sel.survivors.push_back(rest[i]);
            sel.rank.push_back(last_rank);
            sel.crowding.push_back(0.0);
        }
    }
    return sel;
}

double objective_value(const Evaluation& e, Objective which) noexcept {
    return which == Objective::F1 ? static_cast<double>(e.f1) : static_cast<double>(e.f2_min());
}

std::vector<double> mean_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t lo = 0; lo < order.size();) {
        std::size_t hi = lo;
        while (hi + 1 < order.size() && values[order[hi + 1]] == values[order[lo]]) ++hi;
        const double r = (static_cast<double>(lo + 1) + static_cast<double>(hi + 1)) / 2.0;
        for (std::size_t k = lo; k <= hi; ++k) ranks[order[k]] = r;
        lo = hi + 1;
    }
    return ranks;
}

std::vector<double> rankings_fitness(std::span<const Evaluation> evals, Objective which, double cv_weight) {
    std::vector<double> obj, cv;
    obj.reserve(evals.size());
    cv.reserve(evals.size());
    for (const auto& e : evals) {
        obj.push_back(objective_value(e, which));
        cv.push_back(e.cv);
    }
    auto r_obj = mean_ranks(obj);
    auto r_cv = mean_ranks(cv);
    for (std::size_t i = 0; i < r_obj.size(); ++i) r_obj[i] += cv_weight * r_cv[i];
    return r_obj;
}

std::vector<std::size_t> select_by_rankings(std::span<const Evaluation> evals, std::size_t count, Objective which,
                                            double cv_weight) {
    auto fit = rankings_fitness(evals, which, cv_weight);
    std::vector<std::size_t> order(evals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fit[a] < fit[b]; });
    order.resize(std::min(count, order.size()));
    return order;
}

std::vector<std::size_t> select_by_violation_then_objective(std::span<const Evaluation> evals, std::size_t count,
                                                            Objective which) {
    std::vector<std::size_t> order(evals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (evals[a].cv != evals[b].cv) return evals[a].cv < evals[b].cv;
        return objective_value(evals[a], which) < objective_value(evals[b], which);
    });
    order.resize(std::min(count, order.size()));
    return order;
}

std::vector<std::size_t> tournament_select(std::size_t pop_size, std::size_t k, const Comparator& better, Rng& rng) {
    if (pop_size == 0) throw std::invalid_argument("tournament on an empty population");
    std::uniform_int_distribution<std::size_t> pick(0, pop_size - 1);
    std::vector<std::size_t> pool;
    pool.reserve(k);
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t a = pick(rng), b = pick(rng);
        pool.push_back(better(b, a) ? b : a);
    }
    return pool;
}

std::vector<DecisionVector> make_offspring(std::span<const Individual> parents, std::span<const std::size_t> pool,
                                           std::size_t count, double mutation_rate, Rng& rng) {
    std::vector<DecisionVector> kids;
    kids.reserve(count);
    if (pool.empty()) return kids;
    for (std::size_t i = 0; kids.size() < count; i += 2) {
        const auto& a = parents[pool[i % pool.size()]].x;
        const auto& b = parents[pool[(i + 1) % pool.size()]].x;
        auto [c1, c2] = uniform_crossover(a, b, rng);
        kids.push_back(bitflip_mutation(std::move(c1), mutation_rate, rng));
        if (kids.size() < count) kids.push_back(bitflip_mutation(std::move(c2), mutation_rate, rng));
    }
    return kids;
}

}  // namespace moncp
