#include <doctest.h>

#include <map>

#include "../support/fixtures.hpp"
#include "moncp/oracle.hpp"
#include "moncp/solver.hpp"

using namespace moncp;
using namespace moncp::testing;

namespace {

SolverConfig small_config(std::uint64_t seed, std::uint64_t budget = 10000) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.max_evaluations = budget;
    return cfg;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("fixture fronts") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto star = solve(star_instance(), small_config(seed));
        CHECK(star.front.pf == std::vector<FrontPoint>{{1, 0}, {2, 1}});
        CHECK(star.front.ps[0] == DecisionVector{1, 0, 0, 0, 0});
        CHECK(star.front.ps[1] == DecisionVector{1, 1, 0, 0, 0});

        auto tri = solve(triangle_instance(), small_config(seed));
        CHECK(tri.front.pf == std::vector<FrontPoint>{{2, 1}});

        auto fx = solve(dfvs_instance(), small_config(seed));
        CHECK(fx.front.pf == std::vector<FrontPoint>{{2, 1}});
        CHECK(fx.front.ps[0] == DecisionVector{0, 0, 1, 1});
    }
}

TEST_CASE("auxiliary projections") {
    Individual ind{DecisionVector{1, 1, 1, 0}, Evaluation{3, 2, 0.0, true}, 0};
    CHECK(auxiliary_evaluate(ind, 1).objective == 3);
    CHECK(auxiliary_evaluate(ind, 2).objective == -2);

    auto p = star_instance();
    Individual zero{DecisionVector(5, 0), evaluate(p, DecisionVector(5, 0)), 0};
    CHECK(auxiliary_evaluate(zero, 1).objective == 0);
    CHECK(auxiliary_evaluate(zero, 1).cv > 0);
    Individual ones{DecisionVector(5, 1), evaluate(p, DecisionVector(5, 1)), 0};
    CHECK(auxiliary_evaluate(ones, 2).objective == -1);
    CHECK(auxiliary_evaluate(ones, 2).cv == 0);
    CHECK_THROWS(auxiliary_evaluate(ones, 3));
}

TEST_CASE("feasible front filter") {
    Population pop;
    CHECK(nondominated_feasible_front(pop).pf.empty());
    pop.push_back({DecisionVector{1, 0, 0}, {1, 0, 0.0, true}, 0});
    CHECK(nondominated_feasible_front(pop).pf.size() == 1);
    pop.push_back({DecisionVector{1, 1, 0}, {2, 1, 0.0, true}, 0});
    pop.push_back({DecisionVector{1, 1, 1}, {3, 1, 0.0, true}, 0});
    pop.push_back({DecisionVector{0, 1, 1}, {2, 1, 0.0, true}, 0});
    pop.push_back({DecisionVector{1, 1, 0}, {2, 1, 0.0, true}, 0});
    pop.push_back({DecisionVector{0, 0, 0}, {0, 0, 3.0, false}, 0});
    auto f = nondominated_feasible_front(pop);
    CHECK(f.pf == std::vector<FrontPoint>{{1, 0}, {2, 1}});
    CHECK(f.alternates[1].size() == 1);  // {0,1,1}; the repeat of {1,1,0} is dropped
}

TEST_CASE("config validation") {
    SolverConfig cfg;
    cfg.pop_size = 301;
    CHECK_THROWS(cfg.validate());
    cfg = {};
    cfg.aux_size = 3;
    CHECK_THROWS(cfg.validate());
    cfg = {};
    cfg.max_evaluations = 100;
    CHECK_THROWS(cfg.validate());
    cfg = {};
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.variant_tag() == "lscv-mcea");
    cfg.disable_subpop1 = cfg.disable_subpop2 = true;
    CHECK(cfg.variant_tag() == "lscv-mcea/nopops");
}

TEST_CASE("budget discipline and determinism") {
    std::mt19937_64 rng(12);
    auto g = random_graph(30, 0.15, false, rng);
    ProblemInstance p(g, ControlModel::MDS, labels_from_indices(30, std::vector<NodeId>{0, 5, 7, 11}));
    auto cfg = small_config(5, 5000);
    cfg.pop_size = 40;
    cfg.aux_size = 12;
    auto a = solve(p, cfg);
    CHECK(a.evaluations >= cfg.max_evaluations);
    CHECK(a.evaluations <= cfg.max_evaluations + cfg.pop_size + 2 * cfg.aux_size);
    auto b = solve(p, cfg);
    CHECK(a.front.pf == b.front.pf);
    CHECK(a.front.ps == b.front.ps);
    for (std::size_t i = 0; i < a.population.size(); ++i) CHECK(a.population[i].x == b.population[i].x);

    cfg.threads = 4;
    auto c = solve(p, cfg);
    CHECK(c.front.pf == a.front.pf);
    CHECK(c.front.ps == a.front.ps);
}

TEST_CASE("every generation shares one offspring set with all three selections") {
    std::mt19937_64 rng(13);
    ProblemInstance p(random_graph(25, 0.2, true, rng), ControlModel::DFVS,
                      labels_from_indices(25, std::vector<NodeId>{1, 2, 3}));
    auto cfg = small_config(9, 3000);
    cfg.pop_size = 30;
    cfg.aux_size = 10;

    std::map<std::uint32_t, std::vector<DecisionVector>> mixed;
    std::map<std::pair<std::uint32_t, int>, std::vector<DecisionVector>> tails;
    SolverHooks hooks;
    hooks.on_offspring = [&](std::uint32_t gen, std::span<const Individual> kids) {
        for (const auto& k : kids) mixed[gen].push_back(k.x);
        CHECK(kids.size() == cfg.pop_size / 2 + cfg.aux_size);
    };
    hooks.on_selection = [&](std::uint32_t gen, int which, std::span<const Individual> pool) {
        const std::size_t own = which == 0 ? cfg.pop_size : cfg.aux_size;
        for (std::size_t i = own; i < pool.size(); ++i) tails[{gen, which}].push_back(pool[i].x);
    };
    auto r = solve(p, cfg, hooks);
    REQUIRE(!mixed.empty());
    CHECK(mixed.size() == r.generations);
    for (const auto& [gen, kids] : mixed)
        for (int which = 0; which < 3; ++which) CHECK(tails[{gen, which}] == kids);
}

TEST_CASE("best feasible size never regresses once ε reaches zero") {
    std::mt19937_64 rng(21);
    ProblemInstance p(random_graph(40, 0.1, false, rng), ControlModel::NCUA,
                      labels_from_indices(40, std::vector<NodeId>{3, 8, 13, 21}));
    auto cfg = small_config(4, 20000);
    cfg.pop_size = 60;
    cfg.aux_size = 18;
    auto r = solve(p, cfg);
    std::optional<std::int64_t> best;
    for (const auto& row : r.trace) {
        if (row.epsilon != 0.0 || !row.best_feasible_f1) continue;
        if (best) CHECK(*row.best_feasible_f1 <= *best);
        best = row.best_feasible_f1;
    }
    CHECK(best.has_value());
    double prev = r.trace.front().epsilon;
    for (const auto& row : r.trace) {
        CHECK(row.epsilon <= prev);
        prev = row.epsilon;
    }
}

TEST_CASE("nopops runs a single population") {
    auto cfg = small_config(2, 2000);
    cfg.disable_subpop1 = cfg.disable_subpop2 = true;
    std::size_t selections = 0;
    SolverHooks hooks;
    hooks.on_selection = [&](std::uint32_t, int which, std::span<const Individual>) {
        CHECK(which == 0);
        ++selections;
    };
    auto r = solve(star_instance(), cfg, hooks);
    CHECK(r.algorithm == "lscv-mcea/nopops");
    CHECK(selections == r.generations);
    CHECK(r.front.pf == std::vector<FrontPoint>{{1, 0}, {2, 1}});
}

TEST_CASE("infeasible endgame is reported, not thrown") {
    // a 2-node budget-starved run on a large cycle-rich graph keeps everything infeasible
    std::mt19937_64 rng(77);
    ProblemInstance p(random_graph(200, 0.2, true, rng), ControlModel::DFVS, labels_from_indices(200, {}));
    SolverConfig cfg;
    cfg.pop_size = 2;
    cfg.aux_size = 2;
    cfg.max_evaluations = 6;
    cfg.seed = 1;
    auto r = solve(p, cfg);
    CHECK_FALSE(r.feasible_found);
    CHECK(r.front.pf.empty());
    CHECK_FALSE(r.min_cv_set.empty());
    CHECK(r.min_cv > 0);
}

}
