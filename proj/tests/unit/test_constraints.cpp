#include <doctest.h>

#include <numeric>
#include <random>

#include "../support/fixtures.hpp"
#include "moncp/constraints.hpp"

using namespace moncp;
using namespace moncp::testing;

TEST_SUITE("constraints") {

TEST_CASE("dominating set violation") {
    auto path = path_graph(3);
    CHECK(violation_mds(path, DecisionVector{0, 1, 0}).total_violation == 0.0);
    auto empty = violation_mds(path, DecisionVector{0, 0, 0});
    CHECK(empty.total_violation == 3.0);
    CHECK(empty.num_constraints == 3);
    CHECK(empty.violated_count == 3);

    // one leaf of the star: the centre and that leaf are covered, three leaves are not
    auto leaf = violation_mds(star_k14(), DecisionVector{0, 1, 0, 0, 0}, true);
    CHECK(leaf.total_violation == 3.0);
    CHECK(leaf.detail == std::vector<double>{0, 0, 1, 1, 1});
    CHECK_THROWS_AS(violation_mds(path, DecisionVector{1, 0}), std::invalid_argument);
}

TEST_CASE("vertex cover violation") {
    auto tri = triangle();
    CHECK(violation_ncua(tri, DecisionVector{1, 1, 0}).total_violation == 0.0);
    auto one = violation_ncua(tri, DecisionVector{1, 0, 0}, true);
    CHECK(one.total_violation == 1.0);
    CHECK(one.num_constraints == 3);
    CHECK(violation_ncua(tri, DecisionVector{0, 0, 0}).total_violation == 3.0);
}

TEST_CASE("feedback vertex set violation") {
    auto cyc = directed_cycle3();
    CHECK(violation_dfvs(cyc, DecisionVector{1, 0, 0}).total_violation == 0.0);
    CHECK(violation_dfvs(cyc, DecisionVector{0, 0, 0}).total_violation == 3.0);
    auto fx = violation_dfvs(dfvs_fixture(), DecisionVector{1, 0, 0, 0}, true);
    CHECK(fx.total_violation == 1.0);
    CHECK(fx.num_constraints == 2);  // one source + cycle family
    CHECK(fx.detail == std::vector<double>{1, 0});
    CHECK_THROWS_AS(violation_dfvs(triangle(), DecisionVector{0, 0, 0}), UsageError);
}

TEST_CASE("is_feasible fixtures and model compatibility") {
    CHECK(is_feasible(ControlModel::MDS, star_k14(), DecisionVector(5, 1)));
    CHECK(is_feasible(ControlModel::NCUA, triangle(), DecisionVector{0, 1, 1}));
    CHECK(is_feasible(ControlModel::DFVS, directed_chain3(), DecisionVector{1, 0, 0}));
    CHECK_THROWS_AS(is_feasible(ControlModel::MDS, directed_chain3(), DecisionVector{1, 1, 1}), UsageError);
    CHECK_THROWS_AS(is_feasible(ControlModel::DFVS, triangle(), DecisionVector{1, 1, 1}), UsageError);
    CHECK(parse_control_model("ncua") == ControlModel::NCUA);
    CHECK_THROWS(parse_control_model("mms"));
}

TEST_CASE("violation is monotone and the all-ones vector is feasible") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 150; ++rep) {
        const auto model = static_cast<ControlModel>(rep % 3);
        const bool directed = model == ControlModel::DFVS;
        auto g = random_graph(14, 0.2, directed, rng);
        CHECK(is_feasible(model, g, DecisionVector(14, 1)));
        auto x = random_bits(14, 0.3, rng);
        const double base = violation(model, g, x).total_violation;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i]) continue;
            auto y = x;
            y[i] = 1;
            CHECK(violation(model, g, y).total_violation <= base);
        }
        auto r = violation(model, g, x);
        CHECK((r.total_violation == 0.0) == (r.violated_count == 0));
    }
}

TEST_CASE("vertex cover feasibility equals an edge scan") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        auto g = random_graph(12, 0.3, false, rng);
        auto x = random_bits(12, 0.6, rng);
        bool covered = true;
        for (auto [u, v] : g.edges()) covered = covered && (x[u] || x[v]);
        CHECK(is_feasible(ControlModel::NCUA, g, x) == covered);
    }
}

TEST_CASE("dominating set feasibility is invariant under relabelling") {
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 100; ++rep) {
        auto g = random_graph(12, 0.2, false, rng);
        auto x = random_bits(12, 0.35, rng);
        std::vector<NodeId> perm(12);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> e;
        for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
        auto h = Graph::from_edges(12, e, false);
        DecisionVector y(12);
        for (std::size_t i = 0; i < 12; ++i) y[perm[i]] = x[i];
        CHECK(is_feasible(ControlModel::MDS, g, x) == is_feasible(ControlModel::MDS, h, y));
    }
}

TEST_CASE("acyclicity check agrees with explicit weight search") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> size(2, 6);
    int agreed = 0;
    for (int rep = 0; rep < 120; ++rep) {
        const std::size_t n = size(rng);
        auto g = random_graph(n, 0.35, true, rng);
        auto x = random_bits(n, 0.3, rng);
        const bool weights = dfvs_weights_bruteforce(g, x);
        CHECK(weights == dfvs_weights_satisfiable(g, x));
        const bool expected = weights && sources_selected(g, x);
        CHECK(is_feasible(ControlModel::DFVS, g, x) == expected);
        agreed += 1;
    }
    CHECK(agreed == 120);
}

TEST_CASE("normalized violation") {
    auto r = violation_mds(path_graph(4), DecisionVector{0, 0, 0, 0});
    CHECK(r.normalized() == doctest::Approx(1.0));
}

}
