#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "moncp/metrics.hpp"

using namespace moncp;

namespace {
Front front(std::initializer_list<Point2> pts) { return Front{pts, ""}; }
}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("reference front as union") {
    auto a = front({{1, 0}, {2, 1}});
    std::vector<Front> same{a, a};
    CHECK(union_reference_front(same).points == a.points);

    std::vector<Front> pair{front({{1, 0}}), front({{2, 1}})};
    CHECK(union_reference_front(pair).points == std::vector<Point2>{{1, 0}, {2, 1}});

    std::vector<Front> dom{front({{1, 0}, {3, 1}}), front({{2, 1}})};
    CHECK(union_reference_front(dom).points == std::vector<Point2>{{1, 0}, {2, 1}});

    std::vector<Front> rev{dom[1], dom[0]};
    CHECK(union_reference_front(rev).points == union_reference_front(dom).points);
    std::vector<Front> again{union_reference_front(dom)};
    CHECK(union_reference_front(again).points == union_reference_front(dom).points);
}

TEST_CASE("hypervolume hand values") {
    std::vector<std::pair<double, double>> origin{{0, 0}};
    CHECK(hypervolume_normalized(origin) == doctest::Approx(1.21).epsilon(1e-12));
    std::vector<std::pair<double, double>> corners{{0, 1}, {1, 0}};
    CHECK(std::fabs(hypervolume_normalized(corners) - 0.21) < 1e-12);
    CHECK(hypervolume_normalized({}) == 0.0);

    // same corners via bounds: f1 in [1,2], -f2 in [-1,0]
    auto f = front({{1, 0}, {2, 1}});
    auto b = bounds_of(std::span<const Front>(&f, 1));
    CHECK(std::fabs(hypervolume(f, b) - 0.21) < 1e-12);
    CHECK_THROWS_AS(hypervolume(front({{5, 0}}), b), std::out_of_range);
}

TEST_CASE("degenerate axis maps to zero") {
    auto f = front({{3, 2}});
    auto b = bounds_of(std::span<const Front>(&f, 1));
    CHECK(hypervolume(f, b) == doctest::Approx(1.21));
}

TEST_CASE("hypervolume never drops when a non-dominated point is added") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<std::pair<double, double>> pts;
        for (int k = 0; k < 6; ++k) pts.emplace_back(u(rng), u(rng));
        const double before = hypervolume_normalized(pts);
        pts.emplace_back(u(rng), u(rng));
        CHECK(hypervolume_normalized(pts) >= before - 1e-15);
    }
}

TEST_CASE("IGD") {
    auto ref = front({{1, 0}, {2, 1}});
    CHECK(igd(ref, ref) == 0.0);
    CHECK(std::fabs(igd(front({{2, 1}}), ref) - 0.70710678) < 1e-8);
    CHECK(igd(Front{}, ref) == std::numeric_limits<double>::infinity());
    CHECK_THROWS(igd(ref, Front{}));

    auto partial = front({{2, 1}});
    const double before = igd(partial, ref);
    partial.points.push_back({1, 0});
    CHECK(igd(partial, ref) <= before);
}

TEST_CASE("gene frequency and driver selection") {
    std::vector<DecisionVector> ps{{1, 1, 0, 1, 1}, {1, 1, 0, 0, 1}, {1, 0, 1, 0, 1}, {1, 1, 0, 1, 1}, {1, 1, 0, 1, 0}};
    auto freq = gene_frequency(ps);
    CHECK(freq[0] == 1.0);
    CHECK(freq[1] == doctest::Approx(0.8));
    CHECK(select_drivers(freq) == std::vector<NodeId>{0});  // 0.8 is not above 0.8
    CHECK(select_drivers(freq, 0.0) == std::vector<NodeId>{0, 1, 2, 3, 4});

    std::vector<DecisionVector> three{{1, 1}, {1, 0}, {1, 1}};
    auto f3 = gene_frequency(three);
    CHECK(select_drivers(f3) == std::vector<NodeId>{0});
    CHECK(f3[1] == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS(gene_frequency({}));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> f(30);
    for (auto& v : f) v = u(rng);
    std::size_t prev = f.size() + 1;
    for (double t = 0; t <= 1.0; t += 0.05) {
        const auto s = select_drivers(f, t).size();
        CHECK(s <= prev);
        prev = s;
    }
}

TEST_CASE("drug combination parsing and ranking") {
    std::istringstream in("# id\tlabel\tgenes\nc1\t1\tA,B,C\nc2\t0\tA,Z\nc3\t0\tZ\n");
    auto combos = parse_drug_combinations(in);
    REQUIRE(combos.size() == 3);
    CHECK(combos[0].targets == std::vector<std::string>{"A", "B", "C"});

    std::vector<std::string> drivers{"A", "B", "C"};
    auto ranked = rank_drug_combinations(drivers, combos);
    CHECK(ranked[0].id == "c1");
    CHECK(ranked[0].probability == 1.0);
    CHECK(ranked[1].probability == doctest::Approx(1.0 / 3.0));
    CHECK(ranked[2].probability == 0.0);
    CHECK(ranked[2].rank == 3);

    auto none = rank_drug_combinations({}, combos);
    for (const auto& r : none) {
        CHECK(r.probability == 0.0);
        CHECK(r.rank == 1);
    }

    std::istringstream bad("c1\t2\tA\n");
    CHECK_THROWS_AS(parse_drug_combinations(bad), ParseError);
    std::istringstream empty_targets("c1\t1\t\n");
    CHECK_THROWS_AS(parse_drug_combinations(empty_targets), ParseError);
}

TEST_CASE("AUC") {
    std::vector<int> labels{1, 1, 0, 0};
    CHECK(auc(std::vector<double>{4, 3, 2, 1}, labels) == 1.0);
    CHECK(auc(std::vector<double>{1, 1, 1, 1}, labels) == 0.5);
    CHECK(auc(std::vector<double>{3, 2, 1}, std::vector<int>{1, 0, 1}) == 0.5);
    CHECK_THROWS_AS(auc(std::vector<double>{1, 2}, std::vector<int>{1, 1}), UndefinedMetric);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<double> s(20), t(20);
        std::vector<int> l(20);
        for (int i = 0; i < 20; ++i) {
            s[i] = std::round(u(rng) * 4) / 4;
            t[i] = std::exp(s[i]) + 10;
            l[i] = i % 3 == 0;
        }
        CHECK(auc(s, l) == auc(t, l));
    }
}

TEST_CASE("Wilcoxon rank-sum") {
    std::vector<double> a{1, 2, 3, 4, 5};
    auto same = rank_sum_compare(a, a);
    CHECK(same.p_value == 1.0);

    std::vector<double> lo(10), hi(10);
    for (int i = 0; i < 10; ++i) {
        lo[i] = i;
        hi[i] = 100 + i;
    }
    auto sep = rank_sum_compare(lo, hi);
    CHECK(sep.exact);
    CHECK(sep.p_value < 0.001);
    CHECK(sep.p_value == doctest::Approx(2.0 / 184756.0));

    auto one = rank_sum_compare(std::vector<double>{1}, std::vector<double>{2});
    CHECK(one.exact);
    CHECK(one.p_value == 1.0);

    // normal approximation path
    std::vector<double> big_a(30), big_b(30);
    for (int i = 0; i < 30; ++i) {
        big_a[i] = i;
        big_b[i] = i + 0.5;
    }
    auto approx = rank_sum_compare(big_a, big_b);
    CHECK_FALSE(approx.exact);
    CHECK(approx.p_value > 0.5);
    std::vector<double> flat(15, 3.0);
    CHECK(rank_sum_compare(flat, flat).p_value == 1.0);
}

}
