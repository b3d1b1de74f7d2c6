#include <doctest.h>

#include "../support/fixtures.hpp"
#include "moncp/serialize.hpp"

using namespace moncp;
using namespace moncp::testing;

TEST_SUITE("serialize") {

TEST_CASE("run result document") {
    auto p = star_instance();
    SolverConfig cfg;
    cfg.max_evaluations = 2000;
    cfg.seed = 3;
    auto r = solve(p, cfg);
    auto j = run_result_to_json(r, p);
    CHECK(j["kind"] == "run_result");
    CHECK(j["seed"] == 3);
    CHECK(!j.contains("wall_seconds"));
    auto doc = parse_result_document(j);
    CHECK(doc.pf == r.front.pf);
    CHECK(doc.ps[0] == std::vector<std::string>{"0"});
    CHECK(doc.ps[1] == std::vector<std::string>{"0", "1"});
    CHECK(doc.model == "mds");
    CHECK(run_result_to_json(solve(p, cfg), p).dump() == j.dump());
}

TEST_CASE("oracle and baseline documents share the view") {
    auto p = dfvs_instance();
    auto o = parse_result_document(oracle_to_json(enumerate_pareto(p), p));
    CHECK(o.kind == "oracle_front");
    CHECK(o.ps[0] == std::vector<std::string>{"3", "4"});

    auto b = parse_result_document(baseline_to_json(greedy_baseline(p), p));
    CHECK(b.kind == "baseline_result");
    CHECK(b.pf.size() == 1);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_result_document(json::parse(R"({"kind":"nope"})")), MalformedResult);
    CHECK_THROWS_AS(parse_result_document(json::parse(R"({"kind":"run_result","algorithm":"x",
        "instance":{"model":"mds"},"pf":[[1]],"ps":[]})")),
                    MalformedResult);
    CHECK_THROWS_AS(read_result_file("/nonexistent/result.json"), MalformedResult);
}

}
