#include "moncp/serialize.hpp"

#include <fstream>

#include "moncp/digest.hpp"

namespace moncp {

namespace {

json pf_to_json(std::span<const FrontPoint> pf) {
    json arr = json::array();
    for (const auto& p : pf) arr.push_back({p.f1, p.f2});
    return arr;
}

json instance_json(const ProblemInstance& p) {
    return {{"model", to_string(p.model())},
            {"directed", p.graph().directed()},
            {"nodes", p.graph().num_nodes()},
            {"edges", p.graph().num_edges()},
            {"labelled", p.labels().positives()},
            {"hash", instance_digest(p)}};
}

}  // namespace

std::vector<std::string> selected_names(const Graph& g, const DecisionVector& x) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) out.push_back(g.name(static_cast<NodeId>(i)));
    return out;
}

json config_to_json(const SolverConfig& cfg) {
    json j;
    j["pop"] = cfg.pop_size;
    j["aux"] = cfg.aux_size;
    j["budget"] = cfg.max_evaluations;
    j["seed"] = cfg.seed;
    j["mutation_rate"] = cfg.mutation_rate < 0 ? json("1/n") : json(cfg.mutation_rate);
    j["eps_control_fraction"] = cfg.eps_control_fraction;
    j["eps_exponent"] = cfg.eps_exponent;
    j["eps0"] = cfg.eps0 ? json(*cfg.eps0) : json("median-initial-cv");
    j["cv_rank_weight"] = cfg.cv_rank_weight;
    j["disable_subpop1"] = cfg.disable_subpop1;
    j["disable_subpop2"] = cfg.disable_subpop2;
    j["disable_rankings"] = cfg.disable_rankings;
    j["use_cdp_main"] = cfg.use_cdp_main;
    return j;
}

json run_result_to_json(const RunResult& r, const ProblemInstance& p) {
    const auto& g = p.graph();
    json j;
    j["kind"] = "run_result";
    j["schema"] = result_schema_version;
    j["algorithm"] = r.algorithm;
    j["seed"] = r.config.seed;
    j["instance"] = instance_json(p);
    j["config"] = config_to_json(r.config);
    j["evaluations"] = r.evaluations;
    j["generations"] = r.generations;
    j["feasible_found"] = r.feasible_found;
    j["pf"] = pf_to_json(r.front.pf);
    json ps = json::array(), alts = json::array();
    for (std::size_t k = 0; k < r.front.ps.size(); ++k) {
        ps.push_back(selected_names(g, r.front.ps[k]));
        json a = json::array();
        for (const auto& x : r.front.alternates[k]) a.push_back(selected_names(g, x));
        alts.push_back(std::move(a));
    }
    j["ps"] = std::move(ps);
    j["alternates"] = std::move(alts);
    if (!r.feasible_found) {
        json mc = json::array();
        for (const auto& x : r.min_cv_set) mc.push_back(selected_names(g, x));
        j["min_cv"] = r.min_cv;
        j["min_cv_set"] = std::move(mc);
    }
    json trace = json::array();
    for (const auto& t : r.trace) {
        trace.push_back({{"generation", t.generation},
                         {"evaluations", t.evaluations},
                         {"epsilon", t.epsilon},
                         {"feasible_ratio", t.feasible_ratio},
                         {"front_size", t.front_size},
                         {"best_feasible_f1", t.best_feasible_f1 ? json(*t.best_feasible_f1) : json(nullptr)}});
    }
    j["trace"] = std::move(trace);
    return j;
}

json oracle_to_json(const OracleFront& f, const ProblemInstance& p) {
    json j;
    j["kind"] = "oracle_front";
    j["schema"] = result_schema_version;
    j["algorithm"] = "oracle";
    j["instance"] = instance_json(p);
    j["vectors_checked"] = f.vectors_checked;
    j["pf"] = pf_to_json(f.pf);
    json ps = json::array(), all = json::array();
    for (const auto& group : f.ps) {
        ps.push_back(selected_names(p.graph(), group.front()));
        json g = json::array();
        for (const auto& x : group) g.push_back(selected_names(p.graph(), x));
        all.push_back(std::move(g));
    }
    j["ps"] = std::move(ps);
    j["ps_all"] = std::move(all);
    return j;
}

json baseline_to_json(const BaselineResult& b, const ProblemInstance& p) {
    json j;
    j["kind"] = "baseline_result";
    j["schema"] = result_schema_version;
    j["algorithm"] = b.method;
    j["instance"] = instance_json(p);
    std::vector<std::string> names;
    for (NodeId v : b.drivers) names.push_back(p.graph().name(v));
    j["drivers"] = names;
    j["f1"] = b.f1;
    j["f2"] = b.f2;
    j["feasible"] = b.feasible;
    j["pf"] = b.feasible ? json::array({json::array({b.f1, b.f2})}) : json::array();
    j["ps"] = b.feasible ? json::array({names}) : json::array();
    return j;
}

ResultDocument parse_result_document(const json& j) {
    try {
        ResultDocument d;
        d.kind = j.at("kind").get<std::string>();
        if (d.kind != "run_result" && d.kind != "oracle_front" && d.kind != "baseline_result")
            throw MalformedResult("unknown result kind '" + d.kind + "'");
        d.label = j.at("algorithm").get<std::string>();
        d.model = j.at("instance").at("model").get<std::string>();
        d.instance_hash = j.at("instance").value("hash", "");
        d.seed = j.value("seed", std::uint64_t{0});
        for (const auto& pt : j.at("pf")) {
            if (!pt.is_array() || pt.size() != 2) throw MalformedResult("PF entries must be [f1, f2] pairs");
            d.pf.push_back({pt[0].get<std::int64_t>(), pt[1].get<std::int64_t>()});
        }
        for (const auto& names : j.at("ps")) d.ps.push_back(names.get<std::vector<std::string>>());
        if (d.ps.size() != d.pf.size()) throw MalformedResult("PS and PF lengths differ");
        return d;
    } catch (const json::exception& e) {
        throw MalformedResult(std::string("malformed result document: ") + e.what());
    }
}

ResultDocument read_result_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedResult("cannot open result file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw MalformedResult(path + ": " + e.what());
    }
    return parse_result_document(j);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace moncp
