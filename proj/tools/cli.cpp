#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "moncp/baselines.hpp"
#include "moncp/digest.hpp"
#include "moncp/metrics.hpp"
#include "moncp/oracle.hpp"
#include "moncp/serialize.hpp"
#include "moncp/solver.hpp"
#include "moncp/synthetic.hpp"

#ifndef MONCP_VERSION
#define MONCP_VERSION "0.0.0"
#endif

namespace moncp::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Argument echo and resolved flag snapshot of the command being run.
std::vector<std::string> current_argv, current_expanded;
std::string current_flags;

void warn(const std::string& msg) { std::cerr << "moncp: warning: " << msg << '\n'; }

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return in;
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

/// Records inputs, outputs and timing for one command; written next to the
/// primary output as <out>.manifest.json.
struct Manifest {
    std::string command;
    std::vector<std::string> argv = current_argv;
    std::vector<std::string> expanded = current_expanded;  // config file folded in
    std::vector<std::string> replay_extra;  // appended when a seed was auto-drawn
    json config = json::object();
    std::optional<std::uint64_t> seed;
    std::string seed_source = "none";
    json inputs = json::array();
    std::vector<std::string> outputs;
    std::string started = utc_now();
    Clock::time_point t0 = Clock::now();

    void input(const std::string& role, const std::string& path) {
        inputs.push_back({{"role", role}, {"path", path}, {"sha256", file_sha256(path)}});
    }

    void write(const std::string& primary) const {
        json j;
        j["kind"] = "run_manifest";
        j["tool"] = "moncp";
        j["version"] = MONCP_VERSION;
        j["result_schema"] = result_schema_version;
        j["compiler"] = __VERSION__;
        j["command"] = command;
        j["argv"] = argv;
        std::vector<std::string> replay(expanded.begin() + (expanded.empty() ? 0 : 1), expanded.end());
        replay.insert(replay.end(), replay_extra.begin(), replay_extra.end());
        j["replay_args"] = replay;
        j["config"] = config;
        j["flags"] = current_flags;
        j["seed"] = seed ? json(*seed) : json(nullptr);
        j["seed_source"] = seed_source;
        j["inputs"] = inputs;
        json outs = json::array();
        for (const auto& p : outputs) outs.push_back({{"path", p}, {"sha256", file_sha256(p)}});
        j["outputs"] = outs;
        j["timing"] = {{"started_utc", started},
                       {"wall_seconds", std::chrono::duration<double>(Clock::now() - t0).count()}};
        write_json_file(primary + ".manifest.json", j);
    }
};

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, Manifest& m) {
    if (flag) {
        m.seed_source = "flag";
        m.seed = *flag;
        return *flag;
    }
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    m.seed_source = "auto";
    m.seed = s;
    m.replay_extra = {"--seed", std::to_string(s)};
    warn("no --seed given; using " + std::to_string(s) + " (recorded in the manifest)");
    return s;
}

// Instance loading shared by solve, oracle and baseline.
struct InstanceArgs {
    std::string network, nodes_file, labels, model = "mds";
    bool directed = false, undirected = false;

    void attach(CLI::App* sub) {
        sub->add_option("--network", network, "Edge-list file")->required()->check(CLI::ExistingFile);
        sub->add_option("--nodes-file", nodes_file, "Node list (adds isolated nodes)")->check(CLI::ExistingFile);
        sub->add_option("--model", model, "Control model")
            ->check(CLI::IsMember({"mds", "dfvs", "ncua"}, CLI::ignore_case))
            ->capture_default_str();
        sub->add_option("--labels", labels, "Drug-target label file")->check(CLI::ExistingFile);
        auto* d = sub->add_flag("--directed", directed, "Read edges as directed");
        auto* u = sub->add_flag("--undirected", undirected, "Read edges as undirected");
        d->excludes(u);
    }

    ProblemInstance load(Manifest& m) const {
        const ControlModel cm = parse_control_model(model);
        const bool dir = directed ? true : undirected ? false : requires_directed(cm);
        std::vector<std::string> extra;
        if (!nodes_file.empty()) {
            auto in = open_input(nodes_file);
            extra = parse_node_list(in);
            m.input("nodes", nodes_file);
        }
        auto in = open_input(network);
        Graph g = parse_edge_list(in, dir, extra);
        m.input("network", network);
        check_compatible(cm, g);

        LabelVector lv;
        if (labels.empty()) {
            lv.labels.assign(g.num_nodes(), 0);
        } else {
            auto lin = open_input(labels);
            lv = load_labels(g, lin);
            m.input("labels", labels);
            if (lv.unmatched) warn(std::to_string(lv.unmatched) + " label entries name nodes absent from the network");
        }
        if (lv.positives() == 0) warn("no labelled drug targets; f2 is 0 for every solution");
        m.config["model"] = to_string(cm);
        m.config["directed"] = dir;
        return ProblemInstance(std::move(g), cm, std::move(lv));
    }
};

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
    InstanceArgs inst;
    std::string algo = "lscv-mcea", out;
    SolverConfig cfg;
    std::optional<std::uint64_t> seed;
    bool nopops = false, no_trace = false;
    std::optional<double> mutation, eps0;
};

void add_solve(CLI::App& app, SolveArgs& a, std::function<int()>& action) {
    auto* sub = app.add_subcommand("solve", "Run LSCV-MCEA or NSGA-II-CDP on one instance");
    sub->add_option("--config", "key=value file supplying any flag (command line wins)");
    a.inst.attach(sub);
    sub->add_option("--algo", a.algo, "Algorithm")
        ->check(CLI::IsMember({"lscv-mcea", "nsga2-cdp"}))
        ->capture_default_str();
    sub->add_option("--pop", a.cfg.pop_size, "Main population size")->capture_default_str();
    sub->add_option("--aux", a.cfg.aux_size, "Auxiliary population size")->capture_default_str();
    sub->add_option("--budget", a.cfg.max_evaluations, "Evaluation budget")->capture_default_str();
    sub->add_option("--seed", a.seed, "RNG seed");
    sub->add_option("--threads", a.cfg.threads, "Evaluation threads")->capture_default_str();
    sub->add_option("--mutation-rate", a.mutation, "Bit-flip probability (default 1/n)");
    sub->add_option("--eps0", a.eps0, "Initial epsilon (default median initial violation)");
    sub->add_option("--eps-fraction", a.cfg.eps_control_fraction, "Share of generations with epsilon > 0")
        ->capture_default_str();
    sub->add_option("--eps-exponent", a.cfg.eps_exponent, "Epsilon decay exponent")->capture_default_str();
    sub->add_option("--cv-weight", a.cfg.cv_rank_weight, "Weight of the violation rank")->capture_default_str();
    sub->add_flag("--no-subpop1", a.cfg.disable_subpop1, "Drop the f1 auxiliary population");
    sub->add_flag("--no-subpop2", a.cfg.disable_subpop2, "Drop the f2 auxiliary population");
    sub->add_flag("--nopops", a.nopops, "Drop both auxiliary populations");
    sub->add_flag("--no-rankings", a.cfg.disable_rankings, "Auxiliaries sort by violation then objective");
    sub->add_flag("--cdp-main", a.cfg.use_cdp_main, "Epsilon fixed at 0 in the main population");
    sub->add_flag("--no-trace", a.no_trace, "Omit the per-generation trace");
    sub->add_option("--out", a.out, "Result JSON path")->required();
    action = [&a]() -> int {
        Manifest m;
        m.command = "solve";
        auto p = a.inst.load(m);
        SolverConfig cfg = a.cfg;
        cfg.seed = resolve_seed(a.seed, m);
        if (a.mutation) cfg.mutation_rate = *a.mutation;
        cfg.eps0 = a.eps0;
        if (a.nopops) cfg.disable_subpop1 = cfg.disable_subpop2 = true;
        cfg.record_trace = !a.no_trace;
        cfg.validate();

        RunResult r = a.algo == "nsga2-cdp" ? nsga2_cdp_solve(p, cfg) : solve(p, cfg);
        write_json_file(a.out, run_result_to_json(r, p));
        m.config["algo"] = r.algorithm;
        m.config["solver"] = config_to_json(cfg);
        m.config["threads"] = cfg.threads;
        m.outputs.push_back(a.out);
        m.write(a.out);

        std::cout << r.algorithm << ": " << r.front.pf.size() << " front points, " << r.evaluations
                  << " evaluations, " << r.generations << " generations\n";
        if (!r.feasible_found) {
            std::cerr << "moncp: no feasible solution found (min violation " << format_double(r.min_cv) << ")\n";
            return no_feasible;
        }
        return ok;
    };
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
    InstanceArgs inst;
    std::size_t limit = default_oracle_limit;
    std::string out;
};

void add_oracle(CLI::App& app, OracleArgs& a, std::function<int()>& action) {
    auto* sub = app.add_subcommand("oracle", "Exact Pareto front by exhaustive enumeration");
    sub->add_option("--config", "key=value file supplying any flag (command line wins)");
    a.inst.attach(sub);
    sub->add_option("--limit", a.limit, "Largest node count accepted")->capture_default_str();
    sub->add_option("--out", a.out, "Result JSON path")->required();
    action = [&a]() -> int {
        Manifest m;
        m.command = "oracle";
        auto p = a.inst.load(m);
        auto f = enumerate_pareto(p, a.limit);
        write_json_file(a.out, oracle_to_json(f, p));
        m.config["limit"] = a.limit;
        m.outputs.push_back(a.out);
        m.write(a.out);
        std::cout << "oracle: " << f.pf.size() << " front points over " << f.vectors_checked << " vectors\n";
        return f.pf.empty() ? no_feasible : ok;
    };
}

// ---- baseline -------------------------------------------------------------

struct BaselineArgs {
    InstanceArgs inst;
    std::string method = "greedy", out;
};

void add_baseline(CLI::App& app, BaselineArgs& a, std::function<int()>& action) {
    auto* sub = app.add_subcommand("baseline", "Single driver set from a classic method");
    sub->add_option("--config", "key=value file supplying any flag (command line wins)");
    a.inst.attach(sub);
    sub->add_option("--method", a.method, "greedy (per model) or mms (directed graphs)")
        ->check(CLI::IsMember({"greedy", "mms"}))
        ->capture_default_str();
    sub->add_option("--out", a.out, "Result JSON path")->required();
    action = [&a]() -> int {
        Manifest m;
        m.command = "baseline";
        auto p = a.inst.load(m);
        BaselineResult b;
        if (a.method == "mms") {
            if (!p.graph().directed()) throw UsageError("mms needs a directed graph");
            b = score_driver_set(p, "mms", mms_driver_set(p.graph()));
            if (!b.feasible) warn("the MMS driver set does not satisfy the " + std::string(to_string(p.model())) + " constraints");
        } else {
            b = greedy_baseline(p);
        }
        write_json_file(a.out, baseline_to_json(b, p));
        m.config["method"] = b.method;
        m.outputs.push_back(a.out);
        m.write(a.out);
        std::cout << b.method << ": " << b.f1 << " drivers, " << b.f2 << " known targets\n";
        return ok;
    };
}

// ---- metrics --------------------------------------------------------------

struct MetricsArgs {
    std::vector<std::string> results;
    std::string reference, out;
    bool use_union = false, raw = false;
};

void add_metrics(CLI::App& app, MetricsArgs& a, std::function<int()>& action) {
    auto* sub = app.add_subcommand("metrics", "HV/IGD per run and rank-sum tests between groups");
    sub->add_option("--config", "key=value file supplying any flag (command line wins)");
    sub->add_option("results", a.results, "Result JSON files")->required()->check(CLI::ExistingFile);
    auto* ref = sub->add_option("--reference", a.reference, "Reference front (any result file)")
                    ->check(CLI::ExistingFile);
    auto* uni = sub->add_flag("--union", a.use_union, "Use the union of all run fronts as reference");
    ref->excludes(uni);
    sub->add_flag("--raw-igd", a.raw, "IGD in raw objective space instead of normalized");
    sub->add_option("--out", a.out, "Output prefix; writes <out>.json and <out>.tsv")->required();
    action = [&a]() -> int {
        if (a.reference.empty() && !a.use_union) throw UsageError("no reference front: pass --reference or --union");
        Manifest m;
        m.command = "metrics";

        std::vector<ResultDocument> docs;
        std::vector<Front> fronts;
        for (const auto& path : a.results) {
            docs.push_back(read_result_file(path));
            fronts.push_back(make_front(docs.back().pf, docs.back().label));
            m.input("result", path);
        }
        Front reference;
        if (a.use_union) {
            reference = union_reference_front(fronts);
        } else {
            auto rd = read_result_file(a.reference);
            m.input("reference", a.reference);
            reference = make_front(rd.pf, "reference:" + rd.label);
            for (const auto& d : docs)
                if (!rd.instance_hash.empty() && !d.instance_hash.empty() && d.instance_hash != rd.instance_hash)
                    warn("a result was computed on a different instance than the reference");
        }
        if (reference.points.empty()) throw UsageError("reference front is empty");

        std::vector<Front> all = fronts;
        all.push_back(reference);
        const Bounds bounds = bounds_of(all);

        json runs = json::array();
        std::ofstream tsv(a.out + ".tsv");
        if (!tsv) throw UsageError("cannot write " + a.out + ".tsv");
        tsv << "file\tgroup\tseed\tpoints\thv\tigd\n";
        std::map<std::string, std::vector<double>> hv_by_group, igd_by_group;
        for (std::size_t i = 0; i < docs.size(); ++i) {
            const double hv = hypervolume(fronts[i], bounds);
            const double ig = a.raw ? igd(fronts[i], reference) : igd(fronts[i], reference, bounds);
            hv_by_group[docs[i].label].push_back(hv);
            igd_by_group[docs[i].label].push_back(ig);
            runs.push_back({{"file", a.results[i]},
                            {"group", docs[i].label},
                            {"seed", docs[i].seed},
                            {"points", fronts[i].points.size()},
                            {"hv", hv},
                            {"igd", number_or_null(ig)}});
            tsv << a.results[i] << '\t' << docs[i].label << '\t' << docs[i].seed << '\t' << fronts[i].points.size()
                << '\t' << format_double(hv) << '\t' << format_double(ig) << '\n';
        }

        json groups = json::array(), tests = json::array();
        for (const auto& [label, hvs] : hv_by_group) {
            double mean = 0.0;
            for (double v : hvs) mean += v;
            groups.push_back({{"group", label}, {"runs", hvs.size()}, {"mean_hv", mean / static_cast<double>(hvs.size())}});
        }
        tsv << "\ngroup_a\tgroup_b\tindicator\tp_value\texact\n";
        for (auto ia = hv_by_group.begin(); ia != hv_by_group.end(); ++ia)
            for (auto ib = std::next(ia); ib != hv_by_group.end(); ++ib) {
                for (const char* ind : {"hv", "igd"}) {
                    const auto& src = std::string(ind) == "hv" ? hv_by_group : igd_by_group;
                    auto r = rank_sum_compare(src.at(ia->first), src.at(ib->first));
                    tests.push_back({{"a", ia->first}, {"b", ib->first}, {"indicator", ind},
                                     {"p_value", r.p_value}, {"exact", r.exact}});
                    tsv << ia->first << '\t' << ib->first << '\t' << ind << '\t' << format_double(r.p_value) << '\t'
                        << (r.exact ? "yes" : "no") << '\n';
                }
            }
        tsv.close();

        json ref_pts = json::array();
        for (const auto& pnt : reference.points) ref_pts.push_back({pnt.f1, pnt.f2});
        json report;
        report["kind"] = "metrics_report";
        report["reference"] = {{"source", a.use_union ? "union" : a.reference}, {"pf", ref_pts}};
        report["bounds"] = {{"f1_min", bounds.f1_min}, {"f1_max", bounds.f1_max},
                            {"neg_f2_min", bounds.f2_min}, {"neg_f2_max", bounds.f2_max}};
        report["igd_space"] = a.raw ? "raw" : "normalized";
        report["runs"] = runs;
        report["groups"] = groups;
        report["rank_sum"] = tests;
        write_json_file(a.out + ".json", report);
        m.outputs = {a.out + ".json", a.out + ".tsv"};
        m.write(a.out);
        std::cout << "metrics: " << docs.size() << " runs, " << hv_by_group.size() << " groups\n";
        return ok;
    };
}

// ---- evaluate-drugs -------------------------------------------------------

struct DrugArgs {
    std::string result, combos, out;
    double threshold = 0.8;
};

void add_drugs(CLI::App& app, DrugArgs& a, std::function<int()>& action) {
    auto* sub = app.add_subcommand("evaluate-drugs", "Rank drug combinations by the consensus driver set");
    sub->add_option("--config", "key=value file supplying any flag (command line wins)");
    sub->add_option("--result", a.result, "Result JSON (its PS is used)")->required()->check(CLI::ExistingFile);
    sub->add_option("--combos", a.combos, "Combination file: id<TAB>label<TAB>gene,gene")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--threshold", a.threshold, "Selection frequency a driver must exceed")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub->add_option("--out", a.out, "Output prefix; writes <out>.json and <out>.tsv")->required();
    action = [&a]() -> int {
        Manifest m;
        m.command = "evaluate-drugs";
        const auto doc = read_result_file(a.result);
        m.input("result", a.result);
        auto cf = open_input(a.combos);
        const auto combos = parse_drug_combinations(cf);
        m.input("combos", a.combos);
        if (combos.empty()) throw UsageError("no drug combinations in " + a.combos);

        // frequencies over the genes named anywhere in the PS
        std::vector<std::string> universe;
        for (const auto& s : doc.ps) universe.insert(universe.end(), s.begin(), s.end());
        std::sort(universe.begin(), universe.end());
        universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
        std::vector<std::string> drivers;
        json freq_json = json::object();
        if (doc.ps.empty()) {
            warn("the result has an empty solution set; the driver set is empty");
        } else {
            std::vector<DecisionVector> ps;
            for (const auto& s : doc.ps) {
                DecisionVector x(universe.size(), 0);
                for (const auto& gname : s)
                    x[static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), gname) - universe.begin())] = 1;
                ps.push_back(std::move(x));
            }
            const auto freq = gene_frequency(ps);
            for (NodeId v : select_drivers(freq, a.threshold)) drivers.push_back(universe[v]);
            for (std::size_t i = 0; i < universe.size(); ++i) freq_json[universe[i]] = freq[i];
        }

        const auto ranked = rank_drug_combinations(drivers, combos);
        std::vector<double> scores;
        std::vector<int> labels;
        json rows = json::array();
        std::ofstream tsv(a.out + ".tsv");
        if (!tsv) throw UsageError("cannot write " + a.out + ".tsv");
        tsv << "rank\tcombination\tscore\tprobability\tefficacious\n";
        for (const auto& r : ranked) {
            scores.push_back(r.probability);
            labels.push_back(r.efficacious ? 1 : 0);
            rows.push_back({{"rank", r.rank}, {"id", r.id}, {"score", r.score},
                            {"probability", r.probability}, {"efficacious", r.efficacious}});
            tsv << r.rank << '\t' << r.id << '\t' << r.score << '\t' << format_double(r.probability) << '\t'
                << (r.efficacious ? 1 : 0) << '\n';
        }
        tsv.close();

        json report;
        report["kind"] = "drug_report";
        report["source"] = {{"file", a.result}, {"algorithm", doc.label}, {"ps_size", doc.ps.size()}};
        report["threshold"] = a.threshold;
        report["drivers"] = drivers;
        report["frequency"] = freq_json;
        report["ranking"] = rows;
        try {
            const double v = auc(scores, labels);
            report["auc"] = v;
            std::cout << "AUC " << format_double(v) << " over " << ranked.size() << " combinations, " << drivers.size()
                      << " drivers\n";
        } catch (const UndefinedMetric& e) {
            report["auc"] = nullptr;
            report["auc_note"] = e.what();
            warn(std::string("AUC undefined: ") + e.what());
        }
        write_json_file(a.out + ".json", report);
        m.config["threshold"] = a.threshold;
        m.outputs = {a.out + ".json", a.out + ".tsv"};
        m.write(a.out);
        return ok;
    };
}

// ---- gen-synthetic --------------------------------------------------------

struct SynthArgs {
    std::size_t nodes = 0, m = 3;
    std::string type = "er", out;
    double p = 0.1, label_frac = 0.2;
    bool directed = false;
    std::optional<std::uint64_t> seed;
};

void add_synthetic(CLI::App& app, SynthArgs& a, std::function<int()>& action) {
    auto* sub = app.add_subcommand("gen-synthetic", "Random network and label files");
    sub->add_option("--config", "key=value file supplying any flag (command line wins)");
    sub->add_option("--nodes", a.nodes, "Node count")->required();
    sub->add_option("--type", a.type, "Generator")->check(CLI::IsMember({"er", "ba"}))->capture_default_str();
    sub->add_option("--p", a.p, "Edge probability (er)")->capture_default_str();
    sub->add_option("--m", a.m, "Edges per arrival (ba)")->capture_default_str();
    sub->add_flag("--directed", a.directed, "Directed edges");
    sub->add_option("--label-frac", a.label_frac, "Share of labelled nodes")->capture_default_str();
    sub->add_option("--seed", a.seed, "RNG seed");
    sub->add_option("--out", a.out, "Output prefix; writes .edges, .nodes and .labels")->required();
    action = [&a]() -> int {
        if (a.p < 0.0 || a.p > 1.0) throw UsageError("--p must lie in [0, 1]");
        if (a.label_frac < 0.0 || a.label_frac > 1.0) throw UsageError("--label-frac must lie in [0, 1]");
        if (a.nodes == 0) throw UsageError("--nodes must be positive");
        Manifest m;
        m.command = "gen-synthetic";
        Rng rng(resolve_seed(a.seed, m));
        Graph g = a.type == "ba" ? barabasi_albert(a.nodes, a.m, a.directed, rng) : erdos_renyi(a.nodes, a.p, a.directed, rng);
        LabelVector lv = random_labels(g.num_nodes(), a.label_frac, rng);
        if (lv.positives() == 0) warn("label fraction gives no labelled nodes; labels file is empty");

        const std::string edges = a.out + ".edges", nodes = a.out + ".nodes", labels = a.out + ".labels";
        {
            std::ofstream e(edges, std::ios::binary);
            e << serialize_edge_list(g);
            std::ofstream nf(nodes, std::ios::binary);
            for (const auto& name : g.node_names()) nf << name << '\n';
            std::ofstream lf(labels, std::ios::binary);
            for (std::size_t v = 0; v < g.num_nodes(); ++v)
                if (lv.labels[v]) lf << g.name(static_cast<NodeId>(v)) << '\n';
            if (!e || !nf || !lf) throw UsageError("cannot write files with prefix " + a.out);
        }
        m.config = {{"type", a.type}, {"nodes", a.nodes}, {"directed", a.directed}, {"label_frac", a.label_frac}};
        if (a.type == "ba") m.config["m"] = a.m;
        else m.config["p"] = a.p;
        m.outputs = {edges, nodes, labels};
        m.write(a.out);
        std::cout << "generated " << g.num_nodes() << " nodes, " << g.num_edges() << " edges, " << lv.positives()
                  << " labelled\n";
        return ok;
    };
}

// ---- replay ---------------------------------------------------------------

struct ReplayArgs {
    std::string manifest;
    bool check = false;
};

int dispatch(const std::vector<std::string>& args);

void add_replay(CLI::App& app, ReplayArgs& a, std::function<int()>& action) {
    auto* sub = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    sub->add_option("manifest", a.manifest, "Manifest JSON")->required()->check(CLI::ExistingFile);
    sub->add_flag("--check", a.check, "Fail unless every output digest matches the recorded one");
    action = [&a]() -> int {
        json j;
        {
            auto in = open_input(a.manifest);
            try {
                j = json::parse(in);
            } catch (const json::exception& e) {
                throw UsageError(a.manifest + ": " + e.what());
            }
        }
        if (j.value("kind", "") != "run_manifest") throw UsageError(a.manifest + " is not a run manifest");
        auto replay = j.at("replay_args").get<std::vector<std::string>>();
        replay.insert(replay.begin(), "moncp");
        std::map<std::string, std::string> expected;
        for (const auto& o : j.at("outputs")) expected[o.at("path").get<std::string>()] = o.at("sha256").get<std::string>();

        const int rc = dispatch(replay);
        if (!a.check) return rc;
        int mismatches = 0;
        for (const auto& [path, digest] : expected) {
            if (!fs::exists(path) || file_sha256(path) != digest) {
                std::cerr << "moncp: replay mismatch: " << path << '\n';
                ++mismatches;
            }
        }
        if (mismatches) return input_error;
        std::cout << "replay: " << expected.size() << " outputs reproduced byte-identically\n";
        return rc;
    };
}

/// CLI11 only reads config files for the root app, so a subcommand's
/// --config file is expanded into flags here. Flags already on the command
/// line win over the file.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    auto it = std::find(args.begin(), args.end(), "--config");
    std::string path;
    if (it != args.end() && std::next(it) != args.end()) {
        path = *std::next(it);
        args.erase(it, it + 2);
    } else {
        for (auto a = args.begin(); a != args.end(); ++a)
            if (a->rfind("--config=", 0) == 0) {
                path = a->substr(9);
                args.erase(a);
                break;
            }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    auto given = [&](const std::string& flag) {
        return std::any_of(args.begin(), args.end(),
                           [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
    };
    for (const auto& item : CLI::ConfigINI().from_config(in)) {
        if (item.name == "++" || item.name == "--" || item.name.empty()) continue;  // section markers
        const std::string flag = "--" + item.name;
        if (given(flag)) continue;
        if (item.inputs.size() == 1 && (item.inputs[0] == "true" || item.inputs[0] == "false")) {
            if (item.inputs[0] == "true") args.push_back(flag);
            continue;
        }
        for (const auto& v : item.inputs) {
            args.push_back(flag);
            args.push_back(v);
        }
    }
    return args;
}

int dispatch(const std::vector<std::string>& raw_args) {
    std::vector<std::string> args;
    try {
        args = expand_config(raw_args);
    } catch (const std::exception& e) {
        std::cerr << "moncp: error: " << e.what() << '\n';
        return input_error;
    }
    CLI::App app{"Multi-objective network control: driver-node discovery with prior drug targets", "moncp"};
    app.set_version_flag("--version", MONCP_VERSION);
    app.require_subcommand(1);

    std::function<int()> solve_fn, oracle_fn, baseline_fn, metrics_fn, drugs_fn, synth_fn, replay_fn;
    SolveArgs solve_args;
    OracleArgs oracle_args;
    BaselineArgs baseline_args;
    MetricsArgs metrics_args;
    DrugArgs drug_args;
    SynthArgs synth_args;
    ReplayArgs replay_args;
    add_solve(app, solve_args, solve_fn);
    add_oracle(app, oracle_args, oracle_fn);
    add_baseline(app, baseline_args, baseline_fn);
    add_metrics(app, metrics_args, metrics_fn);
    add_drugs(app, drug_args, drugs_fn);
    add_synthetic(app, synth_args, synth_fn);
    add_replay(app, replay_args, replay_fn);

    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : input_error;
    }

    const std::map<std::string, std::function<int()>*> actions{
        {"solve", &solve_fn},       {"oracle", &oracle_fn},         {"baseline", &baseline_fn},
        {"metrics", &metrics_fn},   {"evaluate-drugs", &drugs_fn}, {"gen-synthetic", &synth_fn},
        {"replay", &replay_fn}};
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        current_argv = raw_args;
        current_expanded = args;
        current_flags = app.get_subcommands().front()->config_to_str(true, false);
        return (*actions.at(name))();
    } catch (const ParseError& e) {
        std::cerr << "moncp: input error: " << e.what() << '\n';
    } catch (const OracleRefusal& e) {
        std::cerr << "moncp: oracle refused: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "moncp: error: " << e.what() << '\n';
    }
    return input_error;
}

}  // namespace

int run(const std::vector<std::string>& args) { return dispatch(args); }

}  // namespace moncp::cli
