#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "moncp/baselines.hpp"
#include "moncp/digest.hpp"
#include "moncp/metrics.hpp"
#include "moncp/oracle.hpp"
#include "moncp/serialize.hpp"
#include "moncp/solver.hpp"
#include "moncp/synthetic.hpp"

namespace py = pybind11;
using namespace moncp;

namespace {

DecisionVector to_bits(const std::vector<int>& x) {
    DecisionVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] != 0;
    return out;
}

std::vector<int> from_bits(const DecisionVector& x) { return {x.begin(), x.end()}; }

std::vector<std::pair<std::int64_t, std::int64_t>> pf_pairs(std::span<const FrontPoint> pf) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& p : pf) out.emplace_back(p.f1, p.f2);
    return out;
}

Front to_front(const std::vector<std::pair<double, double>>& pts) {
    Front f;
    for (auto [a, b] : pts) f.points.push_back({a, b});
    return f;
}

std::vector<std::pair<double, double>> from_front(const Front& f) {
    std::vector<std::pair<double, double>> out;
    for (const auto& p : f.points) out.emplace_back(p.f1, p.f2);
    return out;
}

LabelVector labels_arg(const Graph& g, const std::vector<int>& labels) {
    if (labels.empty()) return LabelVector{std::vector<std::uint8_t>(g.num_nodes(), 0), 0};
    LabelVector lv;
    for (int v : labels) lv.labels.push_back(v != 0);
    return lv;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Driver-node discovery under network control constraints";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<OracleRefusal>(m, "OracleRefusal", PyExc_ValueError);
    py::register_exception<UndefinedMetric>(m, "UndefinedMetric", PyExc_ValueError);

    py::enum_<ControlModel>(m, "ControlModel")
        .value("MDS", ControlModel::MDS)
        .value("DFVS", ControlModel::DFVS)
        .value("NCUA", ControlModel::NCUA);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges, bool directed, std::vector<std::string> names) {
                 return Graph::from_edges(n, edges, directed, std::move(names));
             }),
             py::arg("num_nodes"), py::arg("edges"), py::arg("directed") = false,
             py::arg("names") = std::vector<std::string>{})
        .def_static("parse", py::overload_cast<const std::string&, bool>(&parse_edge_list), py::arg("text"),
                    py::arg("directed") = false, "Parse edge-list text")
        .def_property_readonly("num_nodes", &Graph::num_nodes)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("directed", &Graph::directed)
        .def_property_readonly("names", &Graph::node_names)
        .def_property_readonly("edges", &Graph::edges)
        .def("find", [](const Graph& g, const std::string& name) -> py::object {
            const auto i = g.find(name);
            return i < g.num_nodes() ? py::cast(i) : py::none();
        })
        .def("to_edge_list", &serialize_edge_list)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "<Graph nodes=" << g.num_nodes() << " edges=" << g.num_edges()
               << (g.directed() ? " directed>" : " undirected>");
            return os.str();
        });

    m.def("strongly_connected_components", [](const Graph& g) { return strongly_connected_components(g); });
    m.def("source_nodes", &source_nodes);

    py::class_<ConstraintReport>(m, "ConstraintReport")
        .def_readonly("total_violation", &ConstraintReport::total_violation)
        .def_readonly("num_constraints", &ConstraintReport::num_constraints)
        .def_readonly("violated_count", &ConstraintReport::violated_count)
        .def_readonly("detail", &ConstraintReport::detail)
        .def_property_readonly("feasible", &ConstraintReport::feasible);

    m.def(
        "violation",
        [](ControlModel model, const Graph& g, const std::vector<int>& x, bool detail) {
            return violation(model, g, to_bits(x), detail);
        },
        py::arg("model"), py::arg("graph"), py::arg("x"), py::arg("detail") = false);

    py::class_<Evaluation>(m, "Evaluation")
        .def_readonly("f1", &Evaluation::f1)
        .def_readonly("f2", &Evaluation::f2_raw)
        .def_readonly("cv", &Evaluation::cv)
        .def_readonly("feasible", &Evaluation::feasible)
        .def("__repr__", [](const Evaluation& e) {
            std::ostringstream os;
            os << "<Evaluation f1=" << e.f1 << " f2=" << e.f2_raw << " cv=" << e.cv << '>';
            return os.str();
        });

    py::class_<ProblemInstance>(m, "Problem")
        .def(py::init([](Graph g, ControlModel model, const std::vector<int>& labels) {
                 auto lv = labels_arg(g, labels);
                 return ProblemInstance(std::move(g), model, std::move(lv));
             }),
             py::arg("graph"), py::arg("model"), py::arg("labels") = std::vector<int>{})
        .def_property_readonly("graph", &ProblemInstance::graph, py::return_value_policy::reference_internal)
        .def_property_readonly("model", &ProblemInstance::model)
        .def_property_readonly("labels", [](const ProblemInstance& p) { return from_bits(p.labels().labels); })
        .def_property_readonly("digest", &instance_digest)
        .def("evaluate", [](const ProblemInstance& p, const std::vector<int>& x) { return evaluate(p, to_bits(x)); });

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("pop_size", &SolverConfig::pop_size)
        .def_readwrite("aux_size", &SolverConfig::aux_size)
        .def_readwrite("max_evaluations", &SolverConfig::max_evaluations)
        .def_readwrite("seed", &SolverConfig::seed)
        .def_readwrite("threads", &SolverConfig::threads)
        .def_readwrite("mutation_rate", &SolverConfig::mutation_rate)
        .def_readwrite("eps_control_fraction", &SolverConfig::eps_control_fraction)
        .def_readwrite("eps_exponent", &SolverConfig::eps_exponent)
        .def_readwrite("eps0", &SolverConfig::eps0)
        .def_readwrite("cv_rank_weight", &SolverConfig::cv_rank_weight)
        .def_readwrite("disable_subpop1", &SolverConfig::disable_subpop1)
        .def_readwrite("disable_subpop2", &SolverConfig::disable_subpop2)
        .def_readwrite("disable_rankings", &SolverConfig::disable_rankings)
        .def_readwrite("use_cdp_main", &SolverConfig::use_cdp_main)
        .def_readwrite("record_trace", &SolverConfig::record_trace)
        .def_property_readonly("variant", &SolverConfig::variant_tag);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("algorithm", &RunResult::algorithm)
        .def_readonly("feasible_found", &RunResult::feasible_found)
        .def_readonly("evaluations", &RunResult::evaluations)
        .def_readonly("generations", &RunResult::generations)
        .def_readonly("wall_seconds", &RunResult::wall_seconds)
        .def_readonly("min_cv", &RunResult::min_cv)
        .def_property_readonly("pf", [](const RunResult& r) { return pf_pairs(r.front.pf); })
        .def_property_readonly("ps", [](const RunResult& r) {
            std::vector<std::vector<int>> out;
            for (const auto& x : r.front.ps) out.push_back(from_bits(x));
            return out;
        });

    auto run = [](RunResult (*fn)(const ProblemInstance&, const SolverConfig&, const SolverHooks&)) {
        return [fn](const ProblemInstance& p, const SolverConfig& cfg) {
            py::gil_scoped_release release;
            return fn(p, cfg, {});
        };
    };
    m.def("solve", run(&solve), py::arg("problem"), py::arg("config") = SolverConfig{});
    m.def("nsga2_cdp", run(&nsga2_cdp_solve), py::arg("problem"), py::arg("config") = SolverConfig{});
    m.def("run_result_json", [](const RunResult& r, const ProblemInstance& p) {
        return run_result_to_json(r, p).dump(2);
    });

    m.def(
        "oracle",
        [](const ProblemInstance& p, std::size_t limit) {
            auto f = enumerate_pareto(p, limit);
            std::vector<std::vector<std::vector<int>>> ps;
            for (const auto& group : f.ps) {
                std::vector<std::vector<int>> g;
                for (const auto& x : group) g.push_back(from_bits(x));
                ps.push_back(std::move(g));
            }
            return py::make_tuple(pf_pairs(f.pf), ps);
        },
        py::arg("problem"), py::arg("limit") = default_oracle_limit, "Exact (pf, ps) by enumeration");

    py::class_<BaselineResult>(m, "BaselineResult")
        .def_readonly("method", &BaselineResult::method)
        .def_readonly("drivers", &BaselineResult::drivers)
        .def_readonly("f1", &BaselineResult::f1)
        .def_readonly("f2", &BaselineResult::f2)
        .def_readonly("feasible", &BaselineResult::feasible);
    m.def("greedy_baseline", &greedy_baseline);
    m.def("greedy_mds", &greedy_mds);
    m.def("greedy_vertex_cover", &greedy_vertex_cover);
    m.def("greedy_fvs", &greedy_fvs);
    m.def("mms_driver_set", &mms_driver_set);

    m.def(
        "hypervolume",
        [](const std::vector<std::pair<double, double>>& pts) { return hypervolume_normalized(pts); },
        "Area dominated by normalized minimized points up to (1.1, 1.1)");
    m.def(
        "igd",
        [](const std::vector<std::pair<double, double>>& front, const std::vector<std::pair<double, double>>& ref) {
            return igd(to_front(front), to_front(ref));
        },
        "IGD over raw (f1, f2) points");
    m.def("union_reference_front", [](const std::vector<std::vector<std::pair<double, double>>>& fronts) {
        std::vector<Front> fs;
        for (const auto& f : fronts) fs.push_back(to_front(f));
        return from_front(union_reference_front(fs));
    });
    m.def("auc", [](const std::vector<double>& s, const std::vector<int>& l) { return auc(s, l); });
    m.def("rank_sum", [](const std::vector<double>& a, const std::vector<double>& b) {
        auto r = rank_sum_compare(a, b);
        return py::make_tuple(r.p_value, r.exact);
    });
    m.def("gene_frequency", [](const std::vector<std::vector<int>>& ps) {
        std::vector<DecisionVector> xs;
        for (const auto& x : ps) xs.push_back(to_bits(x));
        return gene_frequency(xs);
    });
    m.def("select_drivers", [](const std::vector<double>& f, double t) { return select_drivers(f, t); },
          py::arg("freq"), py::arg("threshold") = 0.8);

    m.def(
        "erdos_renyi",
        [](std::size_t n, double p, bool directed, std::uint64_t seed) {
            Rng rng(seed);
            return erdos_renyi(n, p, directed, rng);
        },
        py::arg("n"), py::arg("p"), py::arg("directed") = false, py::arg("seed") = 1);
    m.def(
        "barabasi_albert",
        [](std::size_t n, std::size_t k, bool directed, std::uint64_t seed) {
            Rng rng(seed);
            return barabasi_albert(n, k, directed, rng);
        },
        py::arg("n"), py::arg("m"), py::arg("directed") = false, py::arg("seed") = 1);
    m.def(
        "random_labels",
        [](std::size_t n, double frac, std::uint64_t seed) {
            Rng rng(seed);
            return from_bits(random_labels(n, frac, rng).labels);
        },
        py::arg("n"), py::arg("fraction"), py::arg("seed") = 1);
}
