#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>

#include "riskpath/accumulate.hpp"
#include "riskpath/generate.hpp"
#include "riskpath/graph_io.hpp"
#include "riskpath/polynomial.hpp"
#include "riskpath/simulate.hpp"
#include "riskpath/symbolic.hpp"

namespace py = pybind11;
using namespace riskpath;

namespace {

using DagPtr = std::shared_ptr<Dag>;

Model model_from(const std::string& name) {
    if (name == "eagle") return Model::eagle;
    if (name == "bat") return Model::bat;
    throw py::value_error("model must be 'eagle' or 'bat'");
}

OrderKey order_key_from(const std::string& name) {
    if (name == "accumulated") return OrderKey::accumulated;
    if (name == "remainder") return OrderKey::remainder;
    throw py::value_error("order_key must be 'accumulated' or 'remainder'");
}

DagPtr apply_alpha(const DagPtr& dag, const std::optional<double>& alpha) {
    if (!alpha) return dag;
    return std::make_shared<Dag>(dag->with_uniform_risk(*alpha));
}

py::object big_to_py(const BigInt& v) {
    std::string digits = v.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

std::vector<std::string> ids(const Dag& dag, const std::vector<EdgeIndex>& edges) {
    std::vector<std::string> out;
    out.reserve(edges.size());
    for (EdgeIndex e : edges) out.push_back(dag.edge_id(e));
    return out;
}

// Accumulation bound together with the graph it was computed on.
struct PyAccumulation {
    DagPtr dag;
    Accumulation acc;

    py::dict accumulated() const {
        py::dict d;
        for (int i = 0; i < dag->edge_count(); ++i)
            d[py::str(dag->edge_id(i))] = acc.accumulated[static_cast<size_t>(i)];
        return d;
    }
    py::object remainder() const {
        if (acc.remainder.empty()) return py::none();
        py::dict d;
        for (int i = 0; i < dag->edge_count(); ++i)
            d[py::str(dag->edge_id(i))] = acc.remainder[static_cast<size_t>(i)];
        return d;
    }
    py::dict risks() const {
        py::dict d;
        for (int i = 0; i < dag->edge_count(); ++i)
            d[py::str(dag->edge_id(i))] = acc.risk[static_cast<size_t>(i)];
        return d;
    }
    py::dict attempt_order() const {
        py::dict d;
        for (int i = 0; i < dag->edge_count(); ++i)
            d[py::str(dag->edge_id(i))] =
                ids(*dag, acc.attempt_order[static_cast<size_t>(i)]);
        return d;
    }
};

World world_from_dict(const Dag& dag, const py::dict& broken) {
    World w;
    w.broken.assign(static_cast<size_t>(dag.edge_count()), 0);
    for (auto item : broken) {
        EdgeIndex i = dag.edge_index(py::cast<std::string>(item.first));
        w.broken[static_cast<size_t>(i)] = py::cast<bool>(item.second) ? 1 : 0;
    }
    return w;
}

py::dict trace_to_dict(const Dag& dag, const WalkTrace& trace) {
    py::dict d;
    d["reached"] = trace.reached;
    d["path"] = ids(dag, trace.path);
    py::list steps;
    for (const auto& s : trace.steps) {
        py::dict js;
        js["vertex"] = dag.vertex_name(s.at);
        js["broken"] = ids(dag, s.broken_out_edges);
        js["chosen"] = s.chosen ? py::object(py::str(dag.edge_id(*s.chosen))) : py::none();
        steps.append(js);
    }
    d["steps"] = steps;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fault-tolerant path-finding on DAGs with per-edge failure risks";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<EnumerationLimitError>(m, "EnumerationLimitError", PyExc_RuntimeError);

    py::class_<Dag, DagPtr>(m, "Dag")
        .def_property_readonly("edge_ids",
                               [](const Dag& d) {
                                   std::vector<std::string> out;
                                   for (const auto& e : d.edges()) out.push_back(e.id);
                                   return out;
                               })
        .def_property_readonly("vertices", &Dag::vertex_names)
        .def_property_readonly("source",
                               [](const Dag& d) { return d.vertex_name(d.source()); })
        .def_property_readonly("destination",
                               [](const Dag& d) { return d.vertex_name(d.destination()); })
        .def_property_readonly("warnings", &Dag::warnings)
        .def("risk", [](const Dag& d, const std::string& id) { return d.risk(d.edge_index(id)); })
        .def("terminal",
             [](const Dag& d, const std::string& id) { return d.terminal(d.edge_index(id)); })
        .def("neighbors",
             [](const Dag& d, const std::string& id) {
                 return ids(d, d.neighbors(d.edge_index(id)));
             },
             py::arg("edge_id"), "Out-edges of the edge's head, in edge-id order")
        .def("out_edges",
             [](const Dag& d, const std::string& vertex) {
                 return ids(d, d.out_edges(d.vertex_index(vertex)));
             })
        .def("reverse_topological_edge_order",
             [](const Dag& d) { return ids(d, d.reverse_topological_edge_order()); })
        .def("with_uniform_risk",
             [](const Dag& d, double alpha) {
                 return std::make_shared<Dag>(d.with_uniform_risk(alpha));
             })
        .def("serialize", [](const Dag& d) { return serialize_graph(d); })
        .def("__repr__", [](const Dag& d) {
            return "<Dag " + std::to_string(d.vertex_count()) + " vertices, " +
                   std::to_string(d.edge_count()) + " edges>";
        });

    m.def(
        "parse_graph",
        [](const std::string& text) { return std::make_shared<Dag>(parse_graph(text)); },
        py::arg("text"), "Parse a graph from JSON (canonical) or DOT text");

    m.def(
        "validate_dag",
        [](const std::vector<std::tuple<std::string, std::string, std::string,
                                        std::optional<double>>>& edges,
           const std::string& source, const std::string& destination,
           std::optional<double> uniform_risk,
           std::optional<std::vector<std::string>> vertices) {
            GraphSpec spec;
            for (const auto& [id, tail, head, risk] : edges)
                spec.edges.push_back({id, tail, head, risk});
            spec.source = source;
            spec.destination = destination;
            spec.uniform_risk = uniform_risk;
            spec.vertices = std::move(vertices);
            return std::make_shared<Dag>(Dag::validate(spec));
        },
        py::arg("edges"), py::arg("source"), py::arg("destination"),
        py::arg("uniform_risk") = std::nullopt, py::arg("vertices") = std::nullopt,
        "Build a Dag from (id, tail, head, risk) tuples");

    py::class_<PyAccumulation>(m, "Accumulation")
        .def_property_readonly("model",
                               [](const PyAccumulation& a) {
                                   return a.acc.model == Model::eagle ? "eagle" : "bat";
                               })
        .def_property_readonly("source_risk",
                               [](const PyAccumulation& a) { return a.acc.source_risk; })
        .def_property_readonly("source_order",
                               [](const PyAccumulation& a) {
                                   return ids(*a.dag, a.acc.source_order);
                               })
        .def_property_readonly("accumulated", &PyAccumulation::accumulated)
        .def_property_readonly("remainder", &PyAccumulation::remainder)
        .def_property_readonly("risk", &PyAccumulation::risks)
        .def_property_readonly("attempt_order", &PyAccumulation::attempt_order)
        .def("selection_probability",
             [](const PyAccumulation& a, const std::string& i, const std::string& j) {
                 return selection_probability(*a.dag, a.acc, i, j);
             },
             py::arg("edge"), py::arg("neighbor"),
             "C(i;j): probability that the neighbor is chosen first")
        .def("remainder_after",
             [](const PyAccumulation& a, const std::string& j) {
                 return remainder_after(*a.dag, a.acc, j);
             },
             py::arg("edge"), "A(j): downstream failure risk given the edge is intact")
        .def("__repr__", [](const PyAccumulation& a) {
            return std::string("<Accumulation model=") +
                   (a.acc.model == Model::eagle ? "eagle" : "bat") +
                   " source_risk=" + std::to_string(a.acc.source_risk) + ">";
        });

    m.def(
        "accumulate",
        [](const DagPtr& dag, const std::string& model, std::optional<double> alpha,
           const std::string& order_key) {
            DagPtr used = apply_alpha(dag, alpha);
            return PyAccumulation{used, accumulate(*used, model_from(model),
                                                   order_key_from(order_key))};
        },
        py::arg("dag"), py::arg("model") = "bat", py::arg("alpha") = std::nullopt,
        py::arg("order_key") = "accumulated",
        "Backward risk accumulation; alpha substitutes a uniform risk first");

    m.def(
        "accumulate_symbolic",
        [](const DagPtr& dag, const std::string& model) {
            PiecewiseAccumulation pw = accumulate_symbolic(*dag, model_from(model));
            py::list pieces;
            for (const auto& piece : pw.pieces) {
                py::dict jp;
                jp["lo"] = piece.lo;
                jp["hi"] = piece.hi;
                py::dict polys, orders;
                for (int i = 0; i < dag->edge_count(); ++i) {
                    py::list coeffs;
                    for (const BigInt& c :
                         piece.accumulated[static_cast<size_t>(i)].coefficients())
                        coeffs.append(big_to_py(c));
                    polys[py::str(dag->edge_id(i))] = coeffs;
                    orders[py::str(dag->edge_id(i))] =
                        ids(*dag, piece.attempt_order[static_cast<size_t>(i)]);
                }
                jp["polynomials"] = polys;
                jp["attempt_order"] = orders;
                pieces.append(jp);
            }
            py::dict out;
            out["breakpoints"] = pw.breakpoints;
            out["pieces"] = pieces;
            return out;
        },
        py::arg("dag"), py::arg("model") = "bat",
        "Exact integer-coefficient polynomials in the uniform risk, per piece");

    m.def(
        "find_crossovers",
        [](const DagPtr& dag) {
            py::list out;
            for (const auto& c : find_crossovers(*dag))
                out.append(py::make_tuple(c.alpha, dag->edge_id(c.below),
                                          dag->edge_id(c.above)));
            return out;
        },
        py::arg("dag"), "(alpha, below, above) for every source first-choice change");

    m.def(
        "sweep",
        [](const DagPtr& dag, int steps) {
            SweepTable t = sweep(*dag, steps);
            py::list rows;
            for (const auto& row : t.rows) {
                py::dict jr;
                jr["alpha"] = row.alpha;
                py::dict vals;
                for (size_t k = 0; k < t.choice_edges.size(); ++k)
                    vals[py::str(dag->edge_id(t.choice_edges[k]))] = row.failure[k];
                jr["failure"] = vals;
                jr["chosen"] = row.chosen >= 0 ? py::object(py::str(dag->edge_id(row.chosen)))
                                               : py::none();
                rows.append(jr);
            }
            return rows;
        },
        py::arg("dag"), py::arg("steps") = 101);

    m.def(
        "sample_world",
        [](const DagPtr& dag, std::uint64_t seed, std::uint64_t trial) {
            World w = world_for_trial(*dag, seed, trial);
            py::dict d;
            for (int i = 0; i < dag->edge_count(); ++i)
                d[py::str(dag->edge_id(i))] = w.is_broken(i);
            return d;
        },
        py::arg("dag"), py::arg("seed"), py::arg("trial") = 0,
        "Deterministic broken/intact map for one trial substream");

    m.def(
        "greedy_walk",
        [](const PyAccumulation& acc, const py::dict& broken) {
            World w = world_from_dict(*acc.dag, broken);
            return trace_to_dict(*acc.dag, greedy_walk(*acc.dag, acc.acc, w));
        },
        py::arg("accumulation"), py::arg("broken"),
        "Run one greedy episode in the world given as {edge_id: broken}");

    m.def(
        "monte_carlo",
        [](const DagPtr& dag, std::uint64_t trials, std::uint64_t seed, const std::string& model,
           std::optional<double> alpha, const std::string& order_key) {
            DagPtr used = apply_alpha(dag, alpha);
            TrialSummary s =
                monte_carlo(*used, model_from(model), trials, seed, order_key_from(order_key));
            py::dict d;
            d["trials"] = s.trials;
            d["failures"] = s.failures;
            d["failure_rate"] = s.failure_rate;
            d["predicted"] = s.predicted;
            d["z_score"] = s.z_score ? py::object(py::float_(*s.z_score)) : py::none();
            d["seed"] = s.seed;
            return d;
        },
        py::arg("dag"), py::arg("trials"), py::arg("seed") = 0, py::arg("model") = "bat",
        py::arg("alpha") = std::nullopt, py::arg("order_key") = "accumulated");

    m.def(
        "enumerate_exact",
        [](const DagPtr& dag, const std::string& model, std::optional<double> alpha,
           int max_edges, const std::string& order_key) {
            DagPtr used = apply_alpha(dag, alpha);
            Accumulation acc = accumulate(*used, model_from(model), order_key_from(order_key));
            ExactResult r = enumerate_exact(*used, acc, max_edges);
            py::dict d;
            d["failure"] = r.failure;
            d["predicted"] = acc.source_risk;
            py::dict per_edge;
            for (int i = 0; i < used->edge_count(); ++i) {
                const auto& st = r.per_edge[static_cast<size_t>(i)];
                if (!st) continue;
                py::dict js;
                js["commit_probability"] = st->commit_probability;
                js["conditional_failure"] = st->conditional_failure;
                per_edge[py::str(used->edge_id(i))] = js;
            }
            d["edges"] = per_edge;
            return d;
        },
        py::arg("dag"), py::arg("model") = "bat", py::arg("alpha") = std::nullopt,
        py::arg("max_edges") = 25, py::arg("order_key") = "accumulated",
        "Exact walk failure probability by lazy world enumeration");

    m.def(
        "static_most_reliable_path",
        [](const DagPtr& dag) {
            StaticPath p = static_most_reliable_path(*dag);
            return py::make_tuple(ids(*dag, p.edges), p.success);
        },
        py::arg("dag"), "No-reroute baseline: (edge ids, success probability)");

    m.def(
        "generate_layered",
        [](int layers, int width, double edge_prob, std::uint64_t seed, double risk_min,
           double risk_max) {
            LayeredOptions opt;
            opt.layers = layers;
            opt.width = width;
            opt.edge_prob = edge_prob;
            opt.seed = seed;
            opt.risk_min = risk_min;
            opt.risk_max = risk_max;
            return std::make_shared<Dag>(generate_layered(opt));
        },
        py::arg("layers"), py::arg("width"), py::arg("edge_prob") = 0.5, py::arg("seed") = 0,
        py::arg("risk_min") = 0.0, py::arg("risk_max") = 1.0);

    m.attr("__version__") = "0.1.0";
}
