#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gdm/construct.hpp"
#include "gdm/errors.hpp"
#include "gdm/io.hpp"
#include "gdm/oracle.hpp"

namespace py = pybind11;
using namespace gdm;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

std::vector<GroupElement> to_elements(const Rows& rows) {
    std::vector<GroupElement> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(GroupElement{r});
    return out;
}

Rows from_elements(const std::vector<GroupElement>& elems) {
    Rows out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(e.residues);
    return out;
}

SearchBudget make_budget(double seconds, std::uint64_t nodes) {
    return {std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0)), nodes};
}

py::object opt_rows(const std::optional<GroupLabeling>& l) {
    if (!l) return py::none();
    return py::cast(from_elements(l->values));
}

} // namespace

PYBIND11_MODULE(_gdm, m) {
    m.doc() = "group distance magic labelings of graphs (C++ core)";

    py::register_exception<ArgumentError>(m, "GdmArgumentError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InternalCheckError>(m, "InternalCheckError", PyExc_RuntimeError);

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def(py::init<std::vector<std::int64_t>>(), py::arg("factors"))
        .def(py::init([](const std::string& spec) { return AbelianGroup::parse(spec); }),
             py::arg("spec"))
        .def_property_readonly("factors", &AbelianGroup::factors)
        .def_property_readonly("order", &AbelianGroup::order)
        .def("spec", &AbelianGroup::spec)
        .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
        .def("__repr__",
             [](const AbelianGroup& g) { return "AbelianGroup('" + g.spec() + "')"; });

    m.def("parse_group", &AbelianGroup::parse, py::arg("spec"));
    m.def("enumerate_groups", &enumerate_groups, py::arg("order"));
    m.def("enumerate_elements",
          [](const AbelianGroup& g) { return from_elements(enumerate_elements(g)); });
    m.def("add", [](const AbelianGroup& g, const std::vector<std::int64_t>& a,
                    const std::vector<std::int64_t>& b) {
        return add(g, GroupElement{a}, GroupElement{b}).residues;
    });
    m.def("neg", [](const AbelianGroup& g, const std::vector<std::int64_t>& a) {
        return neg(g, GroupElement{a}).residues;
    });
    m.def("scalar_mul", [](const AbelianGroup& g, std::int64_t k, const std::vector<std::int64_t>& a) {
        return scalar_mul(g, k, GroupElement{a}).residues;
    });
    m.def("sum_all", [](const AbelianGroup& g) { return sum_all(g).residues; });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return os.str();
        });

    m.def("cycle", &cycle);
    m.def("complete", &complete);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("empty_graph", &empty_graph);
    m.def("dutch_windmill", &dutch_windmill, py::arg("m"), py::arg("t"));
    m.def("circulant", &circulant);
    m.def("lexicographic_product", &lexicographic_product);
    m.def("degree_class", &degree_class);
    m.def("random_graph", [](int n, double p, std::uint32_t seed) {
        std::mt19937 rng(seed);
        return random_graph(n, p, rng);
    });

    py::class_<GroupVerdict>(m, "GroupVerdict")
        .def_property_readonly("status", [](const GroupVerdict& v) { return std::string(to_string(v.status)); })
        .def_property_readonly("magic", &GroupVerdict::magic)
        .def_property_readonly("mu", [](const GroupVerdict& v) -> py::object {
            return v.mu ? py::cast(v.mu->residues) : py::none();
        })
        .def_property_readonly("witness", [](const GroupVerdict& v) -> py::object {
            if (v.duplicate) return py::make_tuple(v.duplicate->first, v.duplicate->second);
            if (v.unequal_vertex) return py::cast(*v.unequal_vertex);
            return py::none();
        });

    py::class_<ClassicVerdict>(m, "ClassicVerdict")
        .def_property_readonly("status", [](const ClassicVerdict& v) { return std::string(to_string(v.status)); })
        .def_property_readonly("magic", &ClassicVerdict::magic)
        .def_property_readonly("k", [](const ClassicVerdict& v) -> py::object {
            return v.k ? py::cast(*v.k) : py::none();
        });

    m.def("verify_group", [](const Graph& g, const AbelianGroup& grp, const Rows& values) {
        return verify_group(g, GroupLabeling{grp, to_elements(values)});
    });
    m.def("verify_classic", [](const Graph& g, const std::vector<std::int64_t>& values) {
        return verify_classic(g, ClassicLabeling{values});
    });
    m.def("weight_group", [](const Graph& g, const AbelianGroup& grp, const Rows& values, int v) {
        return weight(g, GroupLabeling{grp, to_elements(values)}, v).residues;
    });

    py::class_<ConstructionOutcome>(m, "ConstructionOutcome")
        .def_property_readonly("product", [](const ConstructionOutcome& o) { return o.product; })
        .def_property_readonly("group", [](const ConstructionOutcome& o) { return o.labeling.group; })
        .def_property_readonly("values", [](const ConstructionOutcome& o) { return from_elements(o.labeling.values); })
        .def_property_readonly("mu", [](const ConstructionOutcome& o) { return o.predicted_mu.residues; })
        .def_property_readonly("theorem", [](const ConstructionOutcome& o) { return o.theorem_tag; });

    m.def("label_c4_klein", &label_c4_klein, py::arg("g"), py::arg("a"));
    m.def("label_c4_cyclic_two_part", &label_c4_cyclic_two_part, py::arg("g"), py::arg("p"), py::arg("a"));
    m.def("label_c4_any_group", &label_c4_any_group, py::arg("g"), py::arg("group"));
    m.def("label_kpq_c4", &label_kpq_c4, py::arg("p"), py::arg("q"), py::arg("group"));
    m.def("label_composition",
          [](const Graph& g, const Graph& h, const AbelianGroup& grp, const Rows& base, std::int64_t p) {
              return label_composition(g, h, GroupLabeling{grp, to_elements(base)}, p);
          },
          py::arg("g"), py::arg("h"), py::arg("group"), py::arg("base_values"), py::arg("p"));
    m.def("eulerian_odd_all_groups", &eulerian_odd_all_groups);
    m.def("no_group_exists", &no_group_exists);
    m.def("blanket_degree_class", &blanket_degree_class);

    py::class_<GroupSearchReport>(m, "GroupSearchReport")
        .def_property_readonly("outcome", [](const GroupSearchReport& r) { return std::string(to_string(r.outcome)); })
        .def_property_readonly("found", [](const GroupSearchReport& r) { return r.outcome == SearchOutcome::Found; })
        .def_property_readonly("values", [](const GroupSearchReport& r) { return opt_rows(r.labeling); })
        .def_property_readonly("mu", [](const GroupSearchReport& r) -> py::object {
            return r.mu ? py::cast(r.mu->residues) : py::none();
        })
        .def_readonly("nodes_explored", &GroupSearchReport::nodes_explored)
        .def_property_readonly("elapsed", [](const GroupSearchReport& r) { return r.elapsed.count(); });

    py::class_<ClassicSearchReport>(m, "ClassicSearchReport")
        .def_property_readonly("outcome", [](const ClassicSearchReport& r) { return std::string(to_string(r.outcome)); })
        .def_property_readonly("found", [](const ClassicSearchReport& r) { return r.outcome == SearchOutcome::Found; })
        .def_property_readonly("values", [](const ClassicSearchReport& r) -> py::object {
            return r.labeling ? py::cast(r.labeling->values) : py::none();
        })
        .def_property_readonly("k", [](const ClassicSearchReport& r) -> py::object {
            return r.k ? py::cast(*r.k) : py::none();
        })
        .def_readonly("nodes_explored", &ClassicSearchReport::nodes_explored)
        .def_property_readonly("elapsed", [](const ClassicSearchReport& r) { return r.elapsed.count(); });

    m.def("search_group_dm",
          [](const Graph& g, const AbelianGroup& grp, double seconds, std::uint64_t nodes, bool det) {
              return search_group_dm(g, grp, make_budget(seconds, nodes), det);
          },
          py::arg("g"), py::arg("group"), py::arg("time_limit") = 60.0,
          py::arg("node_limit") = UINT64_MAX, py::arg("deterministic") = false);
    m.def("search_classic_dm",
          [](const Graph& g, double seconds, std::uint64_t nodes, bool det) {
              return search_classic_dm(g, make_budget(seconds, nodes), det);
          },
          py::arg("g"), py::arg("time_limit") = 60.0, py::arg("node_limit") = UINT64_MAX,
          py::arg("deterministic") = false);

    py::class_<PairSumSystem>(m, "PairSumSystem")
        .def_property_readonly("size", &PairSumSystem::size)
        .def_property_readonly("mass", &PairSumSystem::mass)
        .def("equation_row", &PairSumSystem::equation_row);
    m.def("reduce_c4_product", &reduce_c4_product);
    m.def("solve_pair_sum", [](const PairSumSystem& sys, double seconds) {
        return solve_pair_sum(sys, make_budget(seconds, UINT64_MAX));
    }, py::arg("system"), py::arg("time_limit") = 60.0);

    py::class_<WindmillCertificate>(m, "WindmillCertificate")
        .def_readonly("t", &WindmillCertificate::t)
        .def_readonly("infeasible", &WindmillCertificate::infeasible)
        .def_readonly("reason", &WindmillCertificate::reason)
        .def("check", &check_certificate)
        .def("__str__", &format_certificate);
    m.def("windmill_certificate", &windmill_certificate, py::arg("t"));

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("m", &ScanResult::m)
        .def_readonly("n", &ScanResult::n)
        .def_readonly("found", &ScanResult::found)
        .def_property_readonly("values", [](const ScanResult& r) -> py::object {
            return r.labeling ? py::cast(r.labeling->values) : py::none();
        });
    m.def("scan_kmn_c4", [](int max_n) { return scan_kmn_c4(max_n); }, py::arg("max_n"));
}
