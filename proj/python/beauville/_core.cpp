#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <random>

#include "beauville/dataset.hpp"

namespace py = pybind11;
using namespace beauville;

namespace {

py::int_ to_py(const BigInt& n) { return py::int_(py::module_::import("builtins").attr("int")(n.str())); }

std::vector<std::int64_t> one_based(const Permutation& p) {
    std::vector<std::int64_t> out;
    for (auto v : p.images()) out.push_back(static_cast<std::int64_t>(v) + 1);
    return out;
}

std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> tup(const TripleType& t) { return {t.l, t.m, t.n}; }

py::dict search_dict(const UnmixedSearchResult& r) {
    py::dict d;
    d["status"] = to_string(r.status);
    d["certificate"] = r.certificate.summary();
    d["note"] = r.note;
    if (r.structure) {
        d["structure"] = py::make_tuple(r.structure->first, r.structure->second);
        d["type"] = type_string(r.structure->first.type, r.structure->second.type);
    } else {
        d["structure"] = py::none();
    }
    d["phi1"] = r.phi1;
    d["phi2"] = r.phi2;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Beauville structures on permutation groups";

    py::register_exception<DatasetError>(m, "DatasetError", PyExc_ValueError);
    py::register_exception<WordParseError>(m, "WordParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<InvalidAutomorphism>(m, "InvalidAutomorphism", PyExc_ValueError);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::size_t>(), py::arg("degree"))
        .def_static("from_cycles", &Permutation::from_cycles, py::arg("text"), py::arg("degree"))
        .def_static(
            "from_images",
            [](std::vector<std::int64_t> images) { return Permutation::from_one_based(images); },
            "1-based images")
        .def_property_readonly("degree", &Permutation::degree)
        .def_property_readonly("images", &one_based, "1-based images")
        .def("order", &Permutation::order)
        .def("inverse", &Permutation::inverse)
        .def("is_identity", &Permutation::is_identity)
        .def("conjugated_by", &Permutation::conjugated_by)
        .def("__mul__", [](const Permutation& p, const Permutation& q) { return p * q; })
        .def("__eq__", [](const Permutation& p, const Permutation& q) { return p == q; })
        .def("__hash__", &Permutation::hash)
        .def("__str__", &Permutation::to_cycle_string)
        .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.to_cycle_string() + "')"; });

    py::class_<PermGroup>(m, "PermGroup")
        .def(py::init([](std::size_t degree, std::vector<Permutation> gens) { return PermGroup(degree, std::move(gens)); }),
             py::arg("degree"), py::arg("generators"))
        .def_property_readonly("degree", &PermGroup::degree)
        .def_property_readonly("generators", &PermGroup::generators)
        .def("order", [](const PermGroup& G) { return to_py(G.order()); })
        .def("__contains__", &PermGroup::contains)
        .def(
            "random_element",
            [](const PermGroup& G, std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                return G.random_element(rng);
            },
            py::arg("seed") = kDefaultSeed);

    py::class_<GeneratingTriple>(m, "Triple")
        .def_readonly("x", &GeneratingTriple::x)
        .def_readonly("y", &GeneratingTriple::y)
        .def_readonly("z", &GeneratingTriple::z)
        .def_property_readonly("type", [](const GeneratingTriple& t) { return tup(t.type); })
        .def("__repr__", [](const GeneratingTriple& t) { return "Triple" + t.type.str(); });

    py::class_<Report>(m, "Report")
        .def_readonly("group", &Report::group)
        .def_property_readonly("passed", &Report::pass)
        .def_property_readonly("verdict", &Report::verdict)
        .def_property_readonly("conditions",
                               [](const Report& r) {
                                   std::vector<std::tuple<std::string, bool, std::string>> out;
                                   for (const auto& c : r.conditions) out.emplace_back(c.name, c.pass, c.detail);
                                   return out;
                               })
        .def_readonly("facts", &Report::facts)
        .def("to_text", [](const Report& r) { return to_text(r); })
        .def("to_json", [](const Report& r, bool timing) { return to_json(r, timing); }, py::arg("timing") = false);

    py::class_<GroupDataset>(m, "GroupDataset")
        .def_readonly("name", &GroupDataset::name)
        .def_readonly("degree", &GroupDataset::degree)
        .def_readonly("group", &GroupDataset::group)
        .def_readonly("overgroup", &GroupDataset::overgroup)
        .def_readonly("automorphisms_complete", &GroupDataset::automorphisms_complete)
        .def_property_readonly("generator_names",
                               [](const GroupDataset& ds) {
                                   std::string s;
                                   for (const auto& g : ds.generators) s += g.name;
                                   return s;
                               })
        .def("generator", [](const GroupDataset& ds, char c) { return ds.generator(c); })
        .def("evaluate", [](const GroupDataset& ds, const std::string& w) { return evaluate(w, ds.binding()); },
             py::arg("word"))
        .def("save", &save_group);

    m.def("bundled", &bundled, py::arg("name"));
    m.def("bundled_names", &bundled_names);
    m.def("load_group", &load_group, py::arg("path"));
    m.def("parse_group", [](const std::string& text) { return parse_group(text); }, py::arg("text"));

    m.def("make_triple", &make_triple, py::arg("x"), py::arg("y"));
    m.def("is_hyperbolic", [](std::uint64_t l, std::uint64_t mm, std::uint64_t n) { return is_hyperbolic({l, mm, n}); });
    m.def("is_conjugate", [](const PermGroup& G, const Permutation& u, const Permutation& v) { return is_conjugate(G, u, v); });

    m.def(
        "verify_unmixed",
        [](const PermGroup& G, const GeneratingTriple& t1, const GeneratingTriple& t2, const std::string& name) {
            return verify_unmixed(G, t1, t2, {{}, nullptr, name});
        },
        py::arg("group"), py::arg("t1"), py::arg("t2"), py::arg("name") = "");
    m.def(
        "verify_strongly_real",
        [](const GroupDataset& ds, const GeneratingTriple& t1, const GeneratingTriple& t2, const Permutation& g) {
            const BeauvilleStructure S{t1, t2, ds.group};
            return strongly_real_report(S, Automorphism::conjugation(ds.group, g));
        },
        py::arg("dataset"), py::arg("t1"), py::arg("t2"), py::arg("conjugator"),
        "conjugator: an element of the group or an overgroup inducing the automorphism");
    m.def(
        "verify_mixed",
        [](const PermGroup& G, const Permutation& x, const Permutation& y, bool strict) {
            return verify_mixed(G, x, y, {{}, strict, ""});
        },
        py::arg("group"), py::arg("x"), py::arg("y"), py::arg("strict_sigma") = false);

    m.def(
        "search_unmixed",
        [](const GroupDataset& ds, bool strongly_real, unsigned jobs) {
            SearchOptions o;
            o.strongly_real = strongly_real;
            if (strongly_real) o.automorphisms = automorphism_source(ds);
            o.jobs = jobs;
            py::gil_scoped_release release;
            auto r = search_unmixed(ds.group, o);
            py::gil_scoped_acquire acquire;
            return search_dict(r);
        },
        py::arg("dataset"), py::arg("strongly_real") = false, py::arg("jobs") = 1);
    m.def(
        "search_mixed",
        [](const PermGroup& G, bool strict) {
            const auto r = search_mixed(G, {{}, strict, ""});
            py::dict d;
            d["status"] = to_string(r.status);
            d["index_two_subgroups"] = r.subgroups.size();
            d["structure"] = r.structure;
            return d;
        },
        py::arg("group"), py::arg("strict_sigma") = false);

    m.def(
        "table_row",
        [](const std::string& group) {
            const auto& r = bundled_row(group);
            py::dict d;
            d["group"] = r.group;
            d["x1"] = r.x1;
            d["x2"] = r.x2;
            d["u"] = r.u;
            d["j"] = py::make_tuple(r.j1, r.j2);
            d["c"] = r.c;
            d["type"] = r.type ? py::object(py::str(r.type->str())) : py::object(py::none());
            d["gens_of_g2"] = r.gens_of_g2;
            return d;
        },
        py::arg("group"));
    m.def(
        "evaluate_row",
        [](const std::string& group) {
            const auto el = evaluate_row(bundled_row(group), bundled(group));
            return py::make_tuple(el.candidate.first, el.candidate.second);
        },
        py::arg("group"));
}
