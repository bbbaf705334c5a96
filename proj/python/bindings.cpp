#include <ordram/coloring.hpp>
#include <ordram/errors.hpp>
#include <ordram/formulas.hpp>
#include <ordram/hypergraph.hpp>
#include <ordram/io.hpp>
#include <ordram/matching.hpp>
#include <ordram/paths.hpp>
#include <ordram/poset.hpp>
#include <ordram/search.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ordram;

namespace
{
    auto to_py(const BigInt & v) -> py::object
    {
        // hex sidesteps the decimal digit limit of int()
        auto text = (v < 0 ? "-" : "") + BigInt(boost::multiprecision::abs(v)).str(0, std::ios_base::hex);
        return py::module_::import("builtins").attr("int")(text, 16);
    }

    auto to_py(const std::optional<BigInt> & v) -> py::object
    {
        return v ? to_py(*v) : py::none();
    }

    auto report_dict(const BoundReport & r) -> py::dict
    {
        py::dict d;
        d["lower"] = to_py(r.lower);
        d["upper"] = to_py(r.upper);
        d["exact"] = to_py(r.exact);
        d["provenance"] = r.provenance;
        return d;
    }

    auto budget_of(std::uint64_t max_nodes, double max_seconds, int parallel) -> SearchBudget
    {
        SearchBudget b;
        b.max_nodes = max_nodes;
        b.max_seconds = max_seconds;
        b.parallel = parallel;
        return b;
    }

    auto avoidance_dict(const AvoidanceReport & r) -> py::dict
    {
        py::dict d;
        d["ok"] = r.ok;
        d["budget_exhausted"] = r.budget_exhausted;
        if (r.violation) {
            d["color"] = r.violation->color;
            d["map"] = r.violation->embedding.map;
        }
        return d;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Ordered Ramsey numbers of hypergraph paths and matchings";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception_translator([] (std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const InvalidArgument & e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
        catch (const ParseError & e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<OrderedHypergraph>(m, "Hypergraph")
        .def(py::init<int, int, std::vector<Edge>>(), py::arg("n"), py::arg("k"), py::arg("edges"))
        .def_property_readonly("n", &OrderedHypergraph::n)
        .def_property_readonly("k", &OrderedHypergraph::k)
        .def_property_readonly("edges", &OrderedHypergraph::sorted_edges)
        .def("max_degree", &OrderedHypergraph::max_degree)
        .def("reversed", &OrderedHypergraph::reversed)
        .def("same_edges", &OrderedHypergraph::same_edges)
        .def("to_text", [] (const OrderedHypergraph & g) { return write_hypergraph(g); })
        .def_static("from_text", &read_hypergraph)
        .def("__repr__", [] (const OrderedHypergraph & g) {
            return "<Hypergraph k=" + std::to_string(g.k()) + " n=" + std::to_string(g.n()) +
                " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("path", &build_path, py::arg("k"), py::arg("l"), py::arg("e"));
    m.def("nested_matching", &build_nested_matching, py::arg("k"), py::arg("r"), py::arg("e"));
    m.def("complete", &build_complete, py::arg("n"), py::arg("k"));
    m.def("G", [] (int s, int k, const std::string & mode) {
        if (mode != "concatenation" && mode != "blowup")
            throw InvalidArgument("mode is 'concatenation' or 'blowup'");
        return build_G(s, k, mode == "blowup" ? GMode::blowup : GMode::concatenation);
    }, py::arg("s"), py::arg("k"), py::arg("mode") = "concatenation");
    m.def("non_nestable_example", &non_nestable_example, py::arg("k"));
    m.def("parse_target", &parse_target, py::arg("text"));
    m.def("intersection_number", &intersection_number, py::arg("k"), py::arg("l"));
    m.def("contains", [] (const OrderedHypergraph & host, const OrderedHypergraph & pattern) -> std::optional<std::vector<int>> {
        auto e = contains_ordered(host, pattern);
        if (! e)
            return std::nullopt;
        return e->map;
    }, py::arg("host"), py::arg("pattern"));

    py::class_<EdgeColoring>(m, "Coloring")
        .def(py::init([] (int n, int k, int t) { return EdgeColoring(n, k, t); }), py::arg("n"), py::arg("k"), py::arg("t"))
        .def_property_readonly("n", &EdgeColoring::n)
        .def_property_readonly("k", &EdgeColoring::k)
        .def_property_readonly("t", &EdgeColoring::t)
        .def("color", [] (const EdgeColoring & c, const std::vector<int> & e) {
            if (static_cast<int>(e.size()) != c.k())
                throw InvalidArgument("edge has the wrong size");
            return c.color(e);
        }, py::arg("edge"))
        .def("set_color", [] (EdgeColoring & c, const std::vector<int> & e, int color) { c.set_color(e, color); },
            py::arg("edge"), py::arg("color"))
        .def("colors", [] (const EdgeColoring & c) {
            return std::vector<int>(c.raw().begin(), c.raw().end());
        }, "Colors of all edges in lexicographic edge order.")
        .def("to_text", [] (const EdgeColoring & c) { return write_coloring(c); })
        .def_static("from_text", &read_coloring)
        .def("__eq__", &EdgeColoring::operator==)
        .def("__repr__", [] (const EdgeColoring & c) {
            return "<Coloring k=" + std::to_string(c.k()) + " n=" + std::to_string(c.n()) + " t=" + std::to_string(c.t()) + ">";
        });

    m.def("construct_path_avoider", [] (int k, int l, const std::vector<int> & sizes) {
        return construct_path_avoider(PathFamilySpec{k, l, sizes});
    }, py::arg("k"), py::arg("l"), py::arg("sizes"));
    m.def("construct_matching_avoider", &construct_matching_avoider, py::arg("k"), py::arg("nestings"), py::arg("sizes"));
    m.def("verify_avoids", [] (const EdgeColoring & c, const std::vector<OrderedHypergraph> & targets) {
        return avoidance_dict(verify_avoids(c, targets));
    }, py::arg("coloring"), py::arg("targets"));
    m.def("lift", [] (const EdgeColoring & c, int k, int l) { return lift_coloring(c, k, l); },
        py::arg("coloring"), py::arg("k"), py::arg("l"));
    m.def("project", &project_coloring, py::arg("coloring"), py::arg("k"), py::arg("l"));
    m.def("rational_reduction", &rational_reduction, py::arg("edge"), py::arg("k"), py::arg("l"));
    m.def("canonical_preimage", &canonical_preimage, py::arg("edge"), py::arg("k"), py::arg("l"));
    m.def("certificate", [] (const EdgeColoring & c, int k, int l, const std::vector<int> & sizes) {
        auto out = upper_bound_certificate(c, PathFamilySpec{k, l, sizes});
        py::dict d;
        d["ok"] = out.certificate && out.certificate->ok();
        if (out.certificate) {
            d["no_descent"] = out.certificate->no_descent;
            d["max_fiber"] = out.certificate->max_fiber;
            d["phi"] = out.certificate->phi;
        }
        if (out.violation) {
            d["color"] = out.violation->color;
            d["map"] = out.violation->embedding.map;
        }
        return d;
    }, py::arg("coloring"), py::arg("k"), py::arg("l"), py::arg("sizes"));

    m.def("exists_avoider", [] (int N, int k, const std::vector<OrderedHypergraph> & targets,
            std::uint64_t max_nodes, double max_seconds, int parallel) {
        AvoiderResult r;
        {
            py::gil_scoped_release release;
            r = exists_avoider(N, k, targets, budget_of(max_nodes, max_seconds, parallel));
        }
        py::dict d;
        d["outcome"] = to_string(r.outcome);
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        d["nodes"] = r.nodes;
        d["seconds"] = r.seconds;
        return d;
    }, py::arg("N"), py::arg("k"), py::arg("targets"), py::kw_only(),
        py::arg("max_nodes") = 0, py::arg("max_seconds") = 0.0, py::arg("parallel") = 1);

    m.def("ordered_ramsey", [] (const std::vector<OrderedHypergraph> & targets,
            std::uint64_t max_nodes, double max_seconds, int parallel) {
        RamseyResult r;
        {
            py::gil_scoped_release release;
            r = ordered_ramsey_exact(targets, budget_of(max_nodes, max_seconds, parallel));
        }
        py::dict d;
        d["value"] = r.value ? py::cast(*r.value) : py::none();
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        py::list per_n;
        for (auto & rec : r.per_n) {
            py::dict x;
            x["N"] = rec.N;
            x["outcome"] = to_string(rec.outcome);
            x["nodes"] = rec.nodes;
            x["seconds"] = rec.seconds;
            x["source"] = rec.source;
            per_n.append(x);
        }
        d["per_n"] = per_n;
        d["bracket"] = r.bracket ? py::cast(*r.bracket) : py::none();
        return d;
    }, py::arg("targets"), py::kw_only(), py::arg("max_nodes") = 0, py::arg("max_seconds") = 0.0, py::arg("parallel") = 1);

    m.def("size_Q", [] (int m_, const std::vector<int> & sizes) { return to_py(size_Q(m_, sizes)); },
        py::arg("m"), py::arg("sizes"));
    m.def("tower", [] (int h, std::int64_t n) { return to_py(tower(h, BigInt(n))); }, py::arg("h"), py::arg("n"));
    m.def("exact_loose_path", [] (int k, int l, const std::vector<int> & sizes) {
        return to_py(exact_loose_path(PathFamilySpec{k, l, sizes}));
    }, py::arg("k"), py::arg("l"), py::arg("sizes"));
    m.def("loose_path_report", [] (int k, int l, const std::vector<int> & sizes) {
        return report_dict(loose_path_report(PathFamilySpec{k, l, sizes}));
    }, py::arg("k"), py::arg("l"), py::arg("sizes"));
    m.def("corollary_i2", [] (int k, int l, const std::vector<int> & sizes) { return to_py(corollary_i2(k, l, sizes)); },
        py::arg("k"), py::arg("l"), py::arg("sizes"));
    m.def("main_relation", [] (int k, int l, const std::vector<int> & sizes) {
        return to_py(theorem_main_relation(k, l, sizes));
    }, py::arg("k"), py::arg("l"), py::arg("sizes"));
    m.def("tower_bounds", [] (int e, int t, int k, int l) {
        auto b = tower_bounds(e, t, k, l);
        py::dict d;
        d["primary"] = report_dict(b.primary);
        d["alternate"] = report_dict(b.alternate);
        return d;
    }, py::arg("e"), py::arg("t"), py::arg("k"), py::arg("l"));
    m.def("bound_clique_path", [] (int n, int p, int t) { return to_py(bound_clique_path(n, p, t).value); },
        py::arg("n"), py::arg("p"), py::arg("t"));
    m.def("bound_arbitrary_path", [] (int p, int t) { return to_py(bound_arbitrary_path(p, t).value); },
        py::arg("p"), py::arg("t"));
    m.def("exact_nested_matching", [] (int k, const std::vector<int> & sizes) { return to_py(exact_nested_matching(k, sizes)); },
        py::arg("k"), py::arg("sizes"));
    m.def("bound_nestable_matching", [] (int e, int k, int t) { return to_py(bound_nestable_matching(e, k, t)); },
        py::arg("e"), py::arg("k"), py::arg("t"));

    m.def("classify_pair", [] (const Edge & a, const Edge & b) { return to_string(classify_pair(a, b)); },
        py::arg("a"), py::arg("b"));
    m.def("is_simply_interlacing", [] (const OrderedHypergraph & g) { return is_simply_interlacing(g).ok; }, py::arg("matching"));
    m.def("is_k_nestable", [] (const OrderedHypergraph & g) { return is_k_nestable(g).nesting.has_value(); }, py::arg("matching"));
    m.def("embed_into_G", [] (const OrderedHypergraph & g) -> std::optional<py::tuple> {
        std::optional<KNesting> nesting;
        if (g.k() >= 3 && is_simply_interlacing(g).ok)
            nesting = find_k_nesting_simply_interlacing(g);
        else
            nesting = is_k_nestable(g).nesting;
        if (! nesting)
            return std::nullopt;
        auto e = embed_into_G(g, *nesting);
        return py::make_tuple(e.s, e.embedding.map);
    }, py::arg("matching"), "(s, map) for an embedding into G_s^k, or None when the matching is not k-nestable.");
}
