#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbsteiner/audit.hpp"
#include "cbsteiner/dp.hpp"
#include "cbsteiner/errors.hpp"
#include "cbsteiner/fixtures.hpp"
#include "cbsteiner/generators.hpp"
#include "cbsteiner/io.hpp"
#include "cbsteiner/oracle.hpp"
#include "cbsteiner/reductions.hpp"
#include "cbsteiner/report.hpp"

namespace py = pybind11;
using namespace cbsteiner;

namespace {

// Reports cross the boundary as plain dicts and lists.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<Interval> to_intervals(const std::vector<std::pair<int, int>>& raw) {
    std::vector<Interval> out;
    for (const auto& [l, r] : raw) out.push_back({l, r});
    return out;
}

std::vector<std::pair<int, int>> from_intervals(std::span<const Interval> ivs) {
    std::vector<std::pair<int, int>> out;
    for (const auto& iv : ivs) out.emplace_back(iv.l, iv.r);
    return out;
}

// Accepts "all-x" style names, "x1,y4" lists, or a sequence of such tokens.
std::vector<Vertex> terminals_of(const ConvexBipartiteGraph& g, const py::object& spec) {
    if (py::isinstance<py::str>(spec)) return parse_terminal_list(g, spec.cast<std::string>());
    std::string joined;
    for (const auto& item : spec) {
        if (!joined.empty()) joined += ',';
        joined += py::str(item).cast<std::string>();
    }
    return parse_terminal_list(g, joined);
}

std::vector<int> y_ids(const std::vector<Vertex>& vs) {
    std::vector<int> out;
    for (const auto& v : vs) {
        if (v.side != Side::Y) throw InvalidInput("expected Y terminals only, got " + to_string(v));
        out.push_back(v.id);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_cbsteiner, m) {
    m.doc() = "Steiner sets on convex bipartite graphs";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<OracleScaleExceeded> scale_error(m, "OracleScaleExceeded", PyExc_RuntimeError);
    static py::exception<InternalInconsistency> internal_error(m, "InternalInconsistency", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const InvalidInput& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const OracleScaleExceeded& e) {
            py::set_error(scale_error, e.what());
        } catch (const InternalInconsistency& e) {
            py::set_error(internal_error, e.what());
        }
    });

    py::class_<ConvexBipartiteGraph>(m, "ConvexBipartiteGraph")
        .def(py::init([](int x_count, const std::vector<std::pair<int, int>>& intervals) {
                 return ConvexBipartiteGraph(x_count, to_intervals(intervals));
             }),
             py::arg("m"), py::arg("intervals"))
        .def_property_readonly("m", &ConvexBipartiteGraph::m)
        .def_property_readonly("n", &ConvexBipartiteGraph::n)
        .def_property_readonly("intervals",
                               [](const ConvexBipartiteGraph& g) { return from_intervals(g.intervals()); })
        .def("to_text", [](const ConvexBipartiteGraph& g) { return serialize(CbgInstance{g, {}}); })
        .def("__repr__", [](const ConvexBipartiteGraph& g) {
            return "ConvexBipartiteGraph(m=" + std::to_string(g.m()) + ", n=" + std::to_string(g.n()) + ")";
        });

    m.def(
        "parse_cbg",
        [](const std::string& text) {
            auto inst = parse_cbg(text);
            std::vector<std::string> terminals;
            for (const auto& v : inst.terminals) terminals.push_back(to_string(v));
            return py::make_tuple(inst.graph, terminals);
        },
        py::arg("text"), "Parse a 'cbg' instance; returns (graph, terminal names).");

    m.def("canonical_form", [](const std::string& text) { return canonical_form(text); }, py::arg("text"));

    m.def(
        "solve",
        [](const ConvexBipartiteGraph& g, const py::object& terminals) {
            return to_py(result_json(solve_general(g, terminals_of(g, terminals))));
        },
        py::arg("graph"), py::arg("terminals"), "Minimum Steiner set for any terminal case.");

    m.def(
        "solve_table",
        [](const ConvexBipartiteGraph& g, const py::object& terminals) {
            const auto ids = y_ids(terminals_of(g, terminals));
            const auto table = compute_table(g, ids);
            Json out = {{"table", table_json(table)}, {"result", result_json(reconstruct(table, g, ids))}};
            return to_py(out);
        },
        py::arg("graph"), py::arg("terminals"), "Interval-table DP with back-pointer reconstruction.");

    m.def(
        "oracle",
        [](const ConvexBipartiteGraph& g, const py::object& terminals) {
            return to_py(oracle_json(min_steiner_brute(g, terminals_of(g, terminals))));
        },
        py::arg("graph"), py::arg("terminals"), "Brute-force minimum Steiner set.");

    m.def(
        "dominating_set",
        [](const ConvexBipartiteGraph& g) {
            Json out = domination_json(dominating_set_via_stree(g));
            return to_py(out);
        },
        py::arg("graph"));

    m.def(
        "min_dominating_set",
        [](const ConvexBipartiteGraph& g) { return to_py(oracle_json(min_dominating_brute(g))); },
        py::arg("graph"));

    m.def(
        "interval_steiner",
        [](const std::vector<std::pair<int, int>>& intervals, const std::vector<int>& terminals) {
            return solve_interval_steiner(IntervalGraphModel(to_intervals(intervals)), terminals).steiner_set;
        },
        py::arg("intervals"), py::arg("terminals"), "Steiner set of an interval graph, as interval ids.");

    m.def(
        "vertex_cover_reduction",
        [](int vertices, const std::vector<std::pair<int, int>>& edges, int k) {
            const GeneralGraph g(vertices, edges);
            const auto inst = vc_to_caterpillar_stree(g, k);
            const auto vc = min_vertex_cover_brute(g);
            const auto st = min_steiner_brute(inst.star_graph, inst.terminals);
            Json out = {{"budget", inst.budget},
                        {"x_count", inst.star_graph.x_count()},
                        {"y_count", inst.star_graph.y_count()},
                        {"terminals", vertex_list_json(inst.terminals)},
                        {"caterpillar_valid", validate_k_star_caterpillar_convex(inst.star_graph, inst.caterpillar, 1)},
                        {"vertex_cover", oracle_json(vc)},
                        {"steiner", oracle_json(st)}};
            return to_py(out);
        },
        py::arg("vertices"), py::arg("edges"), py::arg("k"),
        "Build the caterpillar Steiner instance for (G, k) and brute-force both sides.");

    m.def(
        "generate",
        [](int x_count, int y_count, double density, std::uint64_t seed) {
            return gen_convex_bipartite(GenConfig{seed, x_count, y_count, density, true});
        },
        py::arg("m"), py::arg("n"), py::arg("density") = 0.4, py::arg("seed") = 1);

    m.def(
        "reference_traces",
        []() {
            Json out = Json::array();
            for (const auto& r : replay_reference_traces()) {
                out.push_back({{"name", r.name}, {"ok", r.ok()}, {"diffs", r.diffs}});
            }
            return to_py(out);
        },
        "Replay the built-in traced instances; every entry should have ok = True.");

    m.def(
        "audit",
        [](const std::string& kind, int count, std::uint64_t seed) {
            AuditReport r;
            if (kind == "oracle-sweep") {
                r = oracle_sweep(count, seed);
            } else if (kind == "vc") {
                r = vc_sweep(count, seed);
            } else if (kind == "interval") {
                r = interval_sweep(count, seed);
            } else if (kind == "domination") {
                r = domination_audit(count, seed);
            } else if (kind == "table-dp") {
                r = table_dp_audit(count, seed);
            } else {
                throw InvalidInput("unknown audit '" + kind + "'");
            }
            return to_py(r.report);
        },
        py::arg("kind"), py::arg("count"), py::arg("seed") = 1);
}
