#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oramsey/classify.hpp"
#include "oramsey/construct.hpp"
#include "oramsey/density.hpp"
#include "oramsey/random.hpp"
#include "oramsey/refute.hpp"

#include <sstream>

namespace py = pybind11;
using namespace oramsey;

namespace {

py::list coloring_to_list(const EdgeColoring& c) {
    py::list out;
    for (std::size_t i = 0; i < c.color.size(); ++i) {
        const auto& [u, v] = c.host.edges()[i];
        out.append(py::make_tuple(u, v, c.color[i] == Color::Red ? "R" : "B"));
    }
    return out;
}

EdgeColoring coloring_from_list(const OrderedGraph& host, const py::list& items) {
    std::vector<std::optional<Color>> got(host.edges().size());
    for (const auto& item : items) {
        auto t = item.cast<py::tuple>();
        int u = t[0].cast<int>(), v = t[1].cast<int>();
        std::string col = t[2].cast<std::string>();
        int idx = host.edge_index(u, v);
        if (idx < 0) throw std::invalid_argument("coloring entry is not a host edge");
        got[static_cast<std::size_t>(idx)] = col == "R" ? Color::Red : Color::Blue;
    }
    std::vector<Color> colors;
    for (const auto& c : got) {
        if (!c) throw std::invalid_argument("coloring does not cover every edge");
        colors.push_back(*c);
    }
    return EdgeColoring(host, std::move(colors));
}

const char* verdict_name(ArrowVerdict v) {
    switch (v) {
    case ArrowVerdict::Arrows: return "ARROWS";
    case ArrowVerdict::NotArrows: return "NOT_ARROWS";
    default: return "UNKNOWN";
    }
}

const char* answer_name(Answer a) {
    switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    default: return "UNKNOWN";
    }
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["answer"] = answer_name(v.answer);
    d["applicable"] = v.applicable;
    d["case"] = v.case_number;
    d["swapped"] = v.swapped;
    d["tag"] = v.tag;
    d["reason"] = v.reason;
    return d;
}

} // namespace

PYBIND11_MODULE(_oramsey, m) {
    m.doc() = "ordered Ramsey arrowing toolkit";

    py::class_<OrderedGraph>(m, "OrderedGraph")
        .def(py::init([](const std::string& dsl) { return parse_graph_dsl(dsl); }))
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
            std::vector<Edge> e(edges.begin(), edges.end());
            return OrderedGraph(n, std::move(e));
        }))
        .def_property_readonly("n", &OrderedGraph::vertex_count)
        .def_property_readonly("edges", [](const OrderedGraph& g) { return g.edges(); })
        .def("dsl", [](const OrderedGraph& g) { return to_dsl(g); })
        .def("text", [](const OrderedGraph& g) { return to_text(g); })
        .def("mirror", [](const OrderedGraph& g) { return mirror(g); })
        .def("__eq__", [](const OrderedGraph& a, const OrderedGraph& b) { return a == b; })
        .def("__repr__", [](const OrderedGraph& g) { return "OrderedGraph('" + to_dsl(g) + "')"; });

    m.def("graph", [](const std::string& dsl) { return parse_graph_dsl(dsl); });
    m.def("complete_graph", &complete_graph);
    m.def("right_star", &right_star);
    m.def("left_star", &left_star);
    m.def("monotone_path", &monotone_path);
    m.def("monotone_matching", &monotone_matching);

    m.def("find_embeddings", [](const OrderedGraph& host, const OrderedGraph& pattern, std::size_t limit) {
        py::list out;
        for (const auto& e : find_embeddings(host, pattern, limit)) out.append(e.map);
        return out;
    }, py::arg("host"), py::arg("pattern"), py::arg("limit") = static_cast<std::size_t>(-1));
    m.def("contains_copy", &contains_copy);

    m.def("classify_structure", [](const OrderedGraph& g) {
        auto r = classify_structure(g);
        py::dict d;
        d["forest"] = r.is_forest;
        d["pseudoforest"] = r.is_pseudoforest;
        d["proper_pseudoforest"] = r.is_proper_pseudoforest;
        d["partial_matching"] = r.is_partial_matching;
        d["monotone_matching"] = r.is_monotone_matching;
        d["monotone_path"] = r.is_monotone_path;
        d["left_star"] = r.is_left_star;
        d["right_star"] = r.is_right_star;
        d["star_forest"] = r.is_star_forest;
        d["max_left_degree"] = r.max_left_degree;
        d["max_right_degree"] = r.max_right_degree;
        d["connected"] = r.connected;
        d["components"] = r.component_count;
        return d;
    });
    m.def("defining_sequence", [](const OrderedGraph& g) -> py::object {
        auto d = extract_defining_sequence(g);
        if (!d) return py::none();
        return py::cast(d->d);
    });
    m.def("is_loosely_connected", &is_loosely_connected);
    m.def("decompose_loosely", &decompose_loosely);
    m.def("has_bonnet", [](const OrderedGraph& g) { return detect_bonnet(g).has_value(); });
    m.def("tangled_path", [](const OrderedGraph& g, int bound) -> py::object {
        auto t = detect_tangled_path(g, bound);
        py::dict d;
        d["complete"] = t.complete;
        d["path"] = t.path ? py::cast(*t.path) : py::none().cast<py::object>();
        return d;
    }, py::arg("g"), py::arg("bound") = 16);

    m.def("density_m", [](const OrderedGraph& g) {
        auto v = density_m(g);
        return py::make_tuple(v.num, v.den);
    });
    m.def("density_m2", [](const OrderedGraph& g) {
        auto v = density_m2(g);
        return py::make_tuple(v.num, v.den);
    });
    m.def("density_m2_total", [](const OrderedGraph& g) {
        auto v = density_m2_total(g);
        return py::make_tuple(v.value.num, v.value.den, v.by_convention);
    });
    m.def("density_m2_asym", [](const OrderedGraph& h, const OrderedGraph& hp) {
        auto v = density_m2_asym(h, hp);
        return py::make_tuple(v.num, v.den);
    });

    m.def("star_coloring", [](const OrderedGraph& f, Vertex u) {
        return coloring_to_list(star_coloring(f, u));
    });
    m.def("bipartite_coloring", [](const OrderedGraph& f, const std::vector<bool>& in_a) {
        return coloring_to_list(bipartite_coloring(f, in_a));
    });
    m.def("bend_coloring", [](const OrderedGraph& f, Vertex u) {
        return coloring_to_list(bend_coloring(f, u));
    });
    m.def("check_refutation", [](const OrderedGraph& f, const py::list& coloring,
                                 const OrderedGraph& h, const OrderedGraph& hp) {
        auto col = coloring_from_list(f, coloring);
        return !has_monochromatic_copy(col, h, Color::Red) &&
               !has_monochromatic_copy(col, hp, Color::Blue);
    });
    m.def("refute_forest", [](const OrderedGraph& f, const OrderedGraph& h, const OrderedGraph& hp,
                              int which) -> py::object {
        auto r = refute_forest(f, h, hp, which);
        if (!r.ok()) return py::none();
        return coloring_to_list(*r.coloring);
    });
    m.def("refute_pseudoforest", [](const OrderedGraph& f, const OrderedGraph& h,
                                    const OrderedGraph& hp, int which) -> py::object {
        auto r = refute_pseudoforest(f, h, hp, which);
        if (!r.ok()) return py::none();
        return coloring_to_list(*r.coloring);
    });
    m.def("applicable_forest_case", &applicable_forest_case);
    m.def("applicable_pseudoforest_case", &applicable_pseudoforest_case);

    m.def("arrows", [](const OrderedGraph& f, const OrderedGraph& h, const OrderedGraph& hp,
                       std::uint64_t budget) {
        auto cert = arrows(f, h, hp, ArrowOptions{budget});
        py::dict d;
        d["verdict"] = verdict_name(cert.verdict);
        d["nodes"] = cert.stats.nodes;
        d["propagations"] = cert.stats.propagations;
        d["witness"] = cert.witness ? coloring_to_list(*cert.witness) : py::list();
        return d;
    }, py::arg("f"), py::arg("h"), py::arg("hp"), py::arg("budget") = 100'000'000ull);
    m.def("is_minimal_ramsey", [](const OrderedGraph& f, const OrderedGraph& h,
                                  const OrderedGraph& hp, std::uint64_t budget) {
        auto cert = is_minimal_ramsey(f, h, hp, ArrowOptions{budget});
        py::dict d;
        d["arrows"] = verdict_name(cert.base);
        d["minimal"] = cert.is_minimal;
        d["unknown"] = cert.unknown;
        if (cert.failing_edge)
            d["failing_edge"] = py::make_tuple(cert.failing_edge->first, cert.failing_edge->second);
        if (cert.failing_isolated_vertex) d["failing_isolated_vertex"] = *cert.failing_isolated_vertex;
        return d;
    }, py::arg("f"), py::arg("h"), py::arg("hp"), py::arg("budget") = 100'000'000ull);
    m.def("enumerate_minimal", [](const OrderedGraph& h, const OrderedGraph& hp, int max_vertices,
                                  int max_edges, std::uint64_t budget) {
        auto result = enumerate_minimal(h, hp, max_vertices, max_edges, ArrowOptions{budget});
        py::dict d;
        d["complete"] = result.complete;
        d["graphs"] = result.graphs;
        return d;
    }, py::arg("h"), py::arg("hp"), py::arg("max_vertices"), py::arg("max_edges") = kMaxSolverEdges,
       py::arg("budget") = 100'000'000ull);
    m.def("ordered_ramsey_number", [](const OrderedGraph& h, const OrderedGraph& hp, int cap,
                                      std::uint64_t budget) -> py::object {
        auto r = ordered_ramsey_number(h, hp, cap, ArrowOptions{budget});
        py::dict d;
        d["value"] = r.value ? py::cast(*r.value) : py::none().cast<py::object>();
        d["budget_exceeded"] = r.budget_exceeded;
        return d;
    }, py::arg("h"), py::arg("hp"), py::arg("cap") = 7, py::arg("budget") = 100'000'000ull);

    m.def("ramsey_forest_case", [](const OrderedGraph& h, const OrderedGraph& hp) {
        return verdict_dict(ramsey_forest_case(h, hp));
    });
    m.def("ramsey_pseudoforest_connected", [](const OrderedGraph& h, const OrderedGraph& hp) {
        return verdict_dict(ramsey_pseudoforest_connected(h, hp));
    });
    m.def("ramsey_finite_connected", [](const OrderedGraph& h) {
        return verdict_dict(ramsey_finite_connected(h));
    });
    m.def("ramsey_finite_structural_filter", [](const OrderedGraph& h) {
        return verdict_dict(ramsey_finite_structural_filter(h));
    });
    m.def("caterpillar_pair_verdict", [](const OrderedGraph& h, const OrderedGraph& hp) {
        return verdict_dict(caterpillar_pair_verdict(h, hp));
    });
    m.def("monotone_matching_finite", [](const OrderedGraph& h, const OrderedGraph& hp) {
        return verdict_dict(monotone_matching_finite(h, hp));
    });

    m.def("union_intervally", &union_intervally);
    m.def("concatenate", &concatenate);
    m.def("hang", &hang);
    m.def("build_caterpillar", [](const std::vector<int>& d) {
        return build_caterpillar(DefiningSequence{d});
    });
    m.def("build_pseudoforest_ramsey_monp3", &build_pseudoforest_ramsey_monp3);
    m.def("build_forest_ramsey", [](const OrderedGraph& h, const OrderedGraph& hp) -> py::object {
        auto b = build_forest_ramsey(h, hp);
        py::dict d;
        d["status"] = b.status == BuildStatus::Ok          ? "OK"
                      : b.status == BuildStatus::NotCovered ? "NOT_COVERED"
                                                            : "BUDGET_EXCEEDED";
        if (b.status == BuildStatus::Ok) {
            d["graph"] = b.graph;
            d["case"] = b.case_number;
            d["verified"] = b.verified;
        }
        return d;
    });
    m.def("left_determiner", [](int s, const std::vector<int>& d, int i) {
        return left_determiner(DeterminerSpec{s, DefiningSequence{d}, i, 0});
    }, py::arg("s"), py::arg("d"), py::arg("i"));
    m.def("right_determiner", [](int s, const std::vector<int>& d, int i, int j) {
        return right_determiner(DeterminerSpec{s, DefiningSequence{d}, i, j});
    }, py::arg("s"), py::arg("d"), py::arg("i"), py::arg("j"));
    m.def("verify_determiner", [](const OrderedGraph& candidate, int s, const std::vector<int>& d,
                                  int i, int j, const std::string& side) {
        auto check = verify_determiner(candidate, DeterminerSpec{s, DefiningSequence{d}, i, j},
                                       side == "left" ? Side::Left : Side::Right);
        py::dict out;
        out["ok"] = check.ok;
        out["budget_exceeded"] = check.budget_exceeded;
        out["detail"] = check.detail;
        return out;
    });
    m.def("build_gamma_n", [](int s, const std::vector<int>& d, int j, int n, int tail) {
        auto b = build_gamma_n(s, DefiningSequence{d}, j, n, tail);
        py::dict out;
        out["graph"] = b.graph;
        out["dashed"] = b.dashed;
        out["block_vertices"] = b.block_vertices;
        return out;
    });
    m.def("build_f_n", [](int s, const std::vector<int>& d, int j, int n) {
        auto b = build_f_n(s, DefiningSequence{d}, j, n);
        py::dict out;
        out["graph"] = b.graph;
        out["gammas"] = b.gammas;
        out["u_set"] = b.u_set;
        out["w_set"] = b.w_set;
        return out;
    });
    m.def("family_fj", [](int s, const std::vector<int>& d, int level, int max_vertices) {
        auto fam = family_fj(s, DefiningSequence{d}, level, max_vertices);
        py::dict out;
        out["members"] = fam.members;
        out["complete"] = fam.complete;
        return out;
    });
    m.def("family_fst", [](const std::vector<std::vector<std::vector<OrderedGraph>>>& grid) {
        auto fam = family_fst(grid);
        py::dict out;
        out["members"] = fam.members;
        out["complete"] = fam.complete;
        return out;
    });
    m.def("canonical_h_coloring", [](const OrderedGraph& f, int s, const std::vector<int>& d) {
        auto hc = canonical_h_coloring(f, s, DefiningSequence{d});
        py::dict out;
        out["ok"] = hc.ok;
        if (hc.ok) out["coloring"] = coloring_to_list(*hc.coloring);
        if (hc.violating_embedding) out["violating_embedding"] = hc.violating_embedding->map;
        if (hc.violating_member) out["violating_member"] = *hc.violating_member;
        return out;
    });

    m.def("sample_gnp", &sample_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("run_threshold_scan", [](const OrderedGraph& h, int n, const std::vector<double>& p_grid,
                                   int trials, std::uint64_t seed, int threads) {
        ThresholdExperiment exp{h, n, p_grid, trials, seed};
        auto rows = run_threshold_scan(exp, ArrowOptions{}, threads);
        py::list out;
        for (const auto& r : rows) {
            py::dict d;
            d["p"] = r.p;
            d["trials"] = r.trials;
            d["arrows"] = r.arrows;
            d["not_arrows"] = r.not_arrows;
            d["unknown"] = r.unknown;
            out.append(d);
        }
        return out;
    }, py::arg("h"), py::arg("n"), py::arg("p_grid"), py::arg("trials"), py::arg("seed") = 0,
       py::arg("threads") = 1);
}
