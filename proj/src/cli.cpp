#include "oramsey/cli.hpp"

#include "oramsey/classify.hpp"
#include "oramsey/construct.hpp"
#include "oramsey/density.hpp"
#include "oramsey/random.hpp"
#include "oramsey/refute.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace oramsey {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;

OrderedGraph load_graph(const std::string& what) {
    if (what.find('=') != std::string::npos) return parse_graph_dsl(what);
    std::ifstream in(what);
    if (!in) throw std::runtime_error("cannot open graph file '" + what + "'");
    return parse_graph_text(in);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

const char* answer_str(Answer a) {
    switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    default: return "UNKNOWN";
    }
}

const char* verdict_str(ArrowVerdict v) {
    switch (v) {
    case ArrowVerdict::Arrows: return "ARROWS";
    case ArrowVerdict::NotArrows: return "NOT_ARROWS";
    default: return "UNKNOWN";
    }
}

json verdict_json(const Verdict& v) {
    json j;
    j["answer"] = answer_str(v.answer);
    j["tag"] = v.tag;
    j["applicable"] = v.applicable;
    if (v.case_number) j["case"] = v.case_number;
    j["swapped"] = v.swapped;
    j["reason"] = v.reason;
    return j;
}

void print_verdict(std::ostream& out, const std::string& name, const Verdict& v) {
    out << name << " = " << (v.applicable ? answer_str(v.answer) : "NOT_APPLICABLE");
    if (v.case_number) out << " case=" << v.case_number;
    if (v.swapped) out << " swapped=1";
    out << " tag=" << v.tag << " reason=\"" << v.reason << "\"\n";
}

json coloring_json(const EdgeColoring& c) {
    json arr = json::array();
    for (std::size_t i = 0; i < c.color.size(); ++i) {
        const auto& [u, v] = c.host.edges()[i];
        arr.push_back({u, v, c.color[i] == Color::Red ? "R" : "B"});
    }
    return arr;
}

struct Shared {
    bool json_out = false;
    std::uint64_t budget = 100'000'000;
    std::uint64_t seed = 0;
    int max_n = 7;
    int threads = 1;

    ArrowOptions arrow() const { return ArrowOptions{budget}; }
};

int cmd_arrows(const Shared& sh, const std::string& fs, const std::string& hs,
               const std::string& h2s, std::ostream& out) {
    auto f = load_graph(fs);
    auto h = load_graph(hs);
    auto hp = h2s.empty() ? h : load_graph(h2s);
    auto cert = arrows(f, h, hp, sh.arrow());
    if (sh.json_out) {
        json j;
        j["verdict"] = verdict_str(cert.verdict);
        j["nodes"] = cert.stats.nodes;
        j["propagations"] = cert.stats.propagations;
        if (cert.witness) j["witness"] = coloring_json(*cert.witness);
        out << j.dump(2) << "\n";
    } else {
        out << verdict_str(cert.verdict) << "\n";
        out << "nodes " << cert.stats.nodes << "\n";
        out << "propagations " << cert.stats.propagations << "\n";
        if (cert.witness) {
            out << "witness\n" << to_text(*cert.witness);
        }
    }
    return cert.verdict == ArrowVerdict::Unknown ? kExitUnknown : kExitOk;
}

int cmd_minimal(const Shared& sh, const std::string& fs, const std::string& hs,
                const std::string& h2s, std::ostream& out) {
    auto f = load_graph(fs);
    auto h = load_graph(hs);
    auto hp = h2s.empty() ? h : load_graph(h2s);
    auto cert = is_minimal_ramsey(f, h, hp, sh.arrow());
    const char* answer = cert.unknown              ? "UNKNOWN"
                         : cert.is_minimal         ? "MINIMAL"
                         : cert.base != ArrowVerdict::Arrows ? "NOT_RAMSEY"
                                                   : "NOT_MINIMAL";
    if (sh.json_out) {
        json j;
        j["answer"] = answer;
        j["arrows"] = verdict_str(cert.base);
        if (cert.failing_edge)
            j["failing_edge"] = {cert.failing_edge->first, cert.failing_edge->second};
        if (cert.failing_isolated_vertex) j["failing_isolated_vertex"] = *cert.failing_isolated_vertex;
        out << j.dump(2) << "\n";
    } else {
        out << answer << "\n";
        if (cert.failing_edge)
            out << "deletable_edge " << cert.failing_edge->first << " " << cert.failing_edge->second
                << "\n";
        if (cert.failing_isolated_vertex)
            out << "deletable_isolated_vertex " << *cert.failing_isolated_vertex << "\n";
    }
    return cert.unknown ? kExitUnknown : kExitOk;
}

int cmd_enumerate(const Shared& sh, const std::string& hs, const std::string& h2s, int max_edges,
                  std::ostream& out) {
    auto h = load_graph(hs);
    auto hp = h2s.empty() ? h : load_graph(h2s);
    auto result = enumerate_minimal(h, hp, sh.max_n, max_edges, sh.arrow());
    if (sh.json_out) {
        json j;
        j["complete"] = result.complete;
        j["graphs"] = json::array();
        for (const auto& g : result.graphs) j["graphs"].push_back(to_dsl(g));
        out << j.dump(2) << "\n";
    } else {
        for (const auto& g : result.graphs) out << to_dsl(g) << "\n";
        if (!result.complete) out << "# incomplete: budget exhausted\n";
    }
    return result.complete ? kExitOk : kExitUnknown;
}

int cmd_classify(const Shared& sh, const std::string& hs, const std::string& h2s,
                 std::ostream& out) {
    auto h = load_graph(hs);
    json j;
    if (h2s.empty()) {
        auto r = classify_structure(h);
        if (sh.json_out) {
            j["structure"] = {{"forest", r.is_forest},
                              {"pseudoforest", r.is_pseudoforest},
                              {"proper_pseudoforest", r.is_proper_pseudoforest},
                              {"partial_matching", r.is_partial_matching},
                              {"monotone_matching", r.is_monotone_matching},
                              {"monotone_path", r.is_monotone_path},
                              {"left_star", r.is_left_star},
                              {"right_star", r.is_right_star},
                              {"star_forest", r.is_star_forest},
                              {"max_left_degree", r.max_left_degree},
                              {"max_right_degree", r.max_right_degree},
                              {"connected", r.connected},
                              {"components", r.component_count}};
        } else {
            out << "forest = " << r.is_forest << "\n";
            out << "pseudoforest = " << r.is_pseudoforest << "\n";
            out << "proper_pseudoforest = " << r.is_proper_pseudoforest << "\n";
            out << "partial_matching = " << r.is_partial_matching << "\n";
            out << "monotone_matching = " << r.is_monotone_matching << "\n";
            out << "monotone_path = " << r.is_monotone_path << "\n";
            out << "left_star = " << r.is_left_star << "\n";
            out << "right_star = " << r.is_right_star << "\n";
            out << "star_forest = " << r.is_star_forest << "\n";
            out << "max_left_degree = " << r.max_left_degree << "\n";
            out << "max_right_degree = " << r.max_right_degree << "\n";
            out << "connected = " << r.connected << "\n";
            out << "components = " << r.component_count << "\n";
        }
        if (auto d = extract_defining_sequence(h)) {
            std::string seq;
            for (std::size_t k = 0; k < d->d.size(); ++k)
                seq += (k ? "," : "") + std::to_string(d->d[k]);
            if (sh.json_out) j["defining_sequence"] = seq;
            else out << "right_caterpillar_sequence = " << seq << "\n";
        }
        auto filter = ramsey_finite_structural_filter(h);
        if (sh.json_out) j["finite_filter"] = verdict_json(filter);
        else print_verdict(out, "finite_filter", filter);
        if (h.edge_count() >= 1 && is_connected(h)) {
            auto fin = ramsey_finite_connected(h);
            if (sh.json_out) j["finite_connected"] = verdict_json(fin);
            else print_verdict(out, "finite_connected", fin);
        }
    } else {
        auto hp = load_graph(h2s);
        auto forest = ramsey_forest_case(h, hp);
        auto matching = monotone_matching_finite(h, hp);
        auto caterpillar = caterpillar_pair_verdict(h, hp);
        if (sh.json_out) {
            j["forest_ramsey"] = verdict_json(forest);
            j["monotone_matching_finite"] = verdict_json(matching);
            j["star_caterpillar_finite"] = verdict_json(caterpillar);
        } else {
            print_verdict(out, "forest_ramsey", forest);
            print_verdict(out, "monotone_matching_finite", matching);
            print_verdict(out, "star_caterpillar_finite", caterpillar);
        }
        if (h.edge_count() >= 1 && hp.edge_count() >= 1 && is_connected(h) && is_connected(hp)) {
            auto pseudo = ramsey_pseudoforest_connected(h, hp);
            if (sh.json_out) j["pseudoforest_ramsey"] = verdict_json(pseudo);
            else print_verdict(out, "pseudoforest_ramsey", pseudo);
        }
    }
    if (sh.json_out) out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_density(const Shared& sh, const std::string& gs, bool two, const std::string& asym,
                std::ostream& out) {
    auto g = load_graph(gs);
    json j;
    if (!asym.empty()) {
        auto hp = load_graph(asym);
        auto v = density_m2_asym(g, hp);
        if (sh.json_out) {
            j["asymmetric_two_density"] = v.str();
            out << j.dump(2) << "\n";
        } else {
            out << v.str() << "\n";
        }
        return kExitOk;
    }
    if (two) {
        auto v = density_m2_total(g);
        if (sh.json_out) {
            j["two_density"] = v.value.str();
            j["single_edge_convention"] = v.by_convention;
            out << j.dump(2) << "\n";
        } else {
            out << v.value.str() << "\n";
            if (v.by_convention) out << "note single-edge-convention\n";
        }
        return kExitOk;
    }
    auto v = density_m(g);
    if (sh.json_out) {
        j["density"] = v.str();
        out << j.dump(2) << "\n";
    } else {
        out << v.str() << "\n";
    }
    return kExitOk;
}

int cmd_refute(const Shared& sh, const std::string& fs, const std::string& hs,
               const std::string& h2s, int which_case, std::ostream& out) {
    auto f = load_graph(fs);
    auto h = load_graph(hs);
    auto hp = h2s.empty() ? h : load_graph(h2s);
    const bool forest = is_forest(f);
    int chosen = which_case;
    if (chosen == 0)
        chosen = forest ? applicable_forest_case(h, hp) : applicable_pseudoforest_case(h, hp);
    if (chosen == 0) {
        out << "NOT_APPLICABLE\n";
        return kExitOk;
    }
    auto r = forest ? refute_forest(f, h, hp, chosen) : refute_pseudoforest(f, h, hp, chosen);
    if (!r.ok()) {
        out << "NOT_APPLICABLE\n";
        return kExitOk;
    }
    if (sh.json_out) {
        json j;
        j["case"] = chosen;
        j["family"] = forest ? "forest" : "pseudoforest";
        j["coloring"] = coloring_json(*r.coloring);
        out << j.dump(2) << "\n";
    } else {
        out << "# refuter case " << chosen << " (" << (forest ? "forest" : "pseudoforest") << ")\n";
        out << to_text(*r.coloring);
    }
    return kExitOk;
}

void print_graph(std::ostream& out, const OrderedGraph& g, const std::string& header,
                 bool as_json) {
    if (as_json) {
        json j;
        j["construction"] = header;
        j["graph"] = to_dsl(g);
        out << j.dump(2) << "\n";
    } else {
        out << "# construction: " << header << "\n" << to_text(g);
    }
}

DefiningSequence seq_of(const std::string& s) {
    DefiningSequence d;
    d.d = parse_int_list(s);
    if (d.d.empty()) throw std::runtime_error("empty segment sequence");
    return d;
}

int cmd_random_scan(const Shared& sh, const std::string& hs, int n, const std::string& ps,
                    int trials, std::ostream& out) {
    ThresholdExperiment exp;
    exp.h = load_graph(hs);
    exp.n = n;
    exp.p_grid = parse_double_list(ps);
    exp.trials = trials;
    exp.seed = sh.seed;
    auto rows = run_threshold_scan(exp, sh.arrow(), sh.threads);
    out << to_csv(rows);
    for (const auto& r : rows)
        if (r.unknown > 0) return kExitUnknown;
    return kExitOk;
}

int cmd_verify_coloring(const std::string& fs, const std::string& hs, const std::string& h2s,
                        const std::string& coloring_file, std::ostream& out) {
    auto f = load_graph(fs);
    auto h = load_graph(hs);
    auto hp = h2s.empty() ? h : load_graph(h2s);
    std::ifstream in(coloring_file);
    if (!in) throw std::runtime_error("cannot open coloring file '" + coloring_file + "'");
    auto col = parse_coloring_text(f, in);
    auto red = find_monochromatic_copy(col, h, Color::Red);
    auto blue = find_monochromatic_copy(col, hp, Color::Blue);
    if (!red && !blue) {
        out << "VALID\n";
        return kExitOk;
    }
    out << "INVALID\n";
    auto dump = [&out](const char* label, const Embedding& e) {
        out << label;
        for (Vertex v : e.map) out << " " << v;
        out << "\n";
    };
    if (red) dump("red_copy", *red);
    if (blue) dump("blue_copy", *blue);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ordered Ramsey arrowing toolkit"};
    app.require_subcommand(1);
    Shared sh;
    app.add_flag("--json", sh.json_out, "structured output");
    app.add_option("--budget", sh.budget, "search node budget");
    app.add_option("--seed", sh.seed, "random seed");
    app.add_option("--max-n", sh.max_n, "vertex cap for sweeps");
    app.add_option("--threads", sh.threads, "worker threads for the scan engine");

    std::string f_arg, h_arg, h2_arg, g_arg, coloring_arg, p_arg, d_arg;
    int case_arg = 0, n_arg = 0, trials_arg = 200, max_edges_arg = kMaxSolverEdges;
    int s_arg = 2, i_arg = -1, j_arg = 0, level_arg = 1, tail_arg = -1, nrep_arg = 1;

    auto* arrows_cmd = app.add_subcommand("arrows", "decide whether F arrows (H, H2)");
    arrows_cmd->add_option("-F", f_arg, "host graph")->required();
    arrows_cmd->add_option("-H", h_arg, "red pattern")->required();
    arrows_cmd->add_option("--H2,-2", h2_arg, "blue pattern (defaults to H)");

    auto* minimal_cmd = app.add_subcommand("minimal", "check minimality of a Ramsey host");
    minimal_cmd->add_option("-F", f_arg, "host graph")->required();
    minimal_cmd->add_option("-H", h_arg, "red pattern")->required();
    minimal_cmd->add_option("--H2,-2", h2_arg, "blue pattern (defaults to H)");

    auto* enum_cmd = app.add_subcommand("enumerate", "list minimal Ramsey hosts within bounds");
    enum_cmd->add_option("-H", h_arg, "red pattern")->required();
    enum_cmd->add_option("--H2,-2", h2_arg, "blue pattern (defaults to H)");
    enum_cmd->add_option("--max-edges", max_edges_arg, "edge cap");

    auto* classify_cmd = app.add_subcommand("classify", "structure and finiteness classifiers");
    classify_cmd->add_option("-H", h_arg, "graph")->required();
    classify_cmd->add_option("--H2,-2", h2_arg, "second graph for pair classifiers");

    auto* density_cmd = app.add_subcommand("density", "exact densities");
    density_cmd->add_option("-G", g_arg, "graph")->required();
    bool two_flag = false;
    density_cmd->add_flag("--two", two_flag, "2-density");
    density_cmd->add_option("--asym", h2_arg, "asymmetric 2-density against this second graph");

    auto* refute_cmd = app.add_subcommand("refute", "emit a refuting coloring for a host");
    refute_cmd->add_option("-F", f_arg, "host (forest or pseudoforest)")->required();
    refute_cmd->add_option("-H", h_arg, "red pattern")->required();
    refute_cmd->add_option("--H2,-2", h2_arg, "blue pattern (defaults to H)");
    refute_cmd->add_option("--case", case_arg, "refuter case 1..4 (default: first applicable)");

    auto* scan_cmd = app.add_subcommand("random-scan", "arrow frequency over a probability grid");
    scan_cmd->add_option("-H", h_arg, "pattern")->required();
    scan_cmd->add_option("--n", n_arg, "sample order")->required();
    scan_cmd->add_option("--p", p_arg, "comma-separated probability grid")->required();
    scan_cmd->add_option("--trials", trials_arg, "trials per grid point");

    auto* verify_cmd = app.add_subcommand("verify", "check colorings and determiners");
    verify_cmd->add_option("-F", f_arg, "host graph");
    verify_cmd->add_option("-H", h_arg, "red pattern");
    verify_cmd->add_option("--H2,-2", h2_arg, "blue pattern (defaults to H)");
    verify_cmd->add_option("--coloring", coloring_arg, "coloring file to verify");
    std::string det_side;
    verify_cmd->add_option("--determiner", det_side, "verify a determiner: left or right");
    verify_cmd->add_option("-G", g_arg, "candidate graph (defaults to the constructed one)");
    verify_cmd->add_option("-s", s_arg, "star edge count");
    verify_cmd->add_option("-d", d_arg, "segment sequence, comma separated");
    verify_cmd->add_option("-i", i_arg, "segment count (defaults to the sequence length)");
    verify_cmd->add_option("-j", j_arg, "right determiner start index");

    auto* construct_cmd = app.add_subcommand("construct", "emit the library constructions");
    construct_cmd->require_subcommand(1);
    auto* cat_cmd = construct_cmd->add_subcommand("caterpillar", "right caterpillar from segments");
    cat_cmd->add_option("-d", d_arg, "segment sequence, rightmost first")->required();
    auto* chord_cmd = construct_cmd->add_subcommand("p5-chord", "five-vertex path plus chord");
    (void)chord_cmd;
    auto* forest_cmd = construct_cmd->add_subcommand("forest", "forest host for a pair");
    forest_cmd->add_option("-H", h_arg, "red pattern")->required();
    forest_cmd->add_option("--H2,-2", h2_arg, "blue pattern (defaults to H)");
    auto* ldet_cmd = construct_cmd->add_subcommand("left-determiner", "left determiner");
    ldet_cmd->add_option("-s", s_arg, "star edge count")->required();
    ldet_cmd->add_option("-d", d_arg, "segment sequence")->required();
    ldet_cmd->add_option("-i", i_arg, "segment count (defaults to the sequence length)");
    auto* rdet_cmd = construct_cmd->add_subcommand("right-determiner", "right determiner");
    rdet_cmd->add_option("-s", s_arg, "star edge count")->required();
    rdet_cmd->add_option("-d", d_arg, "segment sequence")->required();
    rdet_cmd->add_option("-i", i_arg, "segment count (defaults to the sequence length)");
    rdet_cmd->add_option("-j", j_arg, "start index, 2..i+1")->required();
    auto* gamma_cmd = construct_cmd->add_subcommand("gamma", "chain host with long edges");
    gamma_cmd->add_option("-s", s_arg, "star edge count")->required();
    gamma_cmd->add_option("-d", d_arg, "segment sequence")->required();
    gamma_cmd->add_option("-j", j_arg, "drop position")->required();
    gamma_cmd->add_option("-n", nrep_arg, "repeated blocks");
    gamma_cmd->add_option("--tail", tail_arg, "tail determiner index (defaults to j)");
    auto* fn_cmd = construct_cmd->add_subcommand("fn", "chain host with a bipartite back edge set");
    fn_cmd->add_option("-s", s_arg, "star edge count")->required();
    fn_cmd->add_option("-d", d_arg, "segment sequence")->required();
    fn_cmd->add_option("-j", j_arg, "drop position, >= 3")->required();
    fn_cmd->add_option("-n", nrep_arg, "repeated blocks");
    auto* fj_cmd = construct_cmd->add_subcommand("family-fj", "level family members");
    fj_cmd->add_option("-s", s_arg, "star edge count")->required();
    fj_cmd->add_option("-d", d_arg, "segment sequence")->required();
    fj_cmd->add_option("--level", level_arg, "level")->required();
    auto* fst_cmd = construct_cmd->add_subcommand("family-fst", "grid family members for a pair");
    fst_cmd->add_option("-H", h_arg, "left pattern (interval union of blocks)")->required();
    fst_cmd->add_option("--H2,-2", h2_arg, "right pattern (defaults to H)");
    auto* hcol_cmd = construct_cmd->add_subcommand("h-coloring", "level-based refuting coloring");
    hcol_cmd->add_option("-G", g_arg, "host graph")->required();
    hcol_cmd->add_option("-s", s_arg, "star edge count")->required();
    hcol_cmd->add_option("-d", d_arg, "segment sequence")->required();

    // global flags may follow the subcommand name
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* inner : sub->get_subcommands({})) inner->fallthrough();
    }

    // accept the documented "-H2" spelling for the second pattern
    std::vector<std::string> normalized(args);
    for (auto& a : normalized)
        if (a == "-H2") a = "--H2";
    std::vector<std::string> argv_rev(normalized.rbegin(), normalized.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (arrows_cmd->parsed()) return cmd_arrows(sh, f_arg, h_arg, h2_arg, out);
        if (minimal_cmd->parsed()) return cmd_minimal(sh, f_arg, h_arg, h2_arg, out);
        if (enum_cmd->parsed()) return cmd_enumerate(sh, h_arg, h2_arg, max_edges_arg, out);
        if (classify_cmd->parsed()) return cmd_classify(sh, h_arg, h2_arg, out);
        if (density_cmd->parsed()) return cmd_density(sh, g_arg, two_flag, h2_arg, out);
        if (refute_cmd->parsed()) return cmd_refute(sh, f_arg, h_arg, h2_arg, case_arg, out);
        if (scan_cmd->parsed()) return cmd_random_scan(sh, h_arg, n_arg, p_arg, trials_arg, out);
        if (verify_cmd->parsed()) {
            if (!det_side.empty()) {
                DeterminerSpec spec;
                spec.star_edges = s_arg;
                spec.d = seq_of(d_arg);
                spec.i = i_arg < 0 ? static_cast<int>(spec.d.d.size()) : i_arg;
                spec.j = j_arg;
                Side side = det_side == "left" ? Side::Left : Side::Right;
                auto candidate = !g_arg.empty() ? load_graph(g_arg)
                                : side == Side::Left ? left_determiner(spec)
                                                     : right_determiner(spec);
                auto check = verify_determiner(candidate, spec, side);
                if (check.budget_exceeded) {
                    out << "UNKNOWN " << check.detail << "\n";
                    return kExitUnknown;
                }
                out << (check.ok ? "VALID" : "INVALID");
                if (!check.detail.empty()) out << " " << check.detail;
                out << "\n";
                return kExitOk;
            }
            if (coloring_arg.empty() || f_arg.empty() || h_arg.empty())
                throw std::runtime_error("verify needs --coloring with -F and -H, or --determiner");
            return cmd_verify_coloring(f_arg, h_arg, h2_arg, coloring_arg, out);
        }
        if (construct_cmd->parsed()) {
            if (cat_cmd->parsed()) {
                auto d = seq_of(d_arg);
                print_graph(out, build_caterpillar(d), "caterpillar d=" + d_arg, sh.json_out);
                return kExitOk;
            }
            if (chord_cmd->parsed()) {
                print_graph(out, build_pseudoforest_ramsey_monp3(), "monotone-p5-plus-chord",
                            sh.json_out);
                return kExitOk;
            }
            if (forest_cmd->parsed()) {
                auto h = load_graph(h_arg);
                auto hp = h2_arg.empty() ? h : load_graph(h2_arg);
                BuildOptions opts;
                opts.arrow = sh.arrow();
                auto built = build_forest_ramsey(h, hp, opts);
                if (built.status == BuildStatus::NotCovered) {
                    out << "NOT_COVERED\n";
                    return kExitOk;
                }
                if (built.status == BuildStatus::BudgetExceeded) {
                    out << "UNKNOWN budget exhausted\n";
                    return kExitUnknown;
                }
                std::string hdr = "forest-host case=" + std::to_string(built.case_number) +
                                  (built.verified ? " verified" : " unverified");
                print_graph(out, built.graph, hdr, sh.json_out);
                return kExitOk;
            }
            DeterminerSpec spec;
            spec.star_edges = s_arg;
            if (!d_arg.empty()) spec.d = seq_of(d_arg);
            spec.i = i_arg < 0 ? static_cast<int>(spec.d.d.size()) : i_arg;
            spec.j = j_arg;
            if (ldet_cmd->parsed()) {
                print_graph(out, left_determiner(spec),
                            "left-determiner s=" + std::to_string(s_arg) + " d=" + d_arg +
                                " i=" + std::to_string(spec.i),
                            sh.json_out);
                return kExitOk;
            }
            if (rdet_cmd->parsed()) {
                print_graph(out, right_determiner(spec),
                            "right-determiner s=" + std::to_string(s_arg) + " d=" + d_arg +
                                " i=" + std::to_string(spec.i) + " j=" + std::to_string(spec.j),
                            sh.json_out);
                return kExitOk;
            }
            if (gamma_cmd->parsed()) {
                int tail = tail_arg < 0 ? j_arg : tail_arg;
                auto built = build_gamma_n(s_arg, spec.d, j_arg, nrep_arg, tail);
                std::string hdr = "gamma-chain s=" + std::to_string(s_arg) + " d=" + d_arg +
                                  " j=" + std::to_string(j_arg) + " n=" + std::to_string(nrep_arg) +
                                  " tail=" + std::to_string(tail);
                print_graph(out, built.graph, hdr, sh.json_out);
                if (!sh.json_out)
                    for (const auto& [u, v] : built.dashed)
                        out << "# dashed " << u << " " << v << "\n";
                return kExitOk;
            }
            if (fn_cmd->parsed()) {
                auto built = build_f_n(s_arg, spec.d, j_arg, nrep_arg);
                std::string hdr = "fn-chain s=" + std::to_string(s_arg) + " d=" + d_arg +
                                  " j=" + std::to_string(j_arg) + " n=" + std::to_string(nrep_arg);
                print_graph(out, built.graph, hdr, sh.json_out);
                return kExitOk;
            }
            if (fj_cmd->parsed()) {
                auto fam = family_fj(s_arg, spec.d, level_arg, sh.max_n);
                if (sh.json_out) {
                    json j;
                    j["complete"] = fam.complete;
                    j["members"] = json::array();
                    for (const auto& g : fam.members) j["members"].push_back(to_dsl(g));
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& g : fam.members) out << to_dsl(g) << "\n";
                    if (!fam.complete) out << "# incomplete: placement budget exhausted\n";
                }
                return fam.complete ? kExitOk : kExitUnknown;
            }
            if (fst_cmd->parsed()) {
                auto h = load_graph(h_arg);
                auto hp = h2_arg.empty() ? h : load_graph(h2_arg);
                auto hblocks = decompose_loosely(h);
                auto hpblocks = decompose_loosely(hp);
                std::vector<std::vector<std::vector<OrderedGraph>>> grid(hblocks.size());
                bool complete = true;
                for (std::size_t r = 0; r < hblocks.size(); ++r)
                    for (std::size_t c = 0; c < hpblocks.size(); ++c) {
                        auto cell = enumerate_minimal(hblocks[r], hpblocks[c], sh.max_n,
                                                      kMaxSolverEdges, sh.arrow());
                        complete = complete && cell.complete;
                        grid[r].push_back(std::move(cell.graphs));
                    }
                auto fam = family_fst(grid);
                complete = complete && fam.complete;
                if (sh.json_out) {
                    json j;
                    j["complete"] = complete;
                    j["members"] = json::array();
                    for (const auto& g : fam.members) j["members"].push_back(to_dsl(g));
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& g : fam.members) out << to_dsl(g) << "\n";
                    if (!complete) out << "# incomplete\n";
                }
                return complete ? kExitOk : kExitUnknown;
            }
            if (hcol_cmd->parsed()) {
                auto g = load_graph(g_arg);
                auto result = canonical_h_coloring(g, s_arg, seq_of(d_arg));
                if (!result.ok) {
                    out << "HYPOTHESIS_VIOLATED\n";
                    if (result.violating_embedding) {
                        out << "member_at";
                        for (Vertex v : result.violating_embedding->map) out << " " << v;
                        out << "\n";
                    }
                    return kExitUsage;
                }
                if (sh.json_out) {
                    json j;
                    j["coloring"] = coloring_json(*result.coloring);
                    out << j.dump(2) << "\n";
                } else {
                    out << to_text(*result.coloring);
                }
                return kExitOk;
            }
        }
        err << "error: no command\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: line " << e.line << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace oramsey
