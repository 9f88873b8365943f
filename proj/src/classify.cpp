#include "oramsey/classify.hpp"

#include "oramsey/refute.hpp"

#include <algorithm>

namespace oramsey {

namespace {

bool all_components(const OrderedGraph& g, bool (*pred)(const StructureReport&)) {
    for (const auto& comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto report = classify_structure(sub);
        if (!pred(report)) return false;
    }
    return true;
}

bool partial_matching(const OrderedGraph& g) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) >= 2) return false;
    return true;
}

bool max_left_degree_le1(const OrderedGraph& g) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (g.left_degree(v) >= 2) return false;
    return true;
}

bool max_right_degree_le1(const OrderedGraph& g) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (g.right_degree(v) >= 2) return false;
    return true;
}

bool nondecreasing(const std::vector<int>& d) { return std::is_sorted(d.begin(), d.end()); }

bool almost_increasing(const std::vector<int>& d) {
    if (d.size() <= 2) return true;
    if (d[0] > d[2]) return false;
    return std::is_sorted(d.begin() + 1, d.end());
}

} // namespace

OrderedGraph strip_isolated(const OrderedGraph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (!g.is_isolated(v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

bool all_components_right_stars(const OrderedGraph& g) {
    return all_components(g, [](const StructureReport& r) { return r.is_right_star; });
}

bool all_components_left_stars(const OrderedGraph& g) {
    return all_components(g, [](const StructureReport& r) { return r.is_left_star; });
}

bool all_components_left_or_right_stars(const OrderedGraph& g) {
    return all_components(g,
                          [](const StructureReport& r) { return r.is_left_star || r.is_right_star; });
}

bool all_components_monotone_paths(const OrderedGraph& g) {
    return all_components(g, [](const StructureReport& r) { return r.is_monotone_path; });
}

Verdict ramsey_forest_case(const OrderedGraph& h, const OrderedGraph& hp) {
    if (h.edge_count() < 1 || hp.edge_count() < 1)
        throw std::invalid_argument("ramsey_forest_case: both sides need an edge");
    Verdict v;
    v.tag = "forest-ramsey";
    if (!is_forest(h) || !is_forest(hp)) {
        v.answer = Answer::No;
        v.reason = "a side contains a cycle, and monochromatic subgraphs of forests are forests";
        return v;
    }
    auto a = strip_isolated(h);
    auto b = strip_isolated(hp);

    if (partial_matching(a) || partial_matching(b)) {
        v.answer = Answer::Yes;
        v.case_number = 1;
        v.swapped = !partial_matching(a);
        v.reason = "one side is a partial matching";
        return v;
    }
    if (all_components_right_stars(a) && max_left_degree_le1(b)) {
        v.answer = Answer::Yes;
        v.case_number = 2;
        v.reason = "right-star forest versus unique left neighbors";
        return v;
    }
    if (all_components_right_stars(b) && max_left_degree_le1(a)) {
        v.answer = Answer::Yes;
        v.case_number = 2;
        v.swapped = true;
        v.reason = "right-star forest versus unique left neighbors";
        return v;
    }
    if (all_components_left_stars(a) && max_right_degree_le1(b)) {
        v.answer = Answer::Yes;
        v.case_number = 3;
        v.reason = "left-star forest versus unique right neighbors";
        return v;
    }
    if (all_components_left_stars(b) && max_right_degree_le1(a)) {
        v.answer = Answer::Yes;
        v.case_number = 3;
        v.swapped = true;
        v.reason = "left-star forest versus unique right neighbors";
        return v;
    }
    if (all_components_left_or_right_stars(a) && all_components_monotone_paths(b)) {
        v.answer = Answer::Yes;
        v.case_number = 4;
        v.reason = "star forest versus monotone paths";
        return v;
    }
    if (all_components_left_or_right_stars(b) && all_components_monotone_paths(a)) {
        v.answer = Answer::Yes;
        v.case_number = 4;
        v.swapped = true;
        v.reason = "star forest versus monotone paths";
        return v;
    }
    v.answer = Answer::No;
    v.case_number = applicable_forest_case(h, hp);
    v.reason = "blocked by refuter case " + std::to_string(v.case_number);
    return v;
}

Verdict ramsey_pseudoforest_connected(const OrderedGraph& h, const OrderedGraph& hp) {
    if (h.edge_count() < 1 || hp.edge_count() < 1)
        throw std::invalid_argument("ramsey_pseudoforest_connected: both sides need an edge");
    if (!is_connected(h) || !is_connected(hp))
        throw std::invalid_argument("ramsey_pseudoforest_connected: inputs must be connected");
    Verdict v;
    v.tag = "pseudoforest-ramsey";
    auto k2 = complete_graph(2);
    auto proper_pseudo = [](const OrderedGraph& g) {
        return classify_structure(g).is_proper_pseudoforest;
    };
    if (h == k2 && proper_pseudo(hp)) {
        v.answer = Answer::Yes;
        v.case_number = 1;
        v.reason = "single edge against a connected proper pseudoforest";
        return v;
    }
    if (hp == k2 && proper_pseudo(h)) {
        v.answer = Answer::Yes;
        v.case_number = 1;
        v.swapped = true;
        v.reason = "single edge against a connected proper pseudoforest";
        return v;
    }
    if (h == monotone_path(3) && hp == monotone_path(3)) {
        v.answer = Answer::Yes;
        v.case_number = 2;
        v.reason = "both sides form a monotone P3";
        return v;
    }
    v.answer = Answer::No;
    v.case_number = applicable_pseudoforest_case(h, hp);
    v.reason = v.case_number ? "blocked by refuter case " + std::to_string(v.case_number)
                             : "a forest host already exists for this pair";
    return v;
}

Verdict ramsey_finite_connected(const OrderedGraph& h) {
    if (h.edge_count() < 1)
        throw std::invalid_argument("ramsey_finite_connected: need at least one edge");
    if (!is_connected(h))
        throw std::invalid_argument("ramsey_finite_connected: input must be connected");
    Verdict v;
    v.tag = "connected-finite";
    auto r = classify_structure(h);
    if (r.is_left_star || r.is_right_star) {
        v.answer = Answer::Yes;
        v.reason = r.is_right_star ? "right star" : "left star";
    } else {
        v.answer = Answer::No;
        v.reason = "connected and neither a left nor a right star";
    }
    return v;
}

Verdict ramsey_finite_structural_filter(const OrderedGraph& h) {
    Verdict v;
    v.tag = "finite-filter";
    if (!is_forest(h)) {
        v.answer = Answer::No;
        v.reason = "contains a cycle";
        return v;
    }
    bool saw_left = false, saw_right = false;
    for (const auto& comp : components(h)) {
        auto sub = induced_subgraph(h, comp);
        if (sub.edge_count() == 0) continue; // isolated vertices are outside the filter
        auto r = classify_structure(sub);
        if (r.is_monotone_path && sub.vertex_count() == 3) continue; // monotone P3 exempt
        bool right = r.is_right_star, left = r.is_left_star;
        if (!right && !left) {
            v.answer = Answer::No;
            v.reason = "component is neither a star nor a monotone P3";
            return v;
        }
        if (right && !left) saw_right = true;
        if (left && !right) saw_left = true;
    }
    if (saw_left && saw_right) {
        v.answer = Answer::No;
        v.reason = "star components of both orientations";
        return v;
    }
    v.answer = Answer::Unknown;
    v.reason = "necessary condition holds; sufficiency is open for disconnected graphs";
    return v;
}

Verdict caterpillar_pair_verdict(const OrderedGraph& h, const OrderedGraph& hp) {
    Verdict v;
    v.tag = "star-caterpillar";
    auto rs = classify_structure(h);
    std::optional<DefiningSequence> d;
    if (rs.is_right_star) d = extract_defining_sequence(hp);
    if (!d && rs.is_left_star) {
        if (auto md = extract_defining_sequence(mirror(hp))) d = md;
    }
    if (!d) {
        v.applicable = false;
        v.reason = "pair is not a star with a caterpillar of matching orientation";
        return v;
    }
    const int s = h.edge_count();
    const auto& seq = d->d;
    if (s == 1) {
        v.answer = Answer::Yes;
        v.reason = "single-edge star: the caterpillar itself is the unique minimal host";
        return v;
    }
    if (static_cast<int>(seq.size()) <= 2 || nondecreasing(seq)) {
        v.answer = Answer::Yes;
        v.reason = "at most two segments or nondecreasing segment sizes";
        return v;
    }
    if (!almost_increasing(seq)) {
        v.answer = Answer::No;
        v.reason = "segment sequence is not almost increasing";
        return v;
    }
    v.answer = Answer::Unknown;
    v.reason = "almost increasing but not nondecreasing: open case";
    return v;
}

Verdict monotone_matching_finite(const OrderedGraph& h, const OrderedGraph& hp) {
    Verdict v;
    v.tag = "monotone-matching";
    auto k2 = complete_graph(2);
    if (h == k2 || hp == k2) {
        v.answer = Answer::Yes;
        v.swapped = h == k2 && hp != k2;
        v.reason = "one side is a single edge";
        return v;
    }
    auto mono_matching = [](const OrderedGraph& g) {
        return classify_structure(g).is_monotone_matching;
    };
    if (mono_matching(hp) && h.isolated_vertices().empty()) {
        v.answer = Answer::Yes;
        v.reason = "monotone matching against a graph without isolated vertices";
        return v;
    }
    if (mono_matching(h) && hp.isolated_vertices().empty()) {
        v.answer = Answer::Yes;
        v.swapped = true;
        v.reason = "monotone matching against a graph without isolated vertices";
        return v;
    }
    v.answer = Answer::Unknown;
    v.reason = "outside the monotone matching criterion";
    return v;
}

} // namespace oramsey
