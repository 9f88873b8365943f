#include "oramsey/structure.hpp"

#include <algorithm>
#include <numeric>

namespace oramsey {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

} // namespace

std::vector<std::vector<Vertex>> components(const OrderedGraph& g) {
    Dsu dsu(g.vertex_count());
    for (const auto& [u, v] : g.edges()) dsu.unite(u, v);
    std::vector<std::vector<Vertex>> out;
    std::vector<int> id(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        int root = dsu.find(v);
        if (id[static_cast<std::size_t>(root)] < 0) {
            id[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(id[static_cast<std::size_t>(root)])].push_back(v);
    }
    return out;
}

bool is_connected(const OrderedGraph& g) { return components(g).size() <= 1; }

bool is_forest(const OrderedGraph& g) {
    Dsu dsu(g.vertex_count());
    for (const auto& [u, v] : g.edges())
        if (!dsu.unite(u, v)) return false;
    return true;
}

bool is_tree(const OrderedGraph& g) {
    return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

StructureReport classify_structure(const OrderedGraph& g) {
    StructureReport r;
    const int n = g.vertex_count();

    auto comps = components(g);
    r.component_count = static_cast<int>(comps.size());
    r.connected = r.component_count <= 1;
    r.component.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int c = 0; c < r.component_count; ++c)
        for (Vertex v : comps[static_cast<std::size_t>(c)]) r.component[static_cast<std::size_t>(v)] = c;

    // per-component edge counts decide forest/pseudoforest
    std::vector<int> comp_edges(comps.size(), 0);
    for (const auto& [u, v] : g.edges()) comp_edges[static_cast<std::size_t>(r.component[static_cast<std::size_t>(u)])]++;
    r.is_forest = true;
    r.is_pseudoforest = true;
    bool has_cycle = false;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const int cv = static_cast<int>(comps[c].size());
        if (comp_edges[c] > cv - 1) r.is_forest = false;
        if (comp_edges[c] > cv) r.is_pseudoforest = false;
        if (comp_edges[c] >= cv) has_cycle = true;
    }
    r.is_proper_pseudoforest = r.is_pseudoforest && has_cycle;

    int max_deg = 0;
    for (Vertex v = 1; v <= n; ++v) {
        r.max_left_degree = std::max(r.max_left_degree, g.left_degree(v));
        r.max_right_degree = std::max(r.max_right_degree, g.right_degree(v));
        max_deg = std::max(max_deg, g.degree(v));
    }
    r.is_partial_matching = max_deg <= 1;

    r.is_monotone_matching = n > 0 && n % 2 == 0 && g.edge_count() == n / 2;
    if (r.is_monotone_matching)
        for (int i = 0; i < n / 2; ++i)
            if (!g.has_edge(2 * i + 1, 2 * i + 2)) { r.is_monotone_matching = false; break; }

    r.is_monotone_path = n >= 2 && g == monotone_path(n);
    r.is_right_star = n >= 2 && g == right_star(n - 1);
    r.is_left_star = n >= 2 && g == left_star(n - 1);

    r.is_star_forest = true;
    for (const auto& comp : comps) {
        int edges_inside = comp_edges[static_cast<std::size_t>(r.component[static_cast<std::size_t>(comp.front())])];
        if (edges_inside == 0) continue;
        // a star: some vertex covers every edge of the component
        bool star = false;
        for (Vertex c : comp)
            if (g.degree(c) == edges_inside) { star = true; break; }
        if (!star || edges_inside != static_cast<int>(comp.size()) - 1) { r.is_star_forest = false; break; }
    }
    return r;
}

std::optional<DefiningSequence> extract_defining_sequence(const OrderedGraph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() == 0) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    // walk segments left to right: each center's rightmost leaf is the next center
    std::vector<int> left_to_right;
    Vertex center = 1;
    while (true) {
        const auto& right = g.neighbors_right(center);
        if (right.empty()) return std::nullopt;
        const Vertex seg_end = right.back();
        // interior vertices of the segment hang off the center only
        for (Vertex v = center + 1; v <= seg_end; ++v) {
            if (g.left_degree(v) != 1 || g.neighbors_left(v).front() != center) return std::nullopt;
            if (v < seg_end && g.right_degree(v) != 0) return std::nullopt;
        }
        if (static_cast<int>(right.size()) != seg_end - center) return std::nullopt; // all of (center, seg_end] adjacent
        left_to_right.push_back(static_cast<int>(right.size()));
        if (seg_end == n) break;
        center = seg_end;
    }
    DefiningSequence d;
    d.d.assign(left_to_right.rbegin(), left_to_right.rend());
    return d;
}

bool is_right_caterpillar(const OrderedGraph& g) { return extract_defining_sequence(g).has_value(); }
bool is_left_caterpillar(const OrderedGraph& g) { return extract_defining_sequence(mirror(g)).has_value(); }

bool is_loosely_connected(const OrderedGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) return false;
    std::vector<int> span(static_cast<std::size_t>(n), 0); // span[p]: an edge crosses the cut p|p+1
    for (const auto& [u, v] : g.edges())
        for (Vertex p = u; p < v; ++p) span[static_cast<std::size_t>(p)] = 1;
    for (Vertex p = 1; p < n; ++p)
        if (!span[static_cast<std::size_t>(p)]) return false;
    return true;
}

std::vector<OrderedGraph> decompose_loosely(const OrderedGraph& g) {
    if (!g.isolated_vertices().empty())
        throw std::invalid_argument("decompose_loosely: isolated vertices have no unique block decomposition");
    std::vector<OrderedGraph> blocks;
    if (g.vertex_count() == 0) return blocks;
    const int n = g.vertex_count();
    std::vector<bool> spanned(static_cast<std::size_t>(n), false);
    for (const auto& [u, v] : g.edges())
        for (Vertex p = u; p < v; ++p) spanned[static_cast<std::size_t>(p)] = true;
    Vertex start = 1;
    for (Vertex p = 1; p <= n; ++p) {
        if (p == n || !spanned[static_cast<std::size_t>(p)]) {
            std::vector<Vertex> keep;
            for (Vertex v = start; v <= p; ++v) keep.push_back(v);
            blocks.push_back(induced_subgraph(g, keep));
            start = p + 1;
        }
    }
    return blocks;
}

namespace {

// pattern: u1 < u2 <= u3 < u4 <= u5 on four or five vertices, edges u1u2, u1u5, u3u4
std::optional<std::array<Vertex, 5>> find_bonnet_pattern1(const OrderedGraph& g) {
    for (Vertex u1 = 1; u1 <= g.vertex_count(); ++u1)
        for (Vertex u2 : g.neighbors_right(u1))
            for (Vertex u5 : g.neighbors_right(u1)) {
                if (u5 <= u2) continue;
                for (Vertex u3 = u2; u3 < u5; ++u3)
                    for (Vertex u4 : g.neighbors_right(u3)) {
                        if (u4 > u5) break;
                        if (u2 == u3 && u4 == u5) continue; // would collapse to three vertices
                        return std::array<Vertex, 5>{u1, u2, u3, u4, u5};
                    }
            }
    return std::nullopt;
}

} // namespace

std::optional<BonnetWitness> detect_bonnet(const OrderedGraph& g) {
    if (auto w = find_bonnet_pattern1(g)) {
        auto [u1, u2, u3, u4, u5] = *w;
        return BonnetWitness{{u1, u2, u3, u4, u5}, 1, {Edge{u1, u2}, Edge{u1, u5}, Edge{u3, u4}}};
    }
    // pattern 2 (u1 <= u2 < u3 <= u4 < u5, edges u1u5, u4u5, u2u3) is the mirror of pattern 1
    if (auto w = find_bonnet_pattern1(mirror(g))) {
        auto [u1, u2, u3, u4, u5] = *w;
        auto flip = [&](Vertex v) { return g.vertex_count() + 1 - v; };
        return BonnetWitness{{flip(u5), flip(u4), flip(u3), flip(u2), flip(u1)}, 2,
                             {Edge{flip(u5), flip(u1)}, Edge{flip(u2), flip(u1)}, Edge{flip(u4), flip(u3)}}};
    }
    return std::nullopt;
}

namespace {

bool edges_cross(Edge a, Edge b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

bool path_is_tangled(const std::vector<Vertex>& path) {
    const int k = static_cast<int>(path.size());
    if (k < 4) return false;
    auto edge_at = [&](int i) {
        return Edge{std::min(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)]),
                    std::max(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)])};
    };
    for (int i = 1; i + 1 < k; ++i) {
        Vertex ui = path[static_cast<std::size_t>(i)];
        bool extreme = true;
        for (int t = 0; t < k; ++t) {
            if (t == i) continue;
            if (path[static_cast<std::size_t>(t)] > ui) { extreme = false; break; }
        }
        if (!extreme) {
            extreme = true;
            for (int t = 0; t < k; ++t) {
                if (t == i) continue;
                if (path[static_cast<std::size_t>(t)] < ui) { extreme = false; break; }
            }
        }
        if (!extreme) continue;
        for (int a = 0; a < i; ++a)
            for (int b = i; b + 1 < k; ++b)
                if (edges_cross(edge_at(a), edge_at(b))) return true;
    }
    return false;
}

struct TangledCtx {
    const OrderedGraph* g;
    int max_vertices;
    std::vector<bool> used;
    std::vector<Vertex> path;
    std::optional<std::vector<Vertex>> found;
    bool truncated = false;

    void dfs() {
        if (found) return;
        if (path_is_tangled(path)) {
            found = path;
            return;
        }
        if (static_cast<int>(path.size()) >= max_vertices) {
            // a longer path could still be tangled
            bool extendable = false;
            Vertex last = path.back();
            for (Vertex w : g->neighbors_left(last))
                if (!used[static_cast<std::size_t>(w)]) extendable = true;
            for (Vertex w : g->neighbors_right(last))
                if (!used[static_cast<std::size_t>(w)]) extendable = true;
            if (extendable) truncated = true;
            return;
        }
        Vertex last = path.back();
        auto try_next = [&](Vertex w) {
            if (used[static_cast<std::size_t>(w)] || found) return;
            used[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            dfs();
            path.pop_back();
            used[static_cast<std::size_t>(w)] = false;
        };
        for (Vertex w : g->neighbors_left(last)) try_next(w);
        for (Vertex w : g->neighbors_right(last)) try_next(w);
    }
};

} // namespace

TangledSearch detect_tangled_path(const OrderedGraph& g, int max_path_vertices) {
    TangledCtx ctx;
    ctx.g = &g;
    ctx.max_vertices = std::min(max_path_vertices, g.vertex_count());
    ctx.used.assign(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    for (Vertex v = 1; v <= g.vertex_count() && !ctx.found; ++v) {
        ctx.used[static_cast<std::size_t>(v)] = true;
        ctx.path = {v};
        ctx.dfs();
        ctx.used[static_cast<std::size_t>(v)] = false;
    }
    TangledSearch out;
    out.path = ctx.found;
    out.complete = ctx.found.has_value() || !ctx.truncated;
    return out;
}

CaterpillarVerdict is_right_caterpillar_certified(const OrderedGraph& g, int max_path_vertices) {
    CaterpillarVerdict v{CaterpillarStatus::NotCaterpillar, std::nullopt, std::nullopt, std::nullopt};
    v.sequence = extract_defining_sequence(g);
    v.bonnet = detect_bonnet(g);
    auto tangled = detect_tangled_path(g, max_path_vertices);
    v.tangled = tangled.path;

    bool obstruction_free = is_tree(g) && !v.bonnet && !tangled.path;
    int max_left = 0;
    for (Vertex u = 1; u <= g.vertex_count(); ++u) max_left = std::max(max_left, g.left_degree(u));

    if (v.sequence) {
        v.status = CaterpillarStatus::Caterpillar;
    } else if (obstruction_free && !tangled.complete) {
        v.status = CaterpillarStatus::SearchTruncated;
    } else {
        v.status = CaterpillarStatus::NotCaterpillar;
    }

    // cross-check: obstruction-free connected tree with unique left neighbors must extract
    if (is_tree(g) && g.edge_count() >= 1 && max_left <= 1 && !v.bonnet && !tangled.path &&
        tangled.complete && !v.sequence)
        throw std::logic_error("caterpillar certification disagrees with extraction");
    if (v.sequence && (v.bonnet || v.tangled))
        throw std::logic_error("caterpillar extraction succeeded despite an obstruction");
    return v;
}

} // namespace oramsey
