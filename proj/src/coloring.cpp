#include "oramsey/coloring.hpp"

#include "oramsey/structure.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>

namespace oramsey {

EdgeColoring::EdgeColoring(OrderedGraph h, std::vector<Color> c)
    : host(std::move(h)), color(std::move(c)) {
    if (color.size() != host.edges().size())
        throw std::invalid_argument("EdgeColoring: one color per host edge required");
}

Color EdgeColoring::at(Vertex u, Vertex v) const {
    int idx = host.edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("EdgeColoring::at: no such edge");
    return color[static_cast<std::size_t>(idx)];
}

EdgeColoring EdgeColoring::swapped() const {
    std::vector<Color> c(color.size());
    for (std::size_t i = 0; i < color.size(); ++i) c[i] = other(color[i]);
    return EdgeColoring(host, std::move(c));
}

std::string to_text(const EdgeColoring& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.color.size(); ++i) {
        const auto& [u, v] = c.host.edges()[i];
        os << u << " " << v << " " << (c.color[i] == Color::Red ? 'R' : 'B') << "\n";
    }
    return os.str();
}

EdgeColoring parse_coloring_text(const OrderedGraph& host, std::istream& in) {
    std::vector<std::optional<Color>> got(host.edges().size());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Vertex u, v;
        std::string col;
        if (!(ls >> u)) continue;
        if (!(ls >> v >> col)) throw ParseError(lineno, "expected 'u v R|B'");
        int idx = host.edge_index(u, v);
        if (idx < 0) throw ParseError(lineno, "edge not in host graph");
        if (col != "R" && col != "B") throw ParseError(lineno, "color must be R or B");
        if (got[static_cast<std::size_t>(idx)]) throw ParseError(lineno, "edge colored twice");
        got[static_cast<std::size_t>(idx)] = col == "R" ? Color::Red : Color::Blue;
    }
    std::vector<Color> colors;
    colors.reserve(got.size());
    for (const auto& c : got) {
        if (!c) throw ParseError(lineno, "coloring does not cover every edge");
        colors.push_back(*c);
    }
    return EdgeColoring(host, std::move(colors));
}

OrderedGraph color_class(const EdgeColoring& c, Color which) {
    std::vector<bool> keep(c.color.size());
    for (std::size_t i = 0; i < c.color.size(); ++i) keep[i] = c.color[i] == which;
    return restrict_edges(c.host, keep);
}

std::optional<Embedding> find_monochromatic_copy(const EdgeColoring& c, const OrderedGraph& pattern,
                                                 Color which) {
    auto sub = color_class(c, which);
    auto found = find_embeddings(sub, pattern, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

bool has_monochromatic_copy(const EdgeColoring& c, const OrderedGraph& pattern, Color which) {
    return find_monochromatic_copy(c, pattern, which).has_value();
}

namespace {

// BFS distances from root within root's component; -1 elsewhere
std::vector<int> bfs_distance(const OrderedGraph& g, Vertex root) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    std::deque<Vertex> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        auto visit = [&](Vertex w) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        };
        for (Vertex w : g.neighbors_left(v)) visit(w);
        for (Vertex w : g.neighbors_right(v)) visit(w);
    }
    return dist;
}

} // namespace

EdgeColoring star_coloring(const OrderedGraph& f, Vertex u) {
    if (u < 1 || u > f.vertex_count()) throw std::invalid_argument("star_coloring: root out of range");
    std::vector<int> dist(static_cast<std::size_t>(f.vertex_count()) + 1, -1);
    auto merge = [&](const std::vector<int>& d) {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] >= 0) dist[i] = d[i];
    };
    merge(bfs_distance(f, u));
    for (Vertex v = 1; v <= f.vertex_count(); ++v)
        if (dist[static_cast<std::size_t>(v)] < 0) merge(bfs_distance(f, v)); // leftmost-first roots
    std::vector<Color> colors;
    colors.reserve(f.edges().size());
    for (const auto& [a, b] : f.edges()) {
        // distance of edge to root = edges of the shortest path containing the root and the edge
        int d = std::min(dist[static_cast<std::size_t>(a)], dist[static_cast<std::size_t>(b)]) + 1;
        colors.push_back(d % 2 == 1 ? Color::Red : Color::Blue);
    }
    return EdgeColoring(f, std::move(colors));
}

EdgeColoring bipartite_coloring(const OrderedGraph& f, const std::vector<bool>& in_a) {
    if (in_a.size() != static_cast<std::size_t>(f.vertex_count()) + 1)
        throw std::invalid_argument("bipartite_coloring: partition flag per vertex required");
    std::vector<Color> colors;
    colors.reserve(f.edges().size());
    for (const auto& [a, b] : f.edges())
        colors.push_back(in_a[static_cast<std::size_t>(a)] ? Color::Red : Color::Blue);
    return EdgeColoring(f, std::move(colors));
}

namespace {

bool forms_bend(Vertex shared, Vertex other1, Vertex other2) {
    // three vertices x<y<z form a bend when the shared endpoint is extreme
    return (shared < other1 && shared < other2) || (shared > other1 && shared > other2);
}

void bend_color_component(const OrderedGraph& f, Vertex root, std::vector<Color>& colors) {
    auto dist = bfs_distance(f, root);
    // parent pointers toward root
    std::vector<Vertex> parent(static_cast<std::size_t>(f.vertex_count()) + 1, 0);
    for (Vertex v = 1; v <= f.vertex_count(); ++v) {
        if (dist[static_cast<std::size_t>(v)] <= 0) continue;
        auto scan = [&](const std::vector<Vertex>& nbrs) {
            for (Vertex w : nbrs)
                if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1)
                    parent[static_cast<std::size_t>(v)] = w;
        };
        scan(f.neighbors_left(v));
        if (parent[static_cast<std::size_t>(v)] == 0) scan(f.neighbors_right(v));
    }
    for (std::size_t i = 0; i < f.edges().size(); ++i) {
        const auto& [a, b] = f.edges()[i];
        if (dist[static_cast<std::size_t>(a)] < 0) continue; // other component
        if (b == root) { colors[i] = Color::Red; continue; } // right endpoint is the root
        // endpoint nearer the root, and the next edge on the path from there
        Vertex near = dist[static_cast<std::size_t>(a)] <= dist[static_cast<std::size_t>(b)] ? a : b;
        Vertex far = near == a ? b : a;
        if (near == root) { colors[i] = Color::Blue; continue; } // no next edge
        Vertex next = parent[static_cast<std::size_t>(near)];
        colors[i] = forms_bend(near, far, next) ? Color::Red : Color::Blue;
    }
}

} // namespace

EdgeColoring bend_coloring(const OrderedGraph& f, Vertex u) {
    if (!is_tree(f)) throw std::invalid_argument("bend_coloring: host must be a tree");
    if (u < 1 || u > f.vertex_count()) throw std::invalid_argument("bend_coloring: root out of range");
    std::vector<Color> colors(f.edges().size(), Color::Blue);
    bend_color_component(f, u, colors);
    return EdgeColoring(f, std::move(colors));
}

EdgeColoring bend_coloring_forest(const OrderedGraph& f, Vertex u) {
    if (!is_forest(f)) throw std::invalid_argument("bend_coloring_forest: host must be a forest");
    std::vector<Color> colors(f.edges().size(), Color::Blue);
    std::vector<bool> done(static_cast<std::size_t>(f.vertex_count()) + 1, false);
    auto run = [&](Vertex root) {
        auto dist = bfs_distance(f, root);
        bend_color_component(f, root, colors);
        for (Vertex v = 1; v <= f.vertex_count(); ++v)
            if (dist[static_cast<std::size_t>(v)] >= 0) done[static_cast<std::size_t>(v)] = true;
    };
    if (u >= 1 && u <= f.vertex_count()) run(u);
    for (Vertex v = 1; v <= f.vertex_count(); ++v)
        if (!done[static_cast<std::size_t>(v)]) run(v);
    return EdgeColoring(f, std::move(colors));
}

bool star_coloring_ok(const EdgeColoring& c, Vertex u) {
    for (Color which : {Color::Red, Color::Blue}) {
        auto sub = color_class(c, which);
        for (const auto& comp : components(sub)) {
            int edges_inside = 0;
            Vertex hub = 0;
            int hub_deg = 0;
            for (Vertex v : comp) {
                edges_inside += sub.degree(v);
                if (sub.degree(v) > hub_deg) { hub_deg = sub.degree(v); hub = v; }
            }
            edges_inside /= 2;
            if (edges_inside == 0) continue;
            if (hub == 0 || hub_deg != edges_inside) return false; // not a star
        }
    }
    for (Vertex w : c.host.neighbors_left(u))
        if (c.at(w, u) != Color::Red) return false;
    for (Vertex w : c.host.neighbors_right(u))
        if (c.at(u, w) != Color::Red) return false;
    return true;
}

bool bipartite_coloring_ok(const EdgeColoring& c) {
    auto p3 = monotone_path(3);
    return !has_monochromatic_copy(c, p3, Color::Red) && !has_monochromatic_copy(c, p3, Color::Blue);
}

bool bend_coloring_ok(const EdgeColoring& c) {
    if (has_monochromatic_copy(c, monotone_path(3), Color::Red)) return false;
    auto blue = color_class(c, Color::Blue);
    for (const auto& comp : components(blue)) {
        if (comp.size() < 2) continue;
        int max_left = 0, max_right = 0;
        for (Vertex v : comp) {
            max_left = std::max(max_left, blue.left_degree(v));
            max_right = std::max(max_right, blue.right_degree(v));
        }
        if (max_left > 1 && max_right > 1) return false;
    }
    return true;
}

std::optional<std::vector<bool>> proper_bipartition(const OrderedGraph& g,
                                                    const std::vector<std::optional<bool>>& pin) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
    auto color_from = [&](Vertex start, bool value) -> bool {
        std::deque<Vertex> queue{start};
        side[static_cast<std::size_t>(start)] = value ? 1 : 0;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            auto visit = [&](Vertex w) {
                int want = 1 - side[static_cast<std::size_t>(v)];
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = want;
                    queue.push_back(w);
                    return true;
                }
                return side[static_cast<std::size_t>(w)] == want;
            };
            for (Vertex w : g.neighbors_left(v))
                if (!visit(w)) return false;
            for (Vertex w : g.neighbors_right(v))
                if (!visit(w)) return false;
        }
        return true;
    };
    // pinned vertices seed their components first
    for (Vertex v = 1; v <= n; ++v) {
        if (static_cast<std::size_t>(v) < pin.size() && pin[static_cast<std::size_t>(v)] &&
            side[static_cast<std::size_t>(v)] < 0) {
            if (!color_from(v, *pin[static_cast<std::size_t>(v)])) return std::nullopt;
        }
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (static_cast<std::size_t>(v) < pin.size() && pin[static_cast<std::size_t>(v)] &&
            (side[static_cast<std::size_t>(v)] == 1) != *pin[static_cast<std::size_t>(v)])
            return std::nullopt; // pin conflicted within an earlier component
        if (side[static_cast<std::size_t>(v)] < 0) {
            if (!color_from(v, true)) return std::nullopt;
        }
    }
    std::vector<bool> in_a(static_cast<std::size_t>(n) + 1, false);
    for (Vertex v = 1; v <= n; ++v) in_a[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)] == 1;
    return in_a;
}

} // namespace oramsey
