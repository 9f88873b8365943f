#include "oramsey/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace oramsey {

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 1 || v > n_) throw std::invalid_argument("edge endpoint out of range 1..n");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    left_.assign(static_cast<std::size_t>(n_) + 1, {});
    right_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const auto& [u, v] : edges_) {
        right_[static_cast<std::size_t>(u)].push_back(v);
        left_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : left_) std::sort(a.begin(), a.end());
    for (auto& a : right_) std::sort(a.begin(), a.end());
}

bool OrderedGraph::has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

int OrderedGraph::edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    Edge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<Vertex> OrderedGraph::isolated_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n_; ++v)
        if (is_isolated(v)) out.push_back(v);
    return out;
}

namespace {

void embed_rec(const OrderedGraph& host, const OrderedGraph& pattern, std::vector<Vertex>& map,
               std::size_t limit, std::vector<Embedding>& out) {
    if (out.size() >= limit) return;
    const int k = pattern.vertex_count();
    const int placed = static_cast<int>(map.size());
    if (placed == k) {
        out.push_back(Embedding{map});
        return;
    }
    const Vertex pv = placed + 1;
    const Vertex lo = placed == 0 ? 1 : map.back() + 1;
    // pv..k still need strictly increasing host vertices
    const Vertex hi = host.vertex_count() - (k - pv);
    for (Vertex hv = lo; hv <= hi; ++hv) {
        bool ok = true;
        for (Vertex pu : pattern.neighbors_left(pv)) {
            if (!host.has_edge(map[static_cast<std::size_t>(pu - 1)], hv)) { ok = false; break; }
        }
        if (!ok) continue;
        map.push_back(hv);
        embed_rec(host, pattern, map, limit, out);
        map.pop_back();
        if (out.size() >= limit) return;
    }
}

} // namespace

std::vector<Embedding> find_embeddings(const OrderedGraph& host, const OrderedGraph& pattern,
                                       std::size_t limit) {
    std::vector<Embedding> out;
    if (pattern.vertex_count() > host.vertex_count() || limit == 0) return out;
    std::vector<Vertex> map;
    map.reserve(static_cast<std::size_t>(pattern.vertex_count()));
    embed_rec(host, pattern, map, limit, out);
    return out;
}

bool contains_copy(const OrderedGraph& host, const OrderedGraph& pattern) {
    return !find_embeddings(host, pattern, 1).empty();
}

bool is_valid_embedding(const OrderedGraph& host, const OrderedGraph& pattern, const Embedding& e) {
    if (e.map.size() != static_cast<std::size_t>(pattern.vertex_count())) return false;
    for (std::size_t i = 0; i < e.map.size(); ++i) {
        if (e.map[i] < 1 || e.map[i] > host.vertex_count()) return false;
        if (i > 0 && e.map[i] <= e.map[i - 1]) return false;
    }
    for (const auto& [u, v] : pattern.edges())
        if (!host.has_edge(e.at(u), e.at(v))) return false;
    return true;
}

OrderedGraph mirror(const OrderedGraph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(n + 1 - v, n + 1 - u);
    return OrderedGraph(n, std::move(edges));
}

Edge mirror_edge(const OrderedGraph& g, Edge e) {
    const int n = g.vertex_count();
    return Edge{n + 1 - e.second, n + 1 - e.first};
}

OrderedGraph delete_edge(const OrderedGraph& g, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    bool found = false;
    for (const auto& f : g.edges()) {
        if (f == e) { found = true; continue; }
        edges.push_back(f);
    }
    if (!found) throw std::invalid_argument("delete_edge: edge not present");
    return OrderedGraph(g.vertex_count(), std::move(edges));
}

OrderedGraph delete_vertex(const OrderedGraph& g, Vertex v) {
    if (v < 1 || v > g.vertex_count()) throw std::invalid_argument("delete_vertex: out of range");
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return OrderedGraph(g.vertex_count() - 1, std::move(edges));
}

OrderedGraph induced_subgraph(const OrderedGraph& g, std::vector<Vertex> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 1 || keep[i] > g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (pos[static_cast<std::size_t>(u)] && pos[static_cast<std::size_t>(v)])
            edges.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return OrderedGraph(static_cast<int>(keep.size()), std::move(edges));
}

OrderedGraph restrict_edges(const OrderedGraph& g, const std::vector<bool>& keep) {
    if (keep.size() != g.edges().size())
        throw std::invalid_argument("restrict_edges: flag size mismatch");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (keep[i]) edges.push_back(g.edges()[i]);
    return OrderedGraph(g.vertex_count(), std::move(edges));
}

OrderedGraph single_vertex() { return OrderedGraph(1, {}); }

OrderedGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph right_star(int k) {
    if (k < 0) throw std::invalid_argument("right_star: negative edge count");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(1, i + 2);
    return OrderedGraph(k + 1, std::move(edges));
}

OrderedGraph left_star(int k) { return mirror(right_star(k)); }

OrderedGraph monotone_path(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph monotone_matching(int blocks) {
    std::vector<Edge> edges;
    for (int i = 0; i < blocks; ++i) edges.emplace_back(2 * i + 1, 2 * i + 2);
    return OrderedGraph(2 * blocks, std::move(edges));
}

OrderedGraph parse_graph_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tok;
            if (!(ls >> tok)) continue; // blank/comment line before header
            if (tok != "n") throw ParseError(lineno, "expected header 'n <count>'");
            if (!(ls >> n) || n < 0) throw ParseError(lineno, "bad vertex count");
            continue;
        }
        Vertex u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw ParseError(lineno, "expected two endpoints");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
        if (u >= v) throw ParseError(lineno, "edges must satisfy u < v");
        if (u < 1 || v > n) throw ParseError(lineno, "endpoint out of range");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n <count>'");
    try {
        return OrderedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

std::string to_text(const OrderedGraph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

OrderedGraph parse_graph_dsl(std::string_view s) {
    auto fail = [](const std::string& msg) -> ParseError { return ParseError(1, "dsl: " + msg); };
    auto parse_int = [&](std::string_view t) {
        int value = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (ec != std::errc() || p != t.data() + t.size()) throw fail("bad integer '" + std::string(t) + "'");
        return value;
    };
    int n = -1;
    std::vector<Edge> edges;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find(';', start);
        if (end == std::string_view::npos) end = s.size();
        std::string_view part = s.substr(start, end - start);
        start = end + 1;
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string_view::npos) throw fail("expected key=value");
        std::string_view key = part.substr(0, eq), value = part.substr(eq + 1);
        if (key == "n") {
            n = parse_int(value);
        } else if (key == "e") {
            std::size_t p = 0;
            while (p < value.size()) {
                auto comma = value.find(',', p);
                if (comma == std::string_view::npos) comma = value.size();
                std::string_view pair = value.substr(p, comma - p);
                p = comma + 1;
                if (pair.empty()) continue;
                auto dash = pair.find('-');
                if (dash == std::string_view::npos) throw fail("edge must be 'u-v'");
                edges.emplace_back(parse_int(pair.substr(0, dash)), parse_int(pair.substr(dash + 1)));
            }
        } else {
            throw fail("unknown key '" + std::string(key) + "'");
        }
    }
    if (n < 0) throw fail("missing n=");
    try {
        return OrderedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw fail(e.what());
    }
}

std::string to_dsl(const OrderedGraph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count();
    if (g.edge_count() > 0) {
        os << ";e=";
        bool first = true;
        for (const auto& [u, v] : g.edges()) {
            if (!first) os << ",";
            first = false;
            os << u << "-" << v;
        }
    }
    return os.str();
}

} // namespace oramsey
