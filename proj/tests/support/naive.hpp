#pragma once

// Brute-force oracles, written independently of the library's search and
// density paths. Everything here is deliberately unoptimized.

#include "oramsey/coloring.hpp"
#include "oramsey/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using oramsey::Color;
using oramsey::Edge;
using oramsey::EdgeColoring;
using oramsey::OrderedGraph;
using oramsey::Vertex;

// order-preserving copy check by direct recursion over vertex choices
inline bool copy_rec(const OrderedGraph& host, const OrderedGraph& pattern,
                     std::vector<Vertex>& chosen) {
    const int placed = static_cast<int>(chosen.size());
    if (placed == pattern.vertex_count()) return true;
    Vertex lo = placed == 0 ? 1 : chosen.back() + 1;
    for (Vertex hv = lo; hv <= host.vertex_count(); ++hv) {
        bool ok = true;
        for (const auto& [a, b] : pattern.edges()) {
            if (b != placed + 1 || a > placed) continue;
            if (!host.has_edge(chosen[static_cast<std::size_t>(a - 1)], hv)) { ok = false; break; }
        }
        if (!ok) continue;
        chosen.push_back(hv);
        if (copy_rec(host, pattern, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

inline bool has_copy(const OrderedGraph& host, const OrderedGraph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    std::vector<Vertex> chosen;
    return copy_rec(host, pattern, chosen);
}

inline OrderedGraph keep_edges(const OrderedGraph& g, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask & (std::uint64_t{1} << i)) edges.push_back(g.edges()[static_cast<std::size_t>(i)]);
    return OrderedGraph(g.vertex_count(), std::move(edges));
}

// truth of f -> (h, hp) by enumerating all 2^|E| colorings; mask bit = red
inline bool naive_arrows(const OrderedGraph& f, const OrderedGraph& h, const OrderedGraph& hp,
                         std::uint64_t* witness_red = nullptr) {
    const int m = f.edge_count();
    for (std::uint64_t red = 0; red < (std::uint64_t{1} << m); ++red) {
        if (has_copy(keep_edges(f, red), h)) continue;
        if (has_copy(keep_edges(f, ~red), hp)) continue;
        if (witness_red) *witness_red = red;
        return false;
    }
    return true;
}

// densities by plain subset recursion (no bit tricks)
struct Fraction {
    long long num = 0, den = 1;
    bool less(const Fraction& o) const { return num * o.den < o.num * den; }
};

inline int edges_inside(const OrderedGraph& g, const std::vector<Vertex>& subset) {
    int count = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (g.has_edge(subset[i], subset[j])) ++count;
    return count;
}

inline void subsets_rec(int n, Vertex next, std::vector<Vertex>& cur,
                        const std::function<void(const std::vector<Vertex>&)>& fn) {
    if (next > n) {
        fn(cur);
        return;
    }
    subsets_rec(n, next + 1, cur, fn);
    cur.push_back(next);
    subsets_rec(n, next + 1, cur, fn);
    cur.pop_back();
}

inline Fraction naive_density_m(const OrderedGraph& g) {
    Fraction best{0, 1};
    std::vector<Vertex> cur;
    subsets_rec(g.vertex_count(), 1, cur, [&](const std::vector<Vertex>& s) {
        if (s.empty()) return;
        Fraction f{edges_inside(g, s), static_cast<long long>(s.size())};
        if (best.less(f)) best = f;
    });
    return best;
}

inline std::optional<Fraction> naive_density_m2(const OrderedGraph& g) {
    std::optional<Fraction> best;
    std::vector<Vertex> cur;
    subsets_rec(g.vertex_count(), 1, cur, [&](const std::vector<Vertex>& s) {
        if (s.size() < 3) return;
        int e = edges_inside(g, s);
        if (e < 1) return;
        Fraction f{e - 1, static_cast<long long>(s.size()) - 2};
        if (!best || best->less(f)) best = f;
    });
    return best;
}

// deterministic xorshift for test-local randomness
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

inline OrderedGraph random_graph(Rng& rng, int n, int edge_percent) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.below(100) < edge_percent) edges.emplace_back(u, v);
    return OrderedGraph(n, std::move(edges));
}

// uniform random labelled tree on n vertices from a random parent sequence
inline OrderedGraph random_tree(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= n; ++v) {
        Vertex parent = 1 + rng.below(v - 1);
        edges.emplace_back(parent, v);
    }
    return OrderedGraph(n, std::move(edges));
}

inline OrderedGraph random_forest(Rng& rng, int n, int keep_percent) {
    auto tree = random_tree(rng, n);
    std::vector<Edge> edges;
    for (const auto& e : tree.edges())
        if (rng.below(100) < keep_percent) edges.push_back(e);
    return OrderedGraph(n, std::move(edges));
}

} // namespace oracle
