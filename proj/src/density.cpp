#include "oramsey/density.hpp"

#include <bit>
#include <numeric>

namespace oramsey {

DensityValue::DensityValue(long long n, long long d) : num(n), den(d) {
    if (den <= 0 || num < 0) throw std::invalid_argument("DensityValue: need num >= 0, den > 0");
    long long g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
}

bool operator<(const DensityValue& a, const DensityValue& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

namespace {

void require_small(const OrderedGraph& g) {
    if (g.vertex_count() > kDensityVertexCap)
        throw std::invalid_argument("density: graph exceeds the exact-enumeration vertex cap");
}

// adjacency rows as bitmasks, vertex v at bit v-1
std::vector<std::uint32_t> adjacency_masks(const OrderedGraph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1u << (v - 1);
        adj[static_cast<std::size_t>(v)] |= 1u << (u - 1);
    }
    return adj;
}

int induced_edge_count(const std::vector<std::uint32_t>& adj, std::uint32_t subset) {
    int twice = 0;
    for (std::uint32_t rest = subset; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        twice += std::popcount(adj[static_cast<std::size_t>(v) + 1] & subset);
    }
    return twice / 2;
}

} // namespace

DensityValue density_m(const OrderedGraph& g) {
    require_small(g);
    if (g.vertex_count() == 0) throw std::invalid_argument("density_m: empty graph");
    auto adj = adjacency_masks(g);
    DensityValue best(0, 1);
    const std::uint32_t full = g.vertex_count() == 32 ? ~0u : (1u << g.vertex_count()) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int e = induced_edge_count(adj, s);
        if (e == 0) continue;
        DensityValue d(e, std::popcount(s));
        if (best < d) best = d;
    }
    return best;
}

DensityValue density_m2(const OrderedGraph& g) {
    if (g.edge_count() < 2)
        throw std::invalid_argument("density_m2: needs at least two edges");
    require_small(g);
    auto adj = adjacency_masks(g);
    DensityValue best(0, 1);
    bool seen = false;
    const std::uint32_t full = g.vertex_count() == 32 ? ~0u : (1u << g.vertex_count()) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (std::popcount(s) < 3) continue;
        int e = induced_edge_count(adj, s);
        if (e < 1) continue;
        DensityValue d(e - 1, std::popcount(s) - 2);
        if (!seen || best < d) { best = d; seen = true; }
    }
    if (!seen) throw std::logic_error("density_m2: no admissible subgraph despite two edges");
    return best;
}

M2Total density_m2_total(const OrderedGraph& g) {
    if (g.edge_count() < 1)
        throw std::invalid_argument("density_m2_total: needs at least one edge");
    if (g.edge_count() == 1) return M2Total{DensityValue(1, 2), true};
    return M2Total{density_m2(g), false};
}

DensityValue density_m2_asym(const OrderedGraph& h, const OrderedGraph& hp) {
    auto m2h = density_m2_total(h);
    auto m2hp = density_m2_total(hp);
    if (m2h.value < m2hp.value)
        throw std::invalid_argument("density_m2_asym: requires m2(h) >= m2(h')");
    require_small(hp);
    // value for a subgraph with e edges, v vertices: e / (v - 2 + den/num) with m2(h)=num/den
    const long long num = m2h.value.num, den = m2h.value.den;
    auto adj = adjacency_masks(hp);
    DensityValue best(0, 1);
    bool seen = false;
    const std::uint32_t full = hp.vertex_count() == 32 ? ~0u : (1u << hp.vertex_count()) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int e = induced_edge_count(adj, s);
        if (e < 1) continue;
        long long v = std::popcount(s);
        long long denom = (v - 2) * num + den;
        if (denom <= 0) throw std::logic_error("density_m2_asym: nonpositive denominator");
        DensityValue d(e * num, denom);
        if (!seen || best < d) { best = d; seen = true; }
    }
    if (!seen) throw std::invalid_argument("density_m2_asym: h' needs at least one edge");
    return best;
}

} // namespace oramsey
