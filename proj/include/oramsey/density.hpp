#pragma once

#include "oramsey/graph.hpp"

#include <string>

namespace oramsey {

/// Exact nonnegative rational, stored reduced. No floating point anywhere.
struct DensityValue {
    long long num = 0;
    long long den = 1;

    DensityValue() = default;
    DensityValue(long long n, long long d);

    friend bool operator==(const DensityValue& a, const DensityValue& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const DensityValue& a, const DensityValue& b);
    friend bool operator<=(const DensityValue& a, const DensityValue& b) { return a == b || a < b; }
    friend bool operator>(const DensityValue& a, const DensityValue& b) { return b < a; }
    friend bool operator>=(const DensityValue& a, const DensityValue& b) { return b <= a; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline constexpr int kDensityVertexCap = 20; // subset enumeration is exact but exponential

/// m(G): max |E(G')|/|V(G')| over nonempty induced subgraphs. Edgeless graphs give 0/1.
DensityValue density_m(const OrderedGraph& g);

/// m2(G): max (|E'|-1)/(|V'|-2) over induced subgraphs with >= 3 vertices and >= 1 edge.
/// Requires at least two edges.
DensityValue density_m2(const OrderedGraph& g);

struct M2Total {
    DensityValue value;
    bool by_convention; // true iff g has exactly one edge and 1/2 was supplied
};
/// Total variant: a single-edge graph is assigned 1/2 by convention, flagged.
M2Total density_m2_total(const OrderedGraph& g);

/// Asymmetric 2-density: max |E(H'')|/(|V(H'')|-2+1/m2(H)) over H'' <= H' with an edge.
/// Requires m2(h) >= m2(hp) (both via the total variant's precondition: >= 1 edge each).
DensityValue density_m2_asym(const OrderedGraph& h, const OrderedGraph& hp);

} // namespace oramsey
