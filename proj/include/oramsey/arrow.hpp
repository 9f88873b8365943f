#pragma once

#include "oramsey/coloring.hpp"

#include <cstdint>
#include <optional>

namespace oramsey {

inline constexpr int kMaxSolverEdges = 256; // widest supported edge-mask width

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
};

enum class ArrowVerdict { Arrows, NotArrows, Unknown };

/// Outcome of deciding f -> (h, h'). A NotArrows verdict carries a witness
/// coloring with no red copy of h and no blue copy of h'; Unknown is reserved
/// for exhausted budgets and is never coerced to an answer.
struct ArrowCertificate {
    ArrowVerdict verdict = ArrowVerdict::Unknown;
    std::optional<EdgeColoring> witness;
    SearchStats stats;
};

struct ArrowOptions {
    std::uint64_t node_budget = 100'000'000;
};

ArrowCertificate arrows(const OrderedGraph& f, const OrderedGraph& h, const OrderedGraph& hp,
                        const ArrowOptions& opts = {});

/// Variant constraining the blue side: a blue copy of hp only counts when its
/// image contains `anchor`. Arrows here means every coloring without a red h
/// has a blue hp through the anchor.
ArrowCertificate arrows_with_blue_anchor(const OrderedGraph& f, const OrderedGraph& h,
                                         const OrderedGraph& hp, Vertex anchor,
                                         const ArrowOptions& opts = {});

struct MinimalityCertificate {
    ArrowVerdict base = ArrowVerdict::Unknown; // arrows(f, h, hp)
    bool is_minimal = false;
    bool unknown = false; // some deletion ran out of budget
    std::optional<Edge> failing_edge;
    std::optional<Vertex> failing_isolated_vertex;
};

/// Minimality via single-edge and single-isolated-vertex deletions. Deleting a
/// non-isolated vertex yields a subgraph of some single-edge deletion, and the
/// arrow relation is monotone under ordered subgraphs, so these deletions decide
/// the full proper-subgraph condition.
MinimalityCertificate is_minimal_ramsey(const OrderedGraph& f, const OrderedGraph& h,
                                        const OrderedGraph& hp, const ArrowOptions& opts = {});

struct EnumerateResult {
    std::vector<OrderedGraph> graphs;
    bool complete = true;
};

/// All minimal ordered Ramsey graphs of (h, hp) within the vertex/edge bounds,
/// by exhaustive edge-subset sweep over each vertex count.
EnumerateResult enumerate_minimal(const OrderedGraph& h, const OrderedGraph& hp, int max_vertices,
                                  int max_edges = kMaxSolverEdges, const ArrowOptions& opts = {});

struct RamseyNumberResult {
    std::optional<int> value; // least r <= cap with K_r -> (h, hp)
    bool budget_exceeded = false;
};

RamseyNumberResult ordered_ramsey_number(const OrderedGraph& h, const OrderedGraph& hp, int cap,
                                         const ArrowOptions& opts = {});

/// Pattern copies as edge-index masks over f, deduplicated and inclusion-minimal.
std::vector<std::uint64_t> copy_edge_masks(const OrderedGraph& f, const OrderedGraph& pattern);

} // namespace oramsey
