#pragma once

#include "oramsey/arrow.hpp"
#include "oramsey/structure.hpp"

#include <optional>
#include <string>

namespace oramsey {

// ---- combinators ----

/// All vertices of a strictly left of all vertices of b.
OrderedGraph union_intervally(const OrderedGraph& a, const OrderedGraph& b);
OrderedGraph union_copies(const OrderedGraph& g, int count);
/// Identify a's rightmost vertex with b's leftmost one. Both need a vertex.
OrderedGraph concatenate(const OrderedGraph& a, const OrderedGraph& b);
OrderedGraph concatenate_copies(const OrderedGraph& g, int count);
/// Star with `star_edges` edges, then `copies` blocks of g, with a spoke from
/// the global leftmost vertex to each block's leftmost vertex.
OrderedGraph hang(int star_edges, int copies, const OrderedGraph& g);

/// Right caterpillar with the given segment sequence (d[0] = rightmost segment).
OrderedGraph build_caterpillar(const DefiningSequence& d);
/// Segments i..j of the caterpillar (the i-j+1 leftmost ones); j = i+1 gives a
/// single vertex, j = 1 the whole caterpillar.
OrderedGraph caterpillar_suffix(const DefiningSequence& d, int i, int j);
/// The t rightmost segments; t = 0 gives a single vertex.
OrderedGraph caterpillar_prefix(const DefiningSequence& d, int t);

/// Five-vertex monotone path with the 2-4 chord.
OrderedGraph build_pseudoforest_ramsey_monp3();

// ---- forest hosts ----

struct BuildOptions {
    int verify_edge_limit = 16; // exhaustive arrow verification cap
    int ramsey_cap = 20;        // complete-host sweep cap for the matching case
    ArrowOptions arrow;
};

enum class BuildStatus { Ok, NotCovered, BudgetExceeded };

struct ForestBuild {
    BuildStatus status = BuildStatus::NotCovered;
    OrderedGraph graph;
    int case_number = 0;
    bool verify_attempted = false;
    bool verified = false;
};

/// A forest that arrows (h, hp), when the pair admits one.
ForestBuild build_forest_ramsey(const OrderedGraph& h, const OrderedGraph& hp,
                                const BuildOptions& opts = {});

// ---- determiners ----

struct DeterminerSpec {
    int star_edges = 1;  // edge count of the right star H
    DefiningSequence d;  // segment sizes of the target caterpillar
    int i = 0;           // how many segments the target has
    int j = 0;           // right determiners: 2 <= j <= i+1
};

enum class Side { Left, Right };

/// Gadget forcing, under colorings without red stars, a blue caterpillar copy
/// anchored at its leftmost vertex.
OrderedGraph left_determiner(const DeterminerSpec& spec);
/// The right-side gadget; under colorings without a red star or a full blue
/// caterpillar, the suffix copy lands on the rightmost vertex.
OrderedGraph right_determiner(const DeterminerSpec& spec);

struct GoodColoring {
    EdgeColoring coloring;
    Embedding distinguished; // the unique anchored blue copy
};

/// The canonical coloring certifying the second determiner property. Only
/// defined on graphs produced by left_determiner/right_determiner; the result
/// is self-verified before it is returned.
GoodColoring good_coloring_of(const OrderedGraph& det, const DeterminerSpec& spec, Side side);

struct DeterminerCheck {
    bool ok = false;
    bool budget_exceeded = false;
    std::string detail;
};

/// Exhaustively checks both determiner properties over all 2^|E| colorings.
DeterminerCheck verify_determiner(const OrderedGraph& candidate, const DeterminerSpec& spec,
                                  Side side, int max_edges = 22);

// ---- infinite families ----

struct GammaBuild {
    OrderedGraph graph;
    std::vector<Edge> dashed; // the long edge of each block, left to right
    int block_vertices = 0;   // vertex count of the repeated block
};

/// Chain construction for a right star against a caterpillar with d_j larger
/// than both following entries (j <= i-2). `tail_index` selects the left
/// determiner closing the chain on the right.
GammaBuild build_gamma_n(int star_edges, const DefiningSequence& d, int j, int n, int tail_index);

struct FnBuild {
    OrderedGraph graph;
    std::vector<Vertex> gammas; // the n+1 chain anchors
    std::vector<Vertex> u_set;  // isolated-group vertices wired to the anchors
    std::vector<Vertex> w_set;  // leftmost vertices of the trailing determiners
};

/// Chain construction for d_{j-1} > d_j with j >= 3.
FnBuild build_f_n(int star_edges, const DefiningSequence& d, int j, int n);

struct FamilyResult {
    std::vector<OrderedGraph> members;
    bool complete = true; // false iff the placement budget truncated the sweep
};

/// Grid closure: members are unions of one minimal host per grid cell, with
/// rows and columns placed left to right and unconstrained cells free to
/// interleave or overlap.
FamilyResult family_fst(const std::vector<std::vector<std::vector<OrderedGraph>>>& grid,
                        std::uint64_t placement_budget = 1u << 20);

/// Level sets for the star-versus-caterpillar characterization. Level 1 holds
/// the single star; level j glues s level-(j-1) members onto the leftmost
/// vertex's neighborhood. Members larger than max_vertices are not emitted.
FamilyResult family_fj(int star_edges, const DefiningSequence& d, int level, int max_vertices,
                       std::uint64_t placement_budget = 1u << 20);

/// Leftmost vertices of level-j member copies, per vertex of f.
std::vector<bool> family_anchor_set(const OrderedGraph& f, int star_edges,
                                    const DefiningSequence& d, int level);

struct HColoring {
    bool ok = false;
    std::optional<EdgeColoring> coloring;
    std::optional<Embedding> violating_embedding; // hypothesis failure witness
    std::optional<OrderedGraph> violating_member;
};

/// The level-based refuting coloring for hosts free of every top-level family
/// member; requires level count <= 2 or a nondecreasing segment sequence.
HColoring canonical_h_coloring(const OrderedGraph& f, int star_edges, const DefiningSequence& d);

} // namespace oramsey
