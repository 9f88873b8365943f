#pragma once

#include "oramsey/graph.hpp"

#include <array>
#include <optional>

namespace oramsey {

struct StructureReport {
    bool is_forest = false;
    bool is_pseudoforest = false;        // every component has at most one cycle
    bool is_proper_pseudoforest = false; // pseudoforest with at least one cycle
    bool is_partial_matching = false;    // no P3 in any order, i.e. max degree <= 1
    bool is_monotone_matching = false;   // K2 repeated intervally, no isolated vertices
    bool is_monotone_path = false;
    bool is_left_star = false;
    bool is_right_star = false;
    bool is_star_forest = false;         // every component with an edge is a star
    int max_left_degree = 0;
    int max_right_degree = 0;
    bool connected = false;
    int component_count = 0;
    std::vector<int> component;          // component id per vertex, index 1..n
};

StructureReport classify_structure(const OrderedGraph& g);

bool is_forest(const OrderedGraph& g);
bool is_connected(const OrderedGraph& g);
bool is_tree(const OrderedGraph& g);
std::vector<std::vector<Vertex>> components(const OrderedGraph& g);

/// Segment edge counts of a right caterpillar, rightmost segment first.
struct DefiningSequence {
    std::vector<int> d;
    int segments() const { return static_cast<int>(d.size()); }
    friend bool operator==(const DefiningSequence&, const DefiningSequence&) = default;
};

std::optional<DefiningSequence> extract_defining_sequence(const OrderedGraph& g);
bool is_right_caterpillar(const OrderedGraph& g);
bool is_left_caterpillar(const OrderedGraph& g);

bool is_loosely_connected(const OrderedGraph& g);
/// Unique decomposition into loosely connected blocks; rejects isolated vertices.
std::vector<OrderedGraph> decompose_loosely(const OrderedGraph& g);

/// Three edges on 4 or 5 vertices blocking caterpillar structure.
struct BonnetWitness {
    std::array<Vertex, 5> vertices; // u1..u5 with coincidences allowed per pattern
    int pattern;                    // 1 or 2
    std::array<Edge, 3> edges;
};
std::optional<BonnetWitness> detect_bonnet(const OrderedGraph& g);

struct TangledSearch {
    std::optional<std::vector<Vertex>> path; // a tangled path as a vertex sequence
    bool complete = true;                    // false iff the length bound truncated the search
};
TangledSearch detect_tangled_path(const OrderedGraph& g, int max_path_vertices = 16);

enum class CaterpillarStatus { Caterpillar, NotCaterpillar, SearchTruncated };
struct CaterpillarVerdict {
    CaterpillarStatus status;
    std::optional<DefiningSequence> sequence;
    std::optional<BonnetWitness> bonnet;
    std::optional<std::vector<Vertex>> tangled;
};
/// Decides right-caterpillar structure and cross-checks the obstruction route
/// (connected tree, max left degree <= 1, no bonnet, no tangled path) against
/// direct extraction; a disagreement throws.
CaterpillarVerdict is_right_caterpillar_certified(const OrderedGraph& g, int max_path_vertices = 16);

} // namespace oramsey
