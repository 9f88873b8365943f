#pragma once

#include "oramsey/graph.hpp"

#include <optional>

namespace oramsey {

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

/// Total red/blue assignment on the edges of a host graph.
struct EdgeColoring {
    OrderedGraph host;
    std::vector<Color> color; // aligned with host.edges()

    EdgeColoring() = default;
    EdgeColoring(OrderedGraph h, std::vector<Color> c);

    Color at(int edge_index) const { return color[static_cast<std::size_t>(edge_index)]; }
    Color at(Vertex u, Vertex v) const;
    EdgeColoring swapped() const;
};

/// One line per edge, "u v R|B", lexicographic edge order.
std::string to_text(const EdgeColoring& c);
EdgeColoring parse_coloring_text(const OrderedGraph& host, std::istream& in);

/// Subgraph of the host on all n vertices keeping only edges of the given color.
OrderedGraph color_class(const EdgeColoring& c, Color which);

std::optional<Embedding> find_monochromatic_copy(const EdgeColoring& c, const OrderedGraph& pattern,
                                                 Color which);
bool has_monochromatic_copy(const EdgeColoring& c, const OrderedGraph& pattern, Color which);

// ---- the stock colorings ----

/// Red iff the edge's distance to the root of its component is odd. The root is
/// u in u's component and the leftmost vertex elsewhere.
EdgeColoring star_coloring(const OrderedGraph& f, Vertex u);

/// Red iff the left endpoint lies in A. in_a has size n+1, indexed by vertex.
EdgeColoring bipartite_coloring(const OrderedGraph& f, const std::vector<bool>& in_a);

/// For a tree f: red iff the edge ends at u on the right, or it forms a bend with
/// the next edge on its path to u.
EdgeColoring bend_coloring(const OrderedGraph& f, Vertex u);
/// Forest variant: bend-color each component with respect to a root, u in its own
/// component and the leftmost vertex elsewhere.
EdgeColoring bend_coloring_forest(const OrderedGraph& f, Vertex u);

// ---- validators for the guarantees the stock colorings carry ----

bool star_coloring_ok(const EdgeColoring& c, Vertex u);   // mono components are stars, edges at u red
bool bipartite_coloring_ok(const EdgeColoring& c);        // no monochromatic monotone P3
bool bend_coloring_ok(const EdgeColoring& c);             // no red monotone P3, blue components one-sided

/// Proper 2-coloring of a forest/bipartite graph by BFS; pin[v] (optional) forces sides.
/// Returns nullopt when the pins conflict or the graph is not bipartite.
std::optional<std::vector<bool>> proper_bipartition(const OrderedGraph& g,
                                                    const std::vector<std::optional<bool>>& pin = {});

} // namespace oramsey
