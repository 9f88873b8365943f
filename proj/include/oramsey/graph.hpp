#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oramsey {

using Vertex = int; // 1-based
using Edge = std::pair<Vertex, Vertex>; // always u < v

/// Thrown when an input graph or file violates the format contract.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error(what_), line(line_) {}
};

/// An ordered graph on vertices 1..n. The vertex order is the numeric
/// order, the edge list is kept sorted, and two graphs are equal iff
/// they agree as labelled objects (canonical form is the labelling).
class OrderedGraph {
public:
    OrderedGraph() = default;
    OrderedGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    bool has_edge(Vertex u, Vertex v) const;
    int edge_index(Vertex u, Vertex v) const; // -1 when absent

    const std::vector<Vertex>& neighbors_left(Vertex v) const { return left_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& neighbors_right(Vertex v) const { return right_[static_cast<std::size_t>(v)]; }
    int left_degree(Vertex v) const { return static_cast<int>(neighbors_left(v).size()); }
    int right_degree(Vertex v) const { return static_cast<int>(neighbors_right(v).size()); }
    int degree(Vertex v) const { return left_degree(v) + right_degree(v); }
    bool is_isolated(Vertex v) const { return degree(v) == 0; }
    std::vector<Vertex> isolated_vertices() const;

    friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator<(const OrderedGraph& a, const OrderedGraph& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.edges_ < b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> left_, right_; // index 1..n
};

/// Strictly order-preserving injective map witnessing an ordered-subgraph copy.
/// map[i-1] is the host vertex of pattern vertex i.
struct Embedding {
    std::vector<Vertex> map;
    Vertex at(Vertex pattern_vertex) const { return map[static_cast<std::size_t>(pattern_vertex - 1)]; }
};

std::vector<Embedding> find_embeddings(const OrderedGraph& host, const OrderedGraph& pattern,
                                       std::size_t limit = static_cast<std::size_t>(-1));
bool contains_copy(const OrderedGraph& host, const OrderedGraph& pattern);
bool is_valid_embedding(const OrderedGraph& host, const OrderedGraph& pattern, const Embedding& e);

OrderedGraph mirror(const OrderedGraph& g);
Edge mirror_edge(const OrderedGraph& g, Edge e);

OrderedGraph delete_edge(const OrderedGraph& g, Edge e);
OrderedGraph delete_vertex(const OrderedGraph& g, Vertex v); // relabels to 1..n-1
/// Induced subgraph on `keep` (need not be sorted), relabelled to 1..k preserving order.
OrderedGraph induced_subgraph(const OrderedGraph& g, std::vector<Vertex> keep);
/// Same vertex set, edge set restricted by a keep flag per edge index.
OrderedGraph restrict_edges(const OrderedGraph& g, const std::vector<bool>& keep);

// Stock graphs.
OrderedGraph single_vertex();
OrderedGraph complete_graph(int n);
OrderedGraph right_star(int k);    // center 1, leaves 2..k+1
OrderedGraph left_star(int k);     // leaves 1..k, center k+1
OrderedGraph monotone_path(int n); // edges {i,i+1}
OrderedGraph monotone_matching(int blocks);

// Text format: line "n <count>", then one "u v" line per edge, '#' starts a comment.
OrderedGraph parse_graph_text(std::istream& in);
std::string to_text(const OrderedGraph& g);
// Inline DSL: "n=5;e=1-2,2-4" (empty edge list: "n=5" or "n=5;e=").
OrderedGraph parse_graph_dsl(std::string_view s);
std::string to_dsl(const OrderedGraph& g);

} // namespace oramsey
