#include "doctest.h"
#include "oramsey/graph.hpp"
#include "support/naive.hpp"

#include <sstream>

using namespace oramsey;

TEST_CASE("construction canonicalizes and validates") {
    OrderedGraph g(4, {{3, 1}, {2, 4}});
    CHECK(g.edges() == std::vector<Edge>{{1, 3}, {2, 4}});
    CHECK_THROWS_AS(OrderedGraph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("adjacency views") {
    auto g = parse_graph_dsl("n=5;e=1-3,2-3,3-5");
    CHECK(g.neighbors_left(3) == std::vector<Vertex>{1, 2});
    CHECK(g.neighbors_right(3) == std::vector<Vertex>{5});
    CHECK(g.degree(3) == 3);
    CHECK(g.isolated_vertices() == std::vector<Vertex>{4});
}

TEST_CASE("embeddings: monotone P3 into K3 and into the crossing pair") {
    auto p3 = monotone_path(3);
    CHECK(!find_embeddings(complete_graph(3), p3).empty());
    auto g = parse_graph_dsl("n=3;e=1-3,2-3");
    CHECK(find_embeddings(g, p3).empty());
}

TEST_CASE("embeddings: identity always present") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_graph(rng, 2 + rng.below(5), 50);
        auto embs = find_embeddings(g, g);
        bool has_identity = false;
        for (const auto& e : embs) {
            bool id = true;
            for (std::size_t i = 0; i < e.map.size(); ++i)
                if (e.map[i] != static_cast<Vertex>(i) + 1) id = false;
            if (id) has_identity = true;
        }
        CHECK(has_identity);
    }
}

TEST_CASE("embeddings track isolated pattern vertices") {
    // pattern: edge 1-2 plus isolated vertex 3; host K2 has nowhere to put vertex 3
    OrderedGraph pattern(3, {{1, 2}});
    CHECK(find_embeddings(complete_graph(2), pattern).empty());
    CHECK(!find_embeddings(parse_graph_dsl("n=3;e=1-2"), pattern).empty());
    // the isolated vertex must sit to the right of the edge
    CHECK(find_embeddings(parse_graph_dsl("n=3;e=2-3"), pattern).empty());
}

TEST_CASE("embeddings agree with the oracle check") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto host = oracle::random_graph(rng, 2 + rng.below(6), 40);
        auto pattern = oracle::random_graph(rng, 2 + rng.below(3), 60);
        CHECK(contains_copy(host, pattern) == oracle::has_copy(host, pattern));
    }
}

TEST_CASE("mirror is an involution and maps star orientation") {
    CHECK(mirror(right_star(2)) == left_star(2));
    CHECK(mirror(monotone_path(3)) == monotone_path(3));
    oracle::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_graph(rng, 1 + rng.below(7), 50);
        CHECK(mirror(mirror(g)) == g);
        CHECK(mirror(g).edge_count() == g.edge_count());
    }
}

TEST_CASE("monotonicity of containment under sub-patterns") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto host = oracle::random_graph(rng, 3 + rng.below(4), 60);
        auto pattern = oracle::random_graph(rng, 2 + rng.below(3), 60);
        if (pattern.edge_count() == 0 || !contains_copy(host, pattern)) continue;
        auto smaller = delete_edge(pattern, pattern.edges().front());
        CHECK(contains_copy(host, smaller));
    }
}

TEST_CASE("text format round trip and error reporting") {
    auto g = parse_graph_dsl("n=5;e=1-2,2-4");
    std::istringstream in(to_text(g));
    CHECK(parse_graph_text(in) == g);

    std::istringstream bad("n 3\n3 1\n");
    CHECK_THROWS_AS(parse_graph_text(bad), ParseError);
    std::istringstream comment("# heading\nn 2\n1 2 # the only edge\n");
    CHECK(parse_graph_text(comment) == complete_graph(2));
    try {
        std::istringstream b2("n 2\n1 5\n");
        parse_graph_text(b2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("dsl round trip") {
    for (const char* s : {"n=1", "n=5;e=1-2,2-4", "n=3;e=1-2,1-3,2-3"}) {
        auto g = parse_graph_dsl(s);
        CHECK(parse_graph_dsl(to_dsl(g)) == g);
    }
    CHECK_THROWS_AS(parse_graph_dsl("e=1-2"), ParseError);
}

TEST_CASE("vertex and edge deletion") {
    auto g = parse_graph_dsl("n=4;e=1-2,2-3,3-4");
    CHECK(delete_edge(g, {2, 3}) == parse_graph_dsl("n=4;e=1-2,3-4"));
    CHECK(delete_vertex(g, 2) == parse_graph_dsl("n=3;e=2-3"));
    CHECK(induced_subgraph(g, {2, 3, 4}) == parse_graph_dsl("n=3;e=1-2,2-3"));
}
