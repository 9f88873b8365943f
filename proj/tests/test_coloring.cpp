#include "doctest.h"
#include "oramsey/coloring.hpp"
#include "oramsey/structure.hpp"
#include "support/naive.hpp"

#include <sstream>

using namespace oramsey;

TEST_CASE("coloring text round trip") {
    auto g = parse_graph_dsl("n=4;e=1-2,2-3,2-4");
    EdgeColoring c(g, {Color::Red, Color::Blue, Color::Red});
    CHECK(to_text(c) == "1 2 R\n2 3 B\n2 4 R\n");
    std::istringstream in(to_text(c));
    auto back = parse_coloring_text(g, in);
    CHECK(back.color == c.color);
    std::istringstream missing("1 2 R\n");
    CHECK_THROWS_AS(parse_coloring_text(g, missing), ParseError);
}

TEST_CASE("star coloring on stars and paths") {
    auto s2 = right_star(2);
    auto c = star_coloring(s2, 1);
    CHECK(c.at(1, 2) == Color::Red);
    CHECK(c.at(1, 3) == Color::Red);

    auto p4 = monotone_path(4);
    auto cp = star_coloring(p4, 1);
    CHECK(cp.at(1, 2) == Color::Red);
    CHECK(cp.at(2, 3) == Color::Blue);
    CHECK(cp.at(3, 4) == Color::Red);
}

TEST_CASE("star coloring facts on random trees and forests") {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        auto f = trial % 2 ? oracle::random_tree(rng, 2 + rng.below(11))
                           : oracle::random_forest(rng, 2 + rng.below(11), 70);
        Vertex root = 1 + rng.below(f.vertex_count());
        CHECK(star_coloring_ok(star_coloring(f, root), root));
    }
}

TEST_CASE("bipartite coloring has no monochromatic monotone P3 on proper partitions") {
    auto p3 = monotone_path(3);
    std::vector<bool> in_a{false, true, false, true};
    auto c = bipartite_coloring(p3, in_a);
    CHECK(c.at(1, 2) == Color::Red);
    CHECK(c.at(2, 3) == Color::Blue);
    CHECK(bipartite_coloring_ok(c));

    oracle::Rng rng(32);
    for (int trial = 0; trial < 500; ++trial) {
        auto f = oracle::random_forest(rng, 2 + rng.below(10), 80);
        auto part = proper_bipartition(f);
        REQUIRE(part.has_value());
        CHECK(bipartite_coloring_ok(bipartite_coloring(f, *part)));
    }
}

TEST_CASE("single edge with both endpoints in A is red") {
    auto k2 = complete_graph(2);
    auto c = bipartite_coloring(k2, {false, true, true});
    CHECK(c.at(1, 2) == Color::Red);
}

TEST_CASE("bend coloring small cases") {
    // edge (v,u) with v<u and root u is red
    auto k2 = complete_graph(2);
    CHECK(bend_coloring(k2, 2).at(1, 2) == Color::Red);
    CHECK(bend_coloring(k2, 1).at(1, 2) == Color::Blue);

    // monotone P3 rooted at its first vertex: both edges blue
    auto p3 = monotone_path(3);
    auto c = bend_coloring(p3, 1);
    CHECK(c.at(1, 2) == Color::Blue);
    CHECK(c.at(2, 3) == Color::Blue);

    // star with center u: edges into u red, the rest by the bend rule
    auto s = parse_graph_dsl("n=4;e=1-3,2-3,3-4"); // center 3
    auto cs = bend_coloring(s, 3);
    CHECK(cs.at(1, 3) == Color::Red);
    CHECK(cs.at(2, 3) == Color::Red);
    CHECK(cs.at(3, 4) == Color::Blue);
    CHECK(bend_coloring_ok(cs));
    CHECK_THROWS_AS(bend_coloring(parse_graph_dsl("n=4;e=1-2,3-4"), 1), std::invalid_argument);
}

TEST_CASE("bend coloring facts for random trees and all roots") {
    oracle::Rng rng(33);
    for (int trial = 0; trial < 700; ++trial) {
        auto f = oracle::random_tree(rng, 2 + rng.below(9));
        for (Vertex root = 1; root <= f.vertex_count(); ++root)
            CHECK(bend_coloring_ok(bend_coloring(f, root)));
    }
}

TEST_CASE("monochromatic copy search sees colors") {
    auto p4 = monotone_path(4);
    EdgeColoring c(p4, {Color::Red, Color::Red, Color::Blue});
    CHECK(has_monochromatic_copy(c, monotone_path(3), Color::Red));
    CHECK(!has_monochromatic_copy(c, monotone_path(3), Color::Blue));
    CHECK(has_monochromatic_copy(c, complete_graph(2), Color::Blue));
    auto sw = c.swapped();
    CHECK(has_monochromatic_copy(sw, monotone_path(3), Color::Blue));
}

TEST_CASE("proper bipartition honors pins and rejects conflicts") {
    auto p4 = monotone_path(4);
    std::vector<std::optional<bool>> pin(5);
    pin[1] = true;
    pin[3] = true;
    auto part = proper_bipartition(p4, pin);
    REQUIRE(part.has_value());
    CHECK((*part)[1]);
    CHECK((*part)[3]);
    pin[3] = false; // vertices 1 and 3 sit at even distance, so this cannot work
    CHECK(!proper_bipartition(p4, pin).has_value());
    CHECK(!proper_bipartition(complete_graph(3)).has_value());
}
