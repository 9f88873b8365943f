#include "doctest.h"
#include "oramsey/density.hpp"
#include "support/naive.hpp"

using namespace oramsey;

TEST_CASE("densities of named graphs") {
    CHECK(density_m(complete_graph(3)) == DensityValue(1, 1));
    CHECK(density_m2(complete_graph(3)) == DensityValue(2, 1));
    CHECK(density_m(monotone_path(4)) == DensityValue(3, 4));
    // partial matching with at least two edges has 2-density 1/2
    CHECK(density_m2(monotone_matching(2)) == DensityValue(1, 2));
    CHECK(density_m2(monotone_matching(4)) == DensityValue(1, 2));
    // forests that are not partial matchings have 2-density 1
    CHECK(density_m2(monotone_path(4)) == DensityValue(1, 1));
    CHECK(density_m2(right_star(3)) == DensityValue(1, 1));
    CHECK(density_m(complete_graph(5)) == DensityValue(2, 1));
}

TEST_CASE("m2 preconditions and the single-edge convention") {
    CHECK_THROWS_AS(density_m2(complete_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(density_m2(single_vertex()), std::invalid_argument);
    auto total = density_m2_total(complete_graph(2));
    CHECK(total.value == DensityValue(1, 2));
    CHECK(total.by_convention);
    CHECK(!density_m2_total(monotone_path(3)).by_convention);
}

TEST_CASE("asymmetric 2-density") {
    // m2(K3)=2; for H''=K3 itself: 3/(3-2+1/2) = 2
    CHECK(density_m2_asym(complete_graph(3), complete_graph(3)) == DensityValue(2, 1));
    // single-edge side goes through the convention: 1/(0+1/2) = 2
    CHECK(density_m2_asym(complete_graph(3), complete_graph(2)) == DensityValue(2, 1));
    CHECK_THROWS_AS(density_m2_asym(monotone_matching(2), complete_graph(3)), std::invalid_argument);
}

TEST_CASE("densities agree with the unoptimized oracle") {
    oracle::Rng rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(rng, 1 + rng.below(8), 15 + rng.below(70));
        auto m = density_m(g);
        auto om = oracle::naive_density_m(g);
        CHECK(m.num * om.den == om.num * m.den);
        if (g.edge_count() >= 2) {
            auto m2 = density_m2(g);
            auto om2 = oracle::naive_density_m2(g);
            REQUIRE(om2.has_value());
            CHECK(m2.num * om2->den == om2->num * m2.den);
        }
    }
}

TEST_CASE("mirror preserves densities") {
    oracle::Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, 1 + rng.below(7), 50);
        CHECK(density_m(g) == density_m(mirror(g)));
        if (g.edge_count() >= 2) CHECK(density_m2(g) == density_m2(mirror(g)));
    }
}

TEST_CASE("density cap is enforced") {
    CHECK_THROWS_AS(density_m(OrderedGraph(kDensityVertexCap + 1, {})), std::invalid_argument);
}
