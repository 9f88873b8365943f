#include "doctest.h"
#include "oramsey/classify.hpp"
#include "oramsey/construct.hpp"
#include "oramsey/density.hpp"
#include "oramsey/refute.hpp"
#include "support/naive.hpp"

using namespace oramsey;

TEST_CASE("forest case classifier on the named pairs") {
    auto p3 = monotone_path(3);
    auto m2 = monotone_matching(2);
    auto v1 = ramsey_forest_case(m2, monotone_path(4));
    CHECK(v1.answer == Answer::Yes);
    CHECK(v1.case_number == 1);

    auto v2 = ramsey_forest_case(p3, p3);
    CHECK(v2.answer == Answer::No);
    CHECK(v2.case_number == 3); // both contain a monotone P3

    // right-star forest against monotone paths
    auto star_forest = union_intervally(right_star(2), right_star(2));
    auto v3 = ramsey_forest_case(star_forest, p3);
    CHECK(v3.answer == Answer::Yes);
    CHECK(v3.case_number == 2);

    // left and right stars mixed force the monotone path case
    auto mixed = union_intervally(right_star(2), left_star(2));
    auto v4 = ramsey_forest_case(mixed, p3);
    CHECK(v4.answer == Answer::Yes);
    CHECK(v4.case_number == 4);

    CHECK(ramsey_forest_case(complete_graph(3), p3).answer == Answer::No);
    CHECK_THROWS_AS(ramsey_forest_case(single_vertex(), p3), std::invalid_argument);
}

TEST_CASE("forest classifier is mirror invariant") {
    oracle::Rng rng(8);
    int done = 0;
    while (done < 150) {
        auto h = oracle::random_forest(rng, 2 + rng.below(5), 80);
        auto hp = oracle::random_forest(rng, 2 + rng.below(5), 80);
        if (h.edge_count() < 1 || hp.edge_count() < 1) continue;
        ++done;
        auto v = ramsey_forest_case(h, hp);
        auto vm = ramsey_forest_case(mirror(h), mirror(hp));
        CHECK(v.answer == vm.answer);
    }
}

TEST_CASE("pseudoforest pair classifier") {
    auto p3 = monotone_path(3);
    CHECK(ramsey_pseudoforest_connected(complete_graph(2), complete_graph(3)).answer == Answer::Yes);
    CHECK(ramsey_pseudoforest_connected(p3, p3).answer == Answer::Yes);
    CHECK(ramsey_pseudoforest_connected(p3, monotone_path(4)).answer == Answer::No);
    // K2 against a tree is a forest-level pair, not a pseudoforest one
    CHECK(ramsey_pseudoforest_connected(complete_graph(2), p3).answer == Answer::No);
    CHECK_THROWS_AS(ramsey_pseudoforest_connected(monotone_matching(2), p3), std::invalid_argument);
}

TEST_CASE("pseudoforest classifier yes is witnessed by the chord construction") {
    auto p3 = monotone_path(3);
    REQUIRE(ramsey_pseudoforest_connected(p3, p3).answer == Answer::Yes);
    auto host = build_pseudoforest_ramsey_monp3();
    CHECK(host.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    CHECK(density_m(host) == DensityValue(1, 1));
    CHECK(arrows(host, p3, p3).verdict == ArrowVerdict::Arrows);
}

TEST_CASE("connected finiteness characterization") {
    CHECK(ramsey_finite_connected(right_star(5)).answer == Answer::Yes);
    CHECK(ramsey_finite_connected(left_star(3)).answer == Answer::Yes);
    CHECK(ramsey_finite_connected(monotone_path(3)).answer == Answer::No);
    CHECK(ramsey_finite_connected(complete_graph(3)).answer == Answer::No);
    CHECK(ramsey_finite_connected(complete_graph(2)).answer == Answer::Yes);
}

TEST_CASE("structural finiteness filter") {
    auto mixed = union_intervally(right_star(2), left_star(2));
    CHECK(ramsey_finite_structural_filter(mixed).answer == Answer::No);
    auto right_forest = union_intervally(right_star(2), right_star(3));
    CHECK(ramsey_finite_structural_filter(right_forest).answer == Answer::Unknown);
    CHECK(ramsey_finite_structural_filter(complete_graph(3)).answer == Answer::No);
    // monotone P3 components are exempt
    auto with_p3 = union_intervally(monotone_path(3), right_star(2));
    CHECK(ramsey_finite_structural_filter(with_p3).answer == Answer::Unknown);
    auto with_path = union_intervally(monotone_path(4), right_star(2));
    CHECK(ramsey_finite_structural_filter(with_path).answer == Answer::No);
}

TEST_CASE("star caterpillar verdicts") {
    auto s2 = right_star(2);
    auto check = [&](std::vector<int> d, Answer expect) {
        DefiningSequence seq{std::move(d)};
        auto v = caterpillar_pair_verdict(s2, build_caterpillar(seq));
        CHECK(v.applicable);
        CHECK(v.answer == expect);
    };
    check({1, 2, 3}, Answer::Yes);
    check({2, 1, 1}, Answer::No);
    check({2, 1, 2}, Answer::Unknown);
    check({3}, Answer::Yes);
    check({2, 1}, Answer::Yes);

    // mirrored orientation
    DefiningSequence d{{2, 1, 1}};
    auto v = caterpillar_pair_verdict(left_star(2), mirror(build_caterpillar(d)));
    CHECK(v.applicable);
    CHECK(v.answer == Answer::No);

    CHECK(!caterpillar_pair_verdict(monotone_path(3), build_caterpillar(d)).applicable);
    CHECK(!caterpillar_pair_verdict(right_star(2), left_star(3)).applicable);
    // a single edge star is always finite
    CHECK(caterpillar_pair_verdict(complete_graph(2), build_caterpillar(d)).answer == Answer::Yes);
}

TEST_CASE("monotone matching finiteness") {
    CHECK(monotone_matching_finite(complete_graph(3), monotone_matching(2)).answer == Answer::Yes);
    CHECK(monotone_matching_finite(complete_graph(2), complete_graph(5)).answer == Answer::Yes);
    auto padded = OrderedGraph(5, {{1, 2}, {3, 4}});
    CHECK(monotone_matching_finite(padded, monotone_matching(2)).answer == Answer::Unknown);
    CHECK(monotone_matching_finite(monotone_matching(2), monotone_matching(2)).answer == Answer::Yes);
    // the crossing matching is not monotone
    CHECK(monotone_matching_finite(parse_graph_dsl("n=4;e=1-3,2-4"), complete_graph(3)).answer ==
          Answer::Unknown);
}

TEST_CASE("verdicts stay stable under mirroring") {
    oracle::Rng rng(12);
    for (int t = 0; t < 80; ++t) {
        auto h = oracle::random_graph(rng, 1 + rng.below(6), 45);
        CHECK(ramsey_finite_structural_filter(h).answer ==
              ramsey_finite_structural_filter(mirror(h)).answer);
        if (h.edge_count() >= 1 && is_connected(h))
            CHECK(ramsey_finite_connected(h).answer == ramsey_finite_connected(mirror(h)).answer);
    }
}
