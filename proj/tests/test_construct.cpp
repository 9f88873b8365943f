#include "doctest.h"
#include "oramsey/classify.hpp"
#include "oramsey/construct.hpp"
#include "oramsey/density.hpp"
#include "oramsey/refute.hpp"
#include "support/naive.hpp"

using namespace oramsey;

TEST_CASE("combinator algebra") {
    CHECK(union_intervally(complete_graph(2), complete_graph(2)) == monotone_matching(2));
    CHECK(concatenate(complete_graph(2), complete_graph(2)) == monotone_path(3));
    auto hung = hang(1, 2, complete_graph(2));
    CHECK(hung.vertex_count() == 6);
    CHECK(hung.edge_count() == 5);
    CHECK(hang(0, 1, right_star(2)).vertex_count() == 4);

    oracle::Rng rng(3);
    for (int t = 0; t < 60; ++t) {
        auto a = oracle::random_graph(rng, 1 + rng.below(5), 50);
        auto b = oracle::random_graph(rng, 1 + rng.below(5), 50);
        auto u = union_intervally(a, b);
        CHECK(u.vertex_count() == a.vertex_count() + b.vertex_count());
        CHECK(u.edge_count() == a.edge_count() + b.edge_count());
        auto c = concatenate(a, b);
        CHECK(c.vertex_count() == a.vertex_count() + b.vertex_count() - 1);
        CHECK(c.edge_count() == a.edge_count() + b.edge_count());
    }
}

TEST_CASE("caterpillar builder round trip") {
    CHECK(build_caterpillar(DefiningSequence{{1, 1}}) == monotone_path(3));
    CHECK(build_caterpillar(DefiningSequence{{3}}) == right_star(3));
    oracle::Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        DefiningSequence d;
        int len = 1 + rng.below(4);
        for (int k = 0; k < len; ++k) d.d.push_back(1 + rng.below(3));
        auto g = build_caterpillar(d);
        auto back = extract_defining_sequence(g);
        REQUIRE(back.has_value());
        CHECK(back->d == d.d);
    }
}

TEST_CASE("caterpillar prefixes and suffixes") {
    DefiningSequence d{{2, 1, 3}};
    CHECK(caterpillar_prefix(d, 0) == single_vertex());
    CHECK(caterpillar_prefix(d, 1) == right_star(2));
    CHECK(caterpillar_prefix(d, 3) == build_caterpillar(d));
    CHECK(caterpillar_suffix(d, 3, 4) == single_vertex());
    CHECK(caterpillar_suffix(d, 3, 3) == right_star(3));
    CHECK(caterpillar_suffix(d, 3, 1) == build_caterpillar(d));
}

TEST_CASE("the five-vertex pseudoforest host") {
    auto host = build_pseudoforest_ramsey_monp3();
    CHECK(host.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    CHECK(density_m(host) == DensityValue(1, 1));
    auto p3 = monotone_path(3);
    CHECK(arrows(host, p3, p3).verdict == ArrowVerdict::Arrows);
    CHECK(oracle::naive_arrows(host, p3, p3));
}

TEST_CASE("forest builder covers the characterized pairs") {
    auto p3 = monotone_path(3);
    // partial matchings
    auto m2 = monotone_matching(2);
    auto b1 = build_forest_ramsey(m2, m2);
    REQUIRE(b1.status == BuildStatus::Ok);
    CHECK(b1.case_number == 1);
    CHECK(is_forest(b1.graph));
    CHECK(classify_structure(b1.graph).is_partial_matching); // matching in, matching out

    // star forest against a monotone path
    auto b2 = build_forest_ramsey(right_star(2), p3);
    REQUIRE(b2.status == BuildStatus::Ok);
    CHECK(is_forest(b2.graph));
    if (b2.verify_attempted) CHECK(b2.verified);
    CHECK(arrows(b2.graph, right_star(2), p3).verdict == ArrowVerdict::Arrows);

    // not covered: both sides contain a monotone P3
    CHECK(build_forest_ramsey(p3, p3).status == BuildStatus::NotCovered);
}

TEST_CASE("forest builder on swapped and mirrored orientations") {
    auto p3 = monotone_path(3);
    auto b = build_forest_ramsey(p3, left_star(2));
    REQUIRE(b.status == BuildStatus::Ok);
    CHECK(is_forest(b.graph));
    CHECK(arrows(b.graph, p3, left_star(2)).verdict == ArrowVerdict::Arrows);

    auto pad = OrderedGraph(3, {{1, 2}}); // isolated vertex on the right
    auto bp = build_forest_ramsey(pad, right_star(2));
    REQUIRE(bp.status == BuildStatus::Ok);
    CHECK(arrows(bp.graph, pad, right_star(2)).verdict == ArrowVerdict::Arrows);
}

TEST_CASE("determiner shapes from the recursion") {
    DeterminerSpec one{2, DefiningSequence{{1}}, 1, 0};
    CHECK(left_determiner(one) == right_star(2));
    DeterminerSpec two{2, DefiningSequence{{2}}, 1, 0};
    CHECK(left_determiner(two) == right_star(3));
    DeterminerSpec stacked{2, DefiningSequence{{1, 1}}, 2, 0};
    auto d = left_determiner(stacked);
    CHECK(d.vertex_count() == 7);
    CHECK(d == hang(0, 2, right_star(2)));
    DeterminerSpec base{2, DefiningSequence{{1, 1}}, 2, 3};
    CHECK(right_determiner(base) == single_vertex());
    DeterminerSpec rspec{2, DefiningSequence{{1, 1}}, 2, 2};
    auto r = right_determiner(rspec);
    CHECK(r.vertex_count() == 5);
    CHECK(r.edge_count() == 4);
}

TEST_CASE("good colorings self-verify") {
    for (int i = 0; i <= 2; ++i) {
        DeterminerSpec spec{2, DefiningSequence{{1, 1, 1}}, i, 0};
        auto det = left_determiner(spec);
        CHECK_NOTHROW(good_coloring_of(det, spec, Side::Left));
    }
    DeterminerSpec spec{2, DefiningSequence{{2, 1}}, 2, 0};
    CHECK_NOTHROW(good_coloring_of(left_determiner(spec), spec, Side::Left));
    DeterminerSpec rspec{2, DefiningSequence{{1, 1}}, 2, 2};
    CHECK_NOTHROW(good_coloring_of(right_determiner(rspec), rspec, Side::Right));
    DeterminerSpec rspec2{3, DefiningSequence{{2, 1, 1}}, 3, 2};
    CHECK_NOTHROW(good_coloring_of(right_determiner(rspec2), rspec2, Side::Right));
}

TEST_CASE("determiner verification accepts the constructions") {
    for (auto dvec : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 1}}) {
        DeterminerSpec spec{2, DefiningSequence{dvec}, static_cast<int>(dvec.size()), 0};
        auto det = left_determiner(spec);
        auto check = verify_determiner(det, spec, Side::Left);
        CHECK(check.ok);
    }
    DeterminerSpec rbase{2, DefiningSequence{{1, 1}}, 2, 3};
    CHECK(verify_determiner(right_determiner(rbase), rbase, Side::Right).ok);
    DeterminerSpec rrec{2, DefiningSequence{{1, 1}}, 2, 2};
    CHECK(verify_determiner(right_determiner(rrec), rrec, Side::Right).ok);
}

TEST_CASE("determiner verification rejects an undersized star") {
    // a right star with one edge too few is no left determiner
    DeterminerSpec spec{2, DefiningSequence{{1}}, 1, 0};
    auto too_small = right_star(1);
    auto check = verify_determiner(too_small, spec, Side::Left);
    CHECK(!check.ok);
    CHECK(!check.budget_exceeded);
}

TEST_CASE("gamma chain structure and counts") {
    DefiningSequence d{{2, 1, 1}};
    auto g1 = build_gamma_n(2, d, 1, 1, 1);
    auto g2 = build_gamma_n(2, d, 1, 2, 1);
    CHECK(g2.graph.vertex_count() - g1.graph.vertex_count() == g1.block_vertices - 1);
    CHECK(g1.dashed.size() == 2);
    CHECK(g2.dashed.size() == 3);
    for (const auto& [u, v] : g1.dashed) CHECK(g1.graph.has_edge(u, v));
    CHECK_THROWS_AS(build_gamma_n(2, DefiningSequence{{1, 1, 1}}, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("fn chain structure and counts") {
    DefiningSequence d{{1, 2, 1}}; // d_2 = 2 > d_3 = 1 at j = 3
    auto f1 = build_f_n(2, d, 3, 1);
    CHECK(f1.gammas.size() == 2);
    CHECK(static_cast<int>(f1.u_set.size()) == 2 - 1); // d_{j-1} - d_j
    CHECK(static_cast<int>(f1.w_set.size()) == 2 - 1); // |E(H)| - 1
    for (Vertex u : f1.u_set)
        CHECK(f1.graph.has_edge(f1.gammas[0], u));
    for (Vertex w : f1.w_set)
        CHECK(f1.graph.has_edge(f1.gammas[0], w));
    // the chain grows by one block per step
    auto f2 = build_f_n(2, d, 3, 2);
    CHECK(f2.gammas.size() == 3);
    CHECK_THROWS_AS(build_f_n(2, DefiningSequence{{1, 1, 2}}, 3, 1), std::invalid_argument);
}

TEST_CASE("family level one and two for the smallest parameters") {
    DefiningSequence d{{1, 1}};
    auto level1 = family_fj(2, d, 1, 7);
    REQUIRE(level1.members.size() == 1);
    CHECK(level1.members.front() == right_star(2));
    auto level1_wide = family_fj(2, DefiningSequence{{2}}, 1, 7);
    REQUIRE(level1_wide.members.size() == 1);
    CHECK(level1_wide.members.front() == right_star(3));

    auto level2 = family_fj(2, d, 2, 7);
    CHECK(level2.complete);
    CHECK(!level2.members.empty());
    auto p3 = monotone_path(3);
    auto s2 = right_star(2);
    for (const auto& m : level2.members) {
        // leftmost vertex has degree s + d_2 - 1 = 2
        CHECK(m.right_degree(1) == 2);
        CHECK(m.left_degree(1) == 0);
        // every member arrows (S2, monotone P3) with the blue copy at its left end
        CHECK(arrows_with_blue_anchor(m, s2, p3, 1).verdict == ArrowVerdict::Arrows);
    }
}

TEST_CASE("family members at the smallest parameters are minimal hosts") {
    DefiningSequence d{{1, 1}};
    auto level2 = family_fj(2, d, 2, 6);
    auto p3 = monotone_path(3);
    auto s2 = right_star(2);
    for (const auto& m : level2.members) {
        auto cert = is_minimal_ramsey(m, s2, p3);
        CHECK(cert.base == ArrowVerdict::Arrows);
        CHECK(cert.is_minimal);
    }
}

TEST_CASE("grid family for two matchings") {
    auto k2 = complete_graph(2);
    std::vector<std::vector<std::vector<OrderedGraph>>> grid(2);
    for (auto& row : grid) row.assign(2, {k2});
    auto fam = family_fst(grid);
    CHECK(fam.complete);
    CHECK(!fam.members.empty());
    auto m2 = monotone_matching(2);
    for (const auto& m : fam.members) {
        CHECK(arrows(m, m2, m2).verdict == ArrowVerdict::Arrows);
    }
    // the degenerate one-cell grid is the cell itself
    std::vector<std::vector<std::vector<OrderedGraph>>> single(1);
    single[0].assign(1, {right_star(3)});
    auto fam1 = family_fst(single);
    REQUIRE(fam1.members.size() == 1);
    CHECK(fam1.members.front() == right_star(3));
}

TEST_CASE("level coloring refutes family-free hosts") {
    DefiningSequence d2{{2}};
    auto hc = canonical_h_coloring(right_star(2), 2, d2);
    REQUIRE(hc.ok);
    CHECK(!has_monochromatic_copy(*hc.coloring, right_star(2), Color::Red));
    CHECK(!has_monochromatic_copy(*hc.coloring, right_star(2), Color::Blue));

    // a host containing the level-1 member is rejected with a witness
    auto bad = canonical_h_coloring(right_star(3), 2, d2);
    CHECK(!bad.ok);
    REQUIRE(bad.violating_embedding.has_value());
    REQUIRE(bad.violating_member.has_value());
    CHECK(is_valid_embedding(right_star(3), *bad.violating_member, *bad.violating_embedding));
}

TEST_CASE("level coloring at three levels uses neighbor gaps") {
    // d nondecreasing with three levels; the coloring must stay verified on
    // every family-free host at small scale
    DefiningSequence d{{1, 1, 2}};
    oracle::Rng rng(91);
    int done = 0;
    while (done < 120) {
        auto f = oracle::random_graph(rng, 3 + rng.below(5), 40 + rng.below(40));
        auto hc = canonical_h_coloring(f, 2, d);
        if (!hc.ok) continue;
        ++done; // self-verified inside; reaching here without a throw is the test
    }
    CHECK(done == 120);
}

TEST_CASE("anchor sets match the enumerated family") {
    DefiningSequence d{{1, 1}};
    oracle::Rng rng(77);
    auto members = family_fj(2, d, 2, 6).members;
    int done = 0;
    while (done < 60) {
        auto f = oracle::random_graph(rng, 2 + rng.below(5), 50);
        ++done;
        auto anchors = family_anchor_set(f, 2, d, 2);
        std::vector<bool> by_family(static_cast<std::size_t>(f.vertex_count()) + 1, false);
        for (const auto& m : members)
            for (const auto& emb : find_embeddings(f, m))
                by_family[static_cast<std::size_t>(emb.map.front())] = true;
        for (Vertex v = 1; v <= f.vertex_count(); ++v) CHECK(anchors[static_cast<std::size_t>(v)] == by_family[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("level coloring gap rule counts neighbors, not positions") {
    // the leftmost vertex has two far anchors but no intermediate neighbor, so
    // both of its edges must stay blue under the three-or-more level rule
    auto f = parse_graph_dsl("n=10;e=1-3,1-4,3-5,3-6,4-5,4-6,5-7,5-8,6-9,6-10");
    DefiningSequence d{{1, 1, 2}};
    auto hc = canonical_h_coloring(f, 2, d);
    REQUIRE(hc.ok); // self-verified: no red star, no blue three-segment caterpillar
    CHECK(hc.coloring->at(1, 3) == Color::Blue);
}

TEST_CASE("smallest fn chain instance arrows its pair and needs the chain edge") {
    DefiningSequence d{{1, 2, 1}};
    auto f1 = build_f_n(2, d, 3, 1);
    auto target = build_caterpillar(d);
    auto s2 = right_star(2);
    CHECK(arrows(f1.graph, s2, target).verdict == ArrowVerdict::Arrows);
    auto trimmed = delete_edge(f1.graph, {f1.gammas[0], f1.gammas[1]});
    CHECK(arrows(trimmed, s2, target).verdict == ArrowVerdict::NotArrows);
}

TEST_CASE("smallest gamma instance arrows its pair with the drop-position tail") {
    DefiningSequence d{{2, 1, 1}};
    auto g1 = build_gamma_n(2, d, 1, 1, 1);
    auto target = build_caterpillar(d);
    auto s2 = right_star(2);
    CHECK(arrows(g1.graph, s2, target).verdict == ArrowVerdict::Arrows);
}
