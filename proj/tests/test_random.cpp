#include "doctest.h"
#include "oramsey/random.hpp"
#include "support/naive.hpp"

using namespace oramsey;

TEST_CASE("gnp degenerate probabilities") {
    CHECK(sample_gnp(6, 0.0, 42).edge_count() == 0);
    CHECK(sample_gnp(6, 1.0, 42) == complete_graph(6));
}

TEST_CASE("gnp is deterministic in the seed") {
    auto a = sample_gnp(9, 0.37, 1234567);
    auto b = sample_gnp(9, 0.37, 1234567);
    CHECK(a == b);
    auto c = sample_gnp(9, 0.37, 7654321);
    CHECK(a.vertex_count() == c.vertex_count());
}

TEST_CASE("gnp edge count matches the binomial mean") {
    double total = 0;
    const int samples = 10000;
    for (int t = 0; t < samples; ++t) total += sample_gnp(6, 0.5, 90000 + static_cast<std::uint64_t>(t)).edge_count();
    double mean = total / samples;
    CHECK(mean > 7.3);
    CHECK(mean < 7.7);
}

TEST_CASE("threshold scan columns and determinism") {
    ThresholdExperiment exp;
    exp.h = monotone_path(3);
    exp.n = 8;
    exp.p_grid = {0.0, 0.3, 1.0};
    exp.trials = 40;
    exp.seed = 99;
    auto rows = run_threshold_scan(exp);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].arrows == 0);          // empty graphs arrow nothing with an edge
    CHECK(rows[2].arrows == rows[2].trials); // complete graph of order 8 arrows
    for (const auto& r : rows) CHECK(r.arrows + r.not_arrows + r.unknown == r.trials);

    auto again = run_threshold_scan(exp);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].arrows == again[i].arrows);
        CHECK(rows[i].not_arrows == again[i].not_arrows);
        CHECK(rows[i].unknown == again[i].unknown);
    }
    // parallel workers give the identical table
    auto parallel = run_threshold_scan(exp, ArrowOptions{}, 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].arrows == parallel[i].arrows);
        CHECK(rows[i].not_arrows == parallel[i].not_arrows);
    }
}

TEST_CASE("csv serialization") {
    std::vector<ScanRow> rows{{0.25, 10, 3, 7, 0}};
    CHECK(to_csv(rows) == "p,trials,arrows,not_arrows,unknown\n0.25,10,3,7,0\n");
}

TEST_CASE("statistical monotonicity at desk scale") {
    ThresholdExperiment exp;
    exp.h = monotone_path(3);
    exp.n = 10;
    exp.p_grid = {0.2, 0.9};
    exp.trials = 60;
    exp.seed = 2024;
    auto rows = run_threshold_scan(exp, ArrowOptions{}, 2);
    double f_low = static_cast<double>(rows[0].arrows) / rows[0].trials;
    double f_high = static_cast<double>(rows[1].arrows) / rows[1].trials;
    CHECK(f_high >= f_low - 0.05);
}
