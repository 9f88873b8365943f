#pragma once

#include "oramsey/arrow.hpp"

#include <cstdint>

namespace oramsey {

/// Counter-based generator step: the edge (u, v) of a sample is present iff
/// mix(seed, u, v) falls below the probability threshold, so a sample is a pure
/// function of (n, p, seed) on every platform.
std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c);

OrderedGraph sample_gnp(int n, double p, std::uint64_t seed);

struct ThresholdExperiment {
    OrderedGraph h;
    int n = 0;
    std::vector<double> p_grid;
    int trials = 1;
    std::uint64_t seed = 0;
};

struct ScanRow {
    double p = 0;
    int trials = 0;
    int arrows = 0;
    int not_arrows = 0;
    int unknown = 0; // budget-exhausted samples, reported separately
};

/// Per grid point: the arrow frequency of (G(n,p), h, h) samples. Per-trial
/// seeds derive from (seed, grid index, trial index), so thread count does not
/// change the table.
std::vector<ScanRow> run_threshold_scan(const ThresholdExperiment& exp,
                                        const ArrowOptions& arrow = {}, int threads = 1);

/// CSV: header p,trials,arrows,not_arrows,unknown then one row per grid point.
std::string to_csv(const std::vector<ScanRow>& rows);

} // namespace oramsey
