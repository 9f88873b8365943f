#pragma once

#include "oramsey/coloring.hpp"

#include <optional>

namespace oramsey {

enum class RefuteStatus { Ok, NotApplicable };

struct RefuteResult {
    RefuteStatus status = RefuteStatus::NotApplicable;
    std::optional<EdgeColoring> coloring; // verified: no red h, no blue hp

    bool ok() const { return status == RefuteStatus::Ok; }
};

/// Colorings showing that no forest arrows (h, hp). Cases:
///   1  both sides have a component that is not a star
///   2  one side has a vertex with two right neighbors, the other with two left
///   3  both sides contain a monotone P3
///   4  one side contains a monotone P3, the other an ordered P4
/// The returned coloring is machine-checked before it is handed out; a check
/// failure throws (it would mean the construction itself is wrong).
RefuteResult refute_forest(const OrderedGraph& f, const OrderedGraph& h, const OrderedGraph& hp,
                           int which_case);

/// Colorings showing that no pseudoforest arrows (h, hp). Cases:
///   1  one side has a cycle, the other is not a partial matching
///   2  one side has a vertex with two right neighbors, the other with two left
///   3  one side contains a monotone P3, the other an ordered P4
///   4  one side contains a monotone P3, the other a 3-edge star that is
///      neither a right star nor a left star
RefuteResult refute_pseudoforest(const OrderedGraph& f, const OrderedGraph& h,
                                 const OrderedGraph& hp, int which_case);

/// Lowest applicable case number, 0 when none applies.
int applicable_forest_case(const OrderedGraph& h, const OrderedGraph& hp);
int applicable_pseudoforest_case(const OrderedGraph& h, const OrderedGraph& hp);

/// All 12 orderings of the four-vertex path.
const std::vector<OrderedGraph>& ordered_p4_patterns();
bool contains_ordered_p4(const OrderedGraph& g);
bool contains_monotone_p3(const OrderedGraph& g);

} // namespace oramsey
