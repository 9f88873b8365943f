#pragma once

#include "oramsey/graph.hpp"
#include "oramsey/structure.hpp"

#include <string>

namespace oramsey {

enum class Answer { Yes, No, Unknown };

/// Classifier outcome with a machine-checkable reason. `tag` names the
/// characterization the verdict comes from, `case_number` its branch, and
/// `swapped` says whether the roles of (h, hp) are exchanged relative to the
/// branch's canonical orientation.
struct Verdict {
    Answer answer = Answer::Unknown;
    bool applicable = true;
    int case_number = 0;
    bool swapped = false;
    std::string tag;
    std::string reason;
};

/// Does (h, hp) have a forest Ramsey host? Yes with the first applicable case:
///   1  one side is a partial matching
///   2  one side is a forest of right stars, the other has max left degree <= 1
///   3  the mirrored version of case 2
///   4  one side is a forest of left/right stars, the other of monotone paths
/// No carries the blocking refuter case in `case_number`.
Verdict ramsey_forest_case(const OrderedGraph& h, const OrderedGraph& hp);

/// For connected h, hp: does the pair have a pseudoforest Ramsey host at
/// density exactly one? Yes iff one side is K2 and the other a connected proper
/// pseudoforest, or both sides are the monotone P3.
Verdict ramsey_pseudoforest_connected(const OrderedGraph& h, const OrderedGraph& hp);

/// Connected h: Ramsey finite iff h is a left star or a right star.
Verdict ramsey_finite_connected(const OrderedGraph& h);

/// Necessary condition for Ramsey finiteness of arbitrary h: every component
/// that is not a monotone P3 (or a single vertex) must be a star, and the star
/// components must not mix orientations; any cycle is immediately infinite.
/// Passing the filter only yields Unknown.
Verdict ramsey_finite_structural_filter(const OrderedGraph& h);

/// Star-versus-caterpillar pairs: Yes = Ramsey finite (segment sequence
/// nondecreasing or at most two segments), No = Ramsey infinite (sequence not
/// almost increasing), Unknown in the open gap, applicable=false when the pair
/// has the wrong shape.
Verdict caterpillar_pair_verdict(const OrderedGraph& h, const OrderedGraph& hp);

/// Yes when one side is a monotone matching and the other has no isolated
/// vertices (or either side is a single edge); Unknown otherwise.
Verdict monotone_matching_finite(const OrderedGraph& h, const OrderedGraph& hp);

// shared helpers
bool all_components_right_stars(const OrderedGraph& g);
bool all_components_left_stars(const OrderedGraph& g);
bool all_components_left_or_right_stars(const OrderedGraph& g);
bool all_components_monotone_paths(const OrderedGraph& g);
OrderedGraph strip_isolated(const OrderedGraph& g);

} // namespace oramsey
