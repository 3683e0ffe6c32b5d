#pragma once

#include <map>
#include <vector>

#include "hallforest/labeled_forest.hpp"
#include "hallforest/rooted_tree.hpp"

namespace hallforest::trees {

/// Every forest C admitting an admissible cut with (P, R) ≅ (a, b) arises by
/// attaching each tree of a below some vertex of b or adding it as a new
/// root component. Returns that (complete) candidate set, deduplicated.
std::vector<Forest> graft_candidates(const Forest& a, const Forest& b);

/// Number of admissible cuts C of m with P_C(m) ≅ a and R_C(m) ≅ b; the Hall
/// structure constant (δ_a × δ_b)(m).
long long subobject_count(const Forest& a, const Forest& b, const Forest& m);

/// All (P, R, multiplicity) splittings of m over its admissible cuts.
struct ForestSplit {
    Forest sub;   // P part
    Forest quot;  // R part
    long long count;
};
std::vector<ForestSplit> forest_splits(const Forest& m);

/// The pre-Lie product t1 * t2 = Σ_T a(t1,t2;T)·T where a(t1,t2;T) counts
/// single-edge cuts of T with branch t1 and root part t2 (edge-cut counts,
/// not grafting-datum counts).
std::map<RootedTree, long long> prelie_tree(const RootedTree& t1, const RootedTree& t2);

}  // namespace hallforest::trees
