#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hallforest/rooted_tree.hpp"

namespace hallforest::trees {

/// A rooted forest with pairwise-distinct vertex labels (opaque strings).
/// Vertices are stored in an index arena; tree order is the root order.
class LabeledForest {
public:
    LabeledForest() = default;

    /// Labels a canonical forest "<prefix>1", "<prefix>2", ... in preorder.
    static LabeledForest from_forest(const Forest& f, const std::string& prefix = "v");

    /// Builds from explicit (label, parent label or "") pairs. Rejects
    /// duplicate labels, unknown parents and cycles.
    static LabeledForest from_parent_pairs(
        const std::vector<std::pair<std::string, std::string>>& pairs);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& roots() const { return roots_; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& children(int v) const { return kids_[v]; }
    int index_of(const std::string& label) const;  // -1 if absent
    const std::string& label(int v) const { return labels_[v]; }

    /// Root index of the tree containing v.
    int tree_root(int v) const;

    /// Forgets labels; result is canonical.
    Forest unlabeled() const;

    /// Unlabeled class of the subtree rooted at v.
    RootedTree subtree(int v) const;

    bool empty() const { return labels_.empty(); }

private:
    std::vector<std::string> labels_;
    std::vector<int> parent_;               // -1 for roots
    std::vector<std::vector<int>> kids_;
    std::vector<int> roots_;
    std::map<std::string, int> index_;

    int add_vertex(const std::string& label, int parent);
    friend LabeledForest sub_forest(const LabeledForest&, const std::vector<int>&,
                                    const std::vector<int>&);
};

/// An admissible cut: a set of cut edges (named by the child-end vertex
/// label) plus per-tree full-cut flags (named by the tree's root label). On
/// every root-to-leaf path at most one cut edge; a full-flagged tree has no
/// cut edges.
struct Cut {
    std::set<std::string> edges;
    std::set<std::string> full_trees;

    bool operator==(const Cut& o) const = default;
    bool operator<(const Cut& o) const {
        if (edges != o.edges) return edges < o.edges;
        return full_trees < o.full_trees;
    }
};

Cut empty_cut();
Cut full_cut(const LabeledForest& f);

/// Checks the path condition and flag consistency.
bool is_admissible(const LabeledForest& f, const Cut& c);
void require_admissible(const LabeledForest& f, const Cut& c);

/// Every admissible cut exactly once (empty and full included), in a
/// deterministic order.
std::vector<Cut> admissible_cuts(const LabeledForest& f);

/// Labeled pieces of a cut: P = severed branches (and fully-cut trees),
/// R = root components. Original labels are kept.
struct CutPieces {
    LabeledForest p;
    LabeledForest r;
};
CutPieces split_labeled(const LabeledForest& f, const Cut& c);

/// Unlabeled (P_C, R_C) classes.
std::pair<Forest, Forest> apply_cut(const LabeledForest& f, const Cut& c);

/// The lattice operations of §-style cut comparison: max keeps, on each
/// root-leaf path, the cut edge closer to the root; min the farther one.
/// Implemented through the root-components: R_max = R_c ∩ R_d and
/// R_min = R_c ∪ R_d.
Cut cut_max(const LabeledForest& f, const Cut& c, const Cut& d);
Cut cut_min(const LabeledForest& f, const Cut& c, const Cut& d);

/// R-part of a cut as a vertex set ("up-set": closed under parents).
std::vector<bool> cut_upset(const LabeledForest& f, const Cut& c);
/// Reconstructs the cut whose root component is exactly the given up-set.
Cut upset_to_cut(const LabeledForest& f, const std::vector<bool>& keep);

}  // namespace hallforest::trees
