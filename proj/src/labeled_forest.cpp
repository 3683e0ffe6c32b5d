#include "hallforest/labeled_forest.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hallforest::trees {

int LabeledForest::add_vertex(const std::string& label, int parent) {
    if (index_.count(label))
        throw std::invalid_argument("duplicate vertex label '" + label + "'");
    int v = static_cast<int>(labels_.size());
    labels_.push_back(label);
    parent_.push_back(parent);
    kids_.emplace_back();
    index_[label] = v;
    if (parent < 0)
        roots_.push_back(v);
    else
        kids_[parent].push_back(v);
    return v;
}

LabeledForest LabeledForest::from_forest(const Forest& f, const std::string& prefix) {
    LabeledForest lf;
    int counter = 0;
    std::function<void(const RootedTree&, int)> walk = [&](const RootedTree& t, int parent) {
        int v = lf.add_vertex(prefix + std::to_string(++counter), parent);
        for (const auto& c : t.children()) walk(c, v);
    };
    for (const auto& t : f.trees()) walk(t, -1);
    return lf;
}

LabeledForest LabeledForest::from_parent_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    // two passes: create vertices, then wire parents with cycle detection
    LabeledForest lf;
    for (const auto& [label, parent] : pairs) {
        (void)parent;
        lf.add_vertex(label, -1);
    }
    lf.roots_.clear();
    for (const auto& [label, parent] : pairs) {
        int v = lf.index_.at(label);
        if (parent.empty()) {
            lf.parent_[v] = -1;
            lf.roots_.push_back(v);
        } else {
            auto it = lf.index_.find(parent);
            if (it == lf.index_.end())
                throw std::invalid_argument("unknown parent label '" + parent + "'");
            if (it->second == v)
                throw std::invalid_argument("vertex '" + label + "' is its own parent");
            lf.parent_[v] = it->second;
            lf.kids_[it->second].push_back(v);
        }
    }
    // cycle check: every vertex must reach a root
    for (int v = 0; v < lf.vertex_count(); ++v) {
        int steps = 0, u = v;
        while (u >= 0) {
            u = lf.parent_[u];
            if (++steps > lf.vertex_count())
                throw std::invalid_argument("cycle through vertex '" + lf.labels_[v] + "'");
        }
    }
    return lf;
}

int LabeledForest::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

int LabeledForest::tree_root(int v) const {
    while (parent_[v] >= 0) v = parent_[v];
    return v;
}

RootedTree LabeledForest::subtree(int v) const {
    std::vector<RootedTree> kids;
    kids.reserve(kids_[v].size());
    for (int c : kids_[v]) kids.push_back(subtree(c));
    return RootedTree(std::move(kids));
}

Forest LabeledForest::unlabeled() const {
    std::vector<RootedTree> ts;
    ts.reserve(roots_.size());
    for (int r : roots_) ts.push_back(subtree(r));
    return Forest(std::move(ts));
}

Cut empty_cut() { return Cut{}; }

Cut full_cut(const LabeledForest& f) {
    Cut c;
    for (int r : f.roots()) c.full_trees.insert(f.label(r));
    return c;
}

bool is_admissible(const LabeledForest& f, const Cut& c) {
    for (const auto& t : c.full_trees) {
        int v = f.index_of(t);
        if (v < 0 || f.parent(v) >= 0) return false;  // must name a root
    }
    for (const auto& e : c.edges) {
        int v = f.index_of(e);
        if (v < 0 || f.parent(v) < 0) return false;  // must name a child end
        if (c.full_trees.count(f.label(f.tree_root(v)))) return false;
        // no other cut edge strictly above
        for (int u = f.parent(v); u >= 0; u = f.parent(u))
            if (c.edges.count(f.label(u))) return false;
    }
    return true;
}

void require_admissible(const LabeledForest& f, const Cut& c) {
    if (!is_admissible(f, c)) throw std::invalid_argument("inadmissible cut");
}

namespace {

// Antichains of the subtree below v, as lists of cut-edge child vertices.
void antichains(const LabeledForest& f, int v, std::vector<std::vector<int>>& out) {
    out = {{}};
    for (int c : f.children(v)) {
        std::vector<std::vector<int>> sub;
        antichains(f, c, sub);
        std::vector<std::vector<int>> next;
        next.reserve(out.size() * (sub.size() + 1));
        for (const auto& left : out) {
            // either cut the edge above c ...
            auto with_edge = left;
            with_edge.push_back(c);
            next.push_back(std::move(with_edge));
            // ... or keep descending
            for (const auto& rest : sub) {
                auto both = left;
                both.insert(both.end(), rest.begin(), rest.end());
                next.push_back(std::move(both));
            }
        }
        out = std::move(next);
    }
}

}  // namespace

std::vector<Cut> admissible_cuts(const LabeledForest& f) {
    // per tree: all antichain cuts plus the full cut; forest cuts are the
    // cartesian product
    std::vector<std::vector<Cut>> per_tree;
    for (int r : f.roots()) {
        std::vector<std::vector<int>> anti;
        antichains(f, r, anti);
        std::vector<Cut> cuts;
        cuts.reserve(anti.size() + 1);
        for (const auto& a : anti) {
            Cut c;
            for (int v : a) c.edges.insert(f.label(v));
            cuts.push_back(std::move(c));
        }
        Cut full;
        full.full_trees.insert(f.label(r));
        cuts.push_back(std::move(full));
        per_tree.push_back(std::move(cuts));
    }
    std::vector<Cut> result{Cut{}};
    for (const auto& options : per_tree) {
        std::vector<Cut> next;
        next.reserve(result.size() * options.size());
        for (const auto& base : result) {
            for (const auto& opt : options) {
                Cut c = base;
                c.edges.insert(opt.edges.begin(), opt.edges.end());
                c.full_trees.insert(opt.full_trees.begin(), opt.full_trees.end());
                next.push_back(std::move(c));
            }
        }
        result = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<bool> cut_upset(const LabeledForest& f, const Cut& c) {
    require_admissible(f, c);
    int n = f.vertex_count();
    std::vector<bool> keep(n, true);
    std::function<void(int, bool)> walk = [&](int v, bool below) {
        if (c.edges.count(f.label(v))) below = true;
        keep[v] = !below;
        for (int ch : f.children(v)) walk(ch, below);
    };
    for (int r : f.roots()) walk(r, c.full_trees.count(f.label(r)) > 0);
    return keep;
}

Cut upset_to_cut(const LabeledForest& f, const std::vector<bool>& keep) {
    Cut c;
    for (int v = 0; v < f.vertex_count(); ++v) {
        int p = f.parent(v);
        if (p < 0) {
            if (!keep[v]) c.full_trees.insert(f.label(v));
        } else if (keep[p] && !keep[v]) {
            c.edges.insert(f.label(v));
        } else if (!keep[p] && keep[v]) {
            throw std::invalid_argument("vertex set is not closed under parents");
        }
    }
    return c;
}

namespace {

// Copies the sub-forest induced by `take` (which must be either an up-set or
// a down-set, so components are honest subtrees).
LabeledForest induced(const LabeledForest& f, const std::vector<bool>& take) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (!take[v]) continue;
        int p = f.parent(v);
        pairs.emplace_back(f.label(v), (p >= 0 && take[p]) ? f.label(p) : "");
    }
    return LabeledForest::from_parent_pairs(pairs);
}

}  // namespace

CutPieces split_labeled(const LabeledForest& f, const Cut& c) {
    auto keep = cut_upset(f, c);
    std::vector<bool> drop(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) drop[i] = !keep[i];
    return CutPieces{induced(f, drop), induced(f, keep)};
}

std::pair<Forest, Forest> apply_cut(const LabeledForest& f, const Cut& c) {
    auto pieces = split_labeled(f, c);
    return {pieces.p.unlabeled(), pieces.r.unlabeled()};
}

Cut cut_max(const LabeledForest& f, const Cut& c, const Cut& d) {
    auto rc = cut_upset(f, c), rd = cut_upset(f, d);
    std::vector<bool> meet(rc.size());
    for (std::size_t i = 0; i < rc.size(); ++i) meet[i] = rc[i] && rd[i];
    return upset_to_cut(f, meet);
}

Cut cut_min(const LabeledForest& f, const Cut& c, const Cut& d) {
    auto rc = cut_upset(f, c), rd = cut_upset(f, d);
    std::vector<bool> join(rc.size());
    for (std::size_t i = 0; i < rc.size(); ++i) join[i] = rc[i] || rd[i];
    return upset_to_cut(f, join);
}

}  // namespace hallforest::trees
