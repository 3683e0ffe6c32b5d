#include "hallforest/tree_algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hallforest::trees {

namespace {

// Attaches `extra` as an additional child of the vertex at `path` (a list of
// child indices from the root).
RootedTree attach_at(const RootedTree& t, const std::vector<int>& path, std::size_t depth,
                     const RootedTree& extra) {
    std::vector<RootedTree> kids = t.children();
    if (depth == path.size()) {
        kids.push_back(extra);
    } else {
        int i = path[depth];
        kids[i] = attach_at(kids[i], path, depth + 1, extra);
    }
    return RootedTree(std::move(kids));
}

void all_paths(const RootedTree& t, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int i = 0; i < static_cast<int>(t.children().size()); ++i) {
        cur.push_back(i);
        all_paths(t.children()[static_cast<std::size_t>(i)], cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Forest> graft_candidates(const Forest& a, const Forest& b) {
    // A cut realizing (P, R) = (a, b) hangs every tree of a below a vertex
    // of b (a cut edge) or leaves it as a fully-cut tree of its own.
    // Attachment sites are vertices of the original b only; nesting two
    // a-trees would put one cut edge above another.
    LabeledForest base = LabeledForest::from_forest(b, "b");
    int n = base.vertex_count();
    int k = static_cast<int>(a.trees().size());
    std::set<Forest> acc;
    std::vector<int> site(k, -1);  // -1 = new root component, else b-vertex
    std::function<void(int)> assign = [&](int i) {
        if (i == k) {
            std::vector<std::pair<std::string, std::string>> pairs;
            for (int v = 0; v < n; ++v) {
                int p = base.parent(v);
                pairs.emplace_back(base.label(v), p >= 0 ? base.label(p) : "");
            }
            int counter = 0;
            std::function<void(const RootedTree&, const std::string&)> copy =
                [&](const RootedTree& t, const std::string& parent) {
                    std::string fresh = "a" + std::to_string(++counter);
                    pairs.emplace_back(fresh, parent);
                    for (const auto& c : t.children()) copy(c, fresh);
                };
            for (int j = 0; j < k; ++j)
                copy(a.trees()[static_cast<std::size_t>(j)],
                     site[j] < 0 ? std::string() : base.label(site[j]));
            acc.insert(LabeledForest::from_parent_pairs(pairs).unlabeled());
            return;
        }
        for (int s = -1; s < n; ++s) {
            site[i] = s;
            assign(i + 1);
        }
    };
    assign(0);
    return {acc.begin(), acc.end()};
}

std::vector<ForestSplit> forest_splits(const Forest& m) {
    LabeledForest lf = LabeledForest::from_forest(m);
    std::map<std::pair<std::string, std::string>, std::pair<std::pair<Forest, Forest>, long long>>
        grouped;
    for (const auto& c : admissible_cuts(lf)) {
        auto pr = apply_cut(lf, c);
        auto k = std::make_pair(pr.first.key(), pr.second.key());
        auto it = grouped.find(k);
        if (it == grouped.end())
            grouped.emplace(k, std::make_pair(pr, 1LL));
        else
            ++it->second.second;
    }
    std::vector<ForestSplit> out;
    out.reserve(grouped.size());
    for (auto& [k, v] : grouped) {
        (void)k;
        out.push_back(ForestSplit{std::move(v.first.first), std::move(v.first.second), v.second});
    }
    return out;
}

long long subobject_count(const Forest& a, const Forest& b, const Forest& m) {
    if (a.size() + b.size() != m.size()) return 0;
    LabeledForest lf = LabeledForest::from_forest(m);
    long long n = 0;
    for (const auto& c : admissible_cuts(lf)) {
        auto pr = apply_cut(lf, c);
        if (pr.first == a && pr.second == b) ++n;
    }
    return n;
}

std::map<RootedTree, long long> prelie_tree(const RootedTree& t1, const RootedTree& t2) {
    // candidates: t1 attached below each vertex of t2; coefficients by
    // single-edge-cut counting in each candidate
    std::map<RootedTree, long long> out;
    std::set<RootedTree> candidates;
    std::vector<std::vector<int>> paths;
    std::vector<int> cur;
    all_paths(t2, cur, paths);
    for (const auto& p : paths) candidates.insert(attach_at(t2, p, 0, t1));
    Forest f1(t1), f2(t2);
    for (const auto& t : candidates) {
        LabeledForest lf = LabeledForest::from_forest(Forest(t));
        long long coeff = 0;
        // single-edge cuts: one cut edge, no full flags
        for (int v = 0; v < lf.vertex_count(); ++v) {
            if (lf.parent(v) < 0) continue;
            Cut c;
            c.edges.insert(lf.label(v));
            auto pr = apply_cut(lf, c);
            if (pr.first == f1 && pr.second == f2) ++coeff;
        }
        if (coeff != 0) out[t] = coeff;
    }
    return out;
}

}  // namespace hallforest::trees
