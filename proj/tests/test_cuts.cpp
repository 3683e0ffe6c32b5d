#include <doctest.h>

#include <set>
#include <vector>

#include "hallforest/labeled_forest.hpp"

using namespace hallforest::trees;

namespace {

// Oracle: all edge subsets filtered by the path condition, plus per-tree
// full flags, combined per tree.
std::vector<Cut> cuts_oracle(const LabeledForest& f) {
    // collect per-tree vertex lists
    std::vector<std::vector<int>> tree_vertices(f.roots().size());
    for (int v = 0; v < f.vertex_count(); ++v) {
        int r = f.tree_root(v);
        for (std::size_t t = 0; t < f.roots().size(); ++t)
            if (f.roots()[t] == r) tree_vertices[t].push_back(v);
    }
    auto path_ok = [&](const std::set<int>& edges) {
        for (int v : edges)
            for (int u = f.parent(v); u >= 0; u = f.parent(u))
                if (edges.count(u)) return false;
        return true;
    };
    std::vector<std::vector<Cut>> per_tree;
    for (std::size_t t = 0; t < f.roots().size(); ++t) {
        std::vector<int> edges;  // child ends
        for (int v : tree_vertices[t])
            if (f.parent(v) >= 0) edges.push_back(v);
        std::vector<Cut> cuts;
        for (std::size_t mask = 0; mask < (1u << edges.size()); ++mask) {
            std::set<int> chosen;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (mask & (1u << i)) chosen.insert(edges[i]);
            if (!path_ok(chosen)) continue;
            Cut c;
            for (int v : chosen) c.edges.insert(f.label(v));
            cuts.push_back(std::move(c));
        }
        Cut full;
        full.full_trees.insert(f.label(f.roots()[t]));
        cuts.push_back(std::move(full));
        per_tree.push_back(std::move(cuts));
    }
    std::vector<Cut> all{Cut{}};
    for (const auto& options : per_tree) {
        std::vector<Cut> next;
        for (const auto& base : all)
            for (const auto& opt : options) {
                Cut c = base;
                c.edges.insert(opt.edges.begin(), opt.edges.end());
                c.full_trees.insert(opt.full_trees.begin(), opt.full_trees.end());
                next.push_back(std::move(c));
            }
        all = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

LabeledForest lf_of(const std::string& key) {
    return LabeledForest::from_forest(parse_forest(key));
}

}  // namespace

TEST_CASE("cut counts on small trees") {
    CHECK(admissible_cuts(lf_of("{()}")).size() == 2);     // empty, full
    CHECK(admissible_cuts(lf_of("{(())}")).size() == 3);   // empty, {edge}, full
    // cherry: empty, two single-edge, both-edges, full
    CHECK(admissible_cuts(lf_of("{(()())}")).size() == 5);
    // chain3: the two-edge subset violates the path condition
    CHECK(admissible_cuts(lf_of("{((()))}")).size() == 4);
}

TEST_CASE("cut enumeration matches the subset-filter oracle") {
    for (const char* key :
         {"{()}", "{(())}", "{(()())}", "{((()))}", "{(),()}", "{(),(())}", "{(()()())}",
          "{((())())}", "{(()()),(())}", "{(),(),(())}"}) {
        auto lf = lf_of(key);
        auto got = admissible_cuts(lf);
        auto want = cuts_oracle(lf);
        CHECK(got == want);
        for (const auto& c : got) CHECK(is_admissible(lf, c));
    }
}

TEST_CASE("apply_cut extremes") {
    for (const char* key : {"{()}", "{(()())}", "{(),(())}"}) {
        auto lf = lf_of(key);
        auto [p0, r0] = apply_cut(lf, empty_cut());
        CHECK(p0.key() == "{}");
        CHECK(r0.key() == key);
        auto [p1, r1] = apply_cut(lf, full_cut(lf));
        CHECK(p1.key() == key);
        CHECK(r1.key() == "{}");
    }
}

TEST_CASE("the marked 7-vertex example splits as displayed") {
    // root 4 with children 7 and 3; 7 -> {1,5}; 3 -> {2,6}; cut edges 4-7 and 3-2
    LabeledForest t = LabeledForest::from_parent_pairs({
        {"4", ""}, {"7", "4"}, {"1", "7"}, {"5", "7"}, {"3", "4"}, {"2", "3"}, {"6", "3"}});
    Cut c;
    c.edges = {"7", "2"};
    REQUIRE(is_admissible(t, c));
    auto [p, r] = apply_cut(t, c);
    CHECK(p.key() == "{(),(()())}");  // vertex 2 and the cherry rooted at 7
    CHECK(r.key() == "{((()))}");     // the chain 4 -> 3 -> 6
    CHECK(p.size() + r.size() == 7);
}

TEST_CASE("inadmissible cuts rejected") {
    auto lf = lf_of("{((()))}");
    // chain3 labels v1 -> v2 -> v3: cutting both edges breaks the path rule
    Cut c;
    c.edges = {"v2", "v3"};
    CHECK_FALSE(is_admissible(lf, c));
    CHECK_THROWS(apply_cut(lf, c));
    Cut d;
    d.edges = {"v2"};
    d.full_trees = {"v1"};
    CHECK_FALSE(is_admissible(lf, d));
}

TEST_CASE("vertex-count additivity across every cut (size <= 5)") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& f : enumerate_forests(n)) {
            auto lf = LabeledForest::from_forest(f);
            for (const auto& c : admissible_cuts(lf)) {
                auto [p, r] = apply_cut(lf, c);
                CHECK(p.size() + r.size() == f.size());
            }
        }
}

TEST_CASE("min/max lattice identities") {
    auto lf = lf_of("{((()))}");
    // chain3: v1 -> v2 -> v3; c = top edge, d = bottom edge
    Cut top, bottom;
    top.edges = {"v2"};
    bottom.edges = {"v3"};
    CHECK(cut_max(lf, top, bottom) == top);
    CHECK(cut_min(lf, top, bottom) == bottom);

    for (const auto& c : admissible_cuts(lf)) {
        CHECK(cut_max(lf, c, empty_cut()) == c);
        CHECK(cut_min(lf, c, empty_cut()) == empty_cut());
        CHECK(cut_max(lf, c, full_cut(lf)) == full_cut(lf));
        CHECK(cut_min(lf, c, full_cut(lf)) == c);
    }
}

TEST_CASE("cut lattice laws hold exhaustively (size <= 5)") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : enumerate_forests(n)) {
            auto lf = LabeledForest::from_forest(f);
            auto cuts = admissible_cuts(lf);
            for (const auto& a : cuts) {
                CHECK(cut_max(lf, a, a) == a);
                CHECK(cut_min(lf, a, a) == a);
                for (const auto& b : cuts) {
                    CHECK(cut_max(lf, a, b) == cut_max(lf, b, a));
                    CHECK(cut_min(lf, a, b) == cut_min(lf, b, a));
                    CHECK(cut_max(lf, a, cut_min(lf, a, b)) == a);  // absorption
                    CHECK(cut_min(lf, a, cut_max(lf, a, b)) == a);
                    for (const auto& c : cuts) {
                        CHECK(cut_max(lf, a, cut_max(lf, b, c)) ==
                              cut_max(lf, cut_max(lf, a, b), c));
                        CHECK(cut_min(lf, a, cut_min(lf, b, c)) ==
                              cut_min(lf, cut_min(lf, a, b), c));
                    }
                }
            }
        }
}

TEST_CASE("from_parent_pairs validation") {
    CHECK_THROWS(LabeledForest::from_parent_pairs({{"a", ""}, {"a", ""}}));
    CHECK_THROWS(LabeledForest::from_parent_pairs({{"a", "b"}}));
    CHECK_THROWS(LabeledForest::from_parent_pairs({{"a", "b"}, {"b", "a"}}));
    CHECK_THROWS(LabeledForest::from_parent_pairs({{"a", "a"}}));
}
