#include <doctest.h>

#include <map>
#include <set>

#include "hallforest/tree_algebra.hpp"

using namespace hallforest::trees;

namespace {

RootedTree t(const std::string& enc) { return parse_tree(enc); }
Forest f(const std::string& key) { return parse_forest(key); }

// Linear combination of trees with integer coefficients, for the pre-Lie
// property checks.
using Lin = std::map<RootedTree, long long>;

Lin unit(const RootedTree& x) { return {{x, 1}}; }

Lin star(const Lin& a, const Lin& b) {
    Lin out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            for (const auto& [z, cz] : prelie_tree(x, y)) {
                out[z] += cx * cy * cz;
                if (out[z] == 0) out.erase(z);
            }
    return out;
}

Lin sub(Lin a, const Lin& b) {
    for (const auto& [k, v] : b) {
        a[k] -= v;
        if (a[k] == 0) a.erase(k);
    }
    return a;
}

Lin assoc(const Lin& x, const Lin& y, const Lin& z) {
    return sub(star(x, star(y, z)), star(star(x, y), z));
}

Lin bracket(const Lin& x, const Lin& y) { return sub(star(x, y), star(y, x)); }

}  // namespace

TEST_CASE("graft candidates: two placements of a vertex on a vertex") {
    auto got = graft_candidates(f("{()}"), f("{()}"));
    std::set<std::string> keys;
    for (const auto& c : got) keys.insert(c.key());
    CHECK(keys == std::set<std::string>{"{(),()}", "{(())}"});
}

TEST_CASE("graft candidates contain the rooted cherry") {
    auto got = graft_candidates(f("{(()())}"), f("{()}"));
    bool found = false;
    for (const auto& c : got) found |= c.key() == "{((()()))}";
    CHECK(found);
}

TEST_CASE("graft candidates are exactly the extension supports (<= 5 vertices)") {
    for (int na = 1; na <= 4; ++na)
        for (int nb = 1; na + nb <= 5; ++nb)
            for (const auto& a : enumerate_forests(na))
                for (const auto& b : enumerate_forests(nb)) {
                    std::set<std::string> got;
                    for (const auto& c : graft_candidates(a, b)) got.insert(c.key());
                    std::set<std::string> want;
                    for (const auto& m : enumerate_forests(na + nb))
                        if (subobject_count(a, b, m) > 0) want.insert(m.key());
                    // complete: every support member is a candidate
                    for (const auto& w : want) CHECK(got.count(w) == 1);
                    // and for trees the generation is exact
                    for (const auto& g : got) CHECK(want.count(g) == 1);
                }
}

TEST_CASE("subobject counts") {
    CHECK(subobject_count(f("{()}"), f("{(()())}"), f("{(()()())}")) == 3);
    CHECK(subobject_count(f("{}"), f("{(())}"), f("{(())}")) == 1);
    CHECK(subobject_count(f("{}"), f("{(),()}"), f("{(),()}")) == 1);
    CHECK(subobject_count(f("{()}"), f("{()}"), f("{(),()}")) == 2);
    CHECK(subobject_count(f("{()}"), f("{()}"), f("{(())}")) == 1);
    // degree mismatch gives zero
    CHECK(subobject_count(f("{()}"), f("{()}"), f("{((()))}")) == 0);
}

TEST_CASE("forest_splits agrees with subobject_count") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& m : enumerate_forests(n)) {
            long long total = 0;
            for (const auto& s : forest_splits(m)) {
                CHECK(s.count == subobject_count(s.sub, s.quot, m));
                CHECK(s.sub.size() + s.quot.size() == m.size());
                total += s.count;
            }
            auto lf = LabeledForest::from_forest(m);
            CHECK(total == static_cast<long long>(admissible_cuts(lf).size()));
        }
}

TEST_CASE("pre-Lie products from the worked example") {
    auto cherry = t("(()())");
    auto dot = t("()");

    auto cd = prelie_tree(cherry, dot);
    CHECK(cd.size() == 1);
    CHECK(cd.at(t("((()()))")) == 1);

    auto dc = prelie_tree(dot, cherry);
    CHECK(dc.size() == 2);
    CHECK(dc.at(t("(()()())")) == 3);
    CHECK(dc.at(t("(()(()))")) == 1);

    auto dd = prelie_tree(dot, dot);
    CHECK(dd.size() == 1);
    CHECK(dd.at(t("(())")) == 1);
}

TEST_CASE("tree bracket [cherry, dot]") {
    auto b = bracket(unit(t("(()())")), unit(t("()")));
    Lin expected{{t("((()()))"), 1}, {t("(()(()))"), -1}, {t("(()()())"), -3}};
    CHECK(b == expected);
}

TEST_CASE("pre-Lie left symmetry and Jacobi through combined size 7") {
    std::vector<RootedTree> all;
    for (int n = 1; n <= 5; ++n)
        for (const auto& x : enumerate_trees(n)) all.push_back(x);
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all) {
                if (x.size() + y.size() + z.size() > 7) continue;
                auto lx = unit(x), ly = unit(y), lz = unit(z);
                CHECK(assoc(lx, ly, lz) == assoc(ly, lx, lz));
                // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
                auto total = bracket(bracket(lx, ly), lz);
                for (const auto& [k, v] : bracket(bracket(ly, lz), lx)) {
                    total[k] += v;
                    if (total[k] == 0) total.erase(k);
                }
                for (const auto& [k, v] : bracket(bracket(lz, lx), ly)) {
                    total[k] += v;
                    if (total[k] == 0) total.erase(k);
                }
                CHECK(total.empty());
            }
}
