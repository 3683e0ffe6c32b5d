#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hallforest/rooted_tree.hpp"

using namespace hallforest::trees;

namespace {

// Independent count of rooted trees on n vertices via the multiset-of-
// subtrees recurrence: a(n+1) = (1/n) * sum_{k=1..n} (sum_{d|k} d*a(d)) * a(n-k+1).
std::vector<long long> rooted_tree_counts(int nmax) {
    std::vector<long long> a(nmax + 1, 0);
    a[1] = 1;
    for (int n = 1; n < nmax; ++n) {
        long long total = 0;
        for (int k = 1; k <= n; ++k) {
            long long s = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) s += d * a[d];
            total += s * a[n - k + 1];
        }
        a[n + 1] = total / n;
    }
    return a;
}

// Oracle isomorphism test, independent of the canonical encoding: recursive
// matching of children over all bijections.
bool iso_oracle(const RootedTree& a, const RootedTree& b) {
    if (a.size() != b.size()) return false;
    if (a.children().size() != b.children().size()) return false;
    int k = static_cast<int>(a.children().size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    // try all assignments of a-children to b-children
    std::vector<bool> used(k, false);
    std::function<bool(int)> match = [&](int i) -> bool {
        if (i == k) return true;
        for (int j = 0; j < k; ++j) {
            if (used[j]) continue;
            if (iso_oracle(a.children()[i], b.children()[j])) {
                used[j] = true;
                if (match(i + 1)) return true;
                used[j] = false;
            }
        }
        return false;
    };
    return match(0);
}

// Emits a non-canonical encoding with children order shuffled at every level.
std::string shuffled_encoding(const RootedTree& t, std::mt19937& rng) {
    std::vector<const RootedTree*> kids;
    for (const auto& c : t.children()) kids.push_back(&c);
    std::shuffle(kids.begin(), kids.end(), rng);
    std::string s = "(";
    for (auto* c : kids) s += shuffled_encoding(*c, rng);
    s += ')';
    return s;
}

}  // namespace

TEST_CASE("single vertex encodes as ()") {
    CHECK(RootedTree().encoding() == "()");
    CHECK(parse_tree("()").encoding() == "()");
}

TEST_CASE("canonical form ignores child order") {
    CHECK(parse_tree("(()(()))").encoding() == "(()(()))");
    CHECK(parse_tree("((())())").encoding() == "(()(()))");
}

TEST_CASE("encode/decode round-trips") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_trees(n))
            CHECK(parse_tree(t.encoding()) == t);
    for (int n = 0; n <= 5; ++n)
        for (const auto& f : enumerate_forests(n))
            CHECK(parse_forest(f.key()) == f);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_tree("((()"), ParseError);
    try {
        parse_tree("((()");
    } catch (const ParseError& e) {
        CHECK(e.column == 4);
    }
    CHECK_THROWS_AS(parse_forest("{(),"), ParseError);
    CHECK_THROWS_AS(parse_tree("()x"), ParseError);
}

TEST_CASE("malformed parent structures rejected") {
    // exercised through LabeledForest in test_cuts; here just the grammar
    CHECK_THROWS(parse_forest("{()()}"));
}

TEST_CASE("enumeration matches the recurrence oracle") {
    auto counts = rooted_tree_counts(6);
    std::vector<long long> expected{1, 1, 2, 4, 9, 20};
    for (int n = 1; n <= 6; ++n) {
        CHECK(counts[n] == expected[n - 1]);
        CHECK(static_cast<long long>(enumerate_trees(n).size()) == counts[n]);
    }
    CHECK(enumerate_trees(0).empty());
}

TEST_CASE("small enumerations are exactly right") {
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(1)[0].encoding() == "()");
    std::vector<std::string> n3;
    for (const auto& t : enumerate_trees(3)) n3.push_back(t.encoding());
    CHECK(n3 == std::vector<std::string>{"((()))", "(()())"});
}

TEST_CASE("canonical keys are sound up to 6 vertices") {
    std::mt19937 rng(20240811);
    for (int n = 1; n <= 6; ++n) {
        const auto& ts = enumerate_trees(n);
        // distinct classes get distinct keys; oracle confirms non-isomorphism
        for (std::size_t i = 0; i < ts.size(); ++i) {
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                CHECK(ts[i].encoding() != ts[j].encoding());
                CHECK_FALSE(iso_oracle(ts[i], ts[j]));
            }
            // shuffled re-parse lands on the same key
            for (int rep = 0; rep < 4; ++rep) {
                auto enc = shuffled_encoding(ts[i], rng);
                CHECK(parse_tree(enc) == ts[i]);
                CHECK(iso_oracle(parse_tree(enc), ts[i]));
            }
        }
    }
}

TEST_CASE("nine classes on five vertices") {
    CHECK(enumerate_trees(5).size() == 9);
}

TEST_CASE("forest counts and keys") {
    CHECK(enumerate_forests(0).size() == 1);
    CHECK(enumerate_forests(0)[0].key() == "{}");
    CHECK(enumerate_forests(1).size() == 1);
    CHECK(enumerate_forests(2).size() == 2);
    CHECK(enumerate_forests(3).size() == 4);
    CHECK(enumerate_forests(4).size() == 9);
    CHECK(enumerate_forests(5).size() == 20);
    // shortlex: vertex-count-major ordering inside keys
    Forest f = parse_forest("{(()()),()}");
    CHECK(f.key() == "{(),(()())}");
}

TEST_CASE("k0 is the vertex count") {
    CHECK(k0_forest(Forest()) == 0);
    CHECK(k0_forest(parse_forest("{()}")) == 1);
    CHECK(k0_forest(parse_forest("{(()()),((()))}")) == 6);
}
