#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hallforest::trees {

/// An unlabeled rooted tree in canonical form. Children are kept sorted in
/// shortlex order of their encodings (size first, then byte-wise), so two
/// trees are isomorphic iff their encodings are equal. The encoding grammar
/// is tree := '(' tree* ')'.
class RootedTree {
public:
    RootedTree();  // single vertex, "()"
    explicit RootedTree(std::vector<RootedTree> children);

    const std::vector<RootedTree>& children() const { return children_; }
    const std::string& encoding() const { return enc_; }
    int size() const { return size_; }  // vertex count

    bool operator==(const RootedTree& o) const { return enc_ == o.enc_; }
    bool operator!=(const RootedTree& o) const { return enc_ != o.enc_; }
    bool operator<(const RootedTree& o) const;  // shortlex

private:
    std::vector<RootedTree> children_;
    std::string enc_;
    int size_ = 1;
};

/// Shortlex comparison of encodings: shorter strings first, ties broken
/// byte-wise. This is the total order used everywhere (children, forests,
/// term ordering).
bool shortlex_less(const std::string& a, const std::string& b);

/// A multiset of rooted trees, canonically sorted. The empty forest is the
/// zero object. key() uses the grammar forest := '{' [tree (',' tree)*] '}'.
class Forest {
public:
    Forest() = default;  // empty forest
    explicit Forest(std::vector<RootedTree> trees);
    explicit Forest(const RootedTree& t);

    const std::vector<RootedTree>& trees() const { return trees_; }
    int size() const { return size_; }  // total vertex count
    bool empty() const { return trees_.empty(); }
    std::string key() const;

    /// Disjoint union (the monoidal structure).
    Forest disjoint_union(const Forest& other) const;

    bool operator==(const Forest& o) const { return trees_ == o.trees_; }
    bool operator!=(const Forest& o) const { return !(*this == o); }
    bool operator<(const Forest& o) const;  // shortlex on keys

private:
    std::vector<RootedTree> trees_;
    int size_ = 0;
};

/// Parses a canonical-or-not tree encoding; children get re-sorted. Throws
/// ParseError with a 1-based column on malformed input.
RootedTree parse_tree(const std::string& text);

/// Parses "{...}" (or a bare tree, treated as a one-tree forest).
Forest parse_forest(const std::string& text);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t column)
        : std::runtime_error(msg + " at column " + std::to_string(column)), column(column) {}
    std::size_t column;  // 1-based
};

/// All isomorphism classes of rooted trees with exactly n vertices, sorted.
/// n = 0 gives the empty list.
const std::vector<RootedTree>& enumerate_trees(int n);

/// All forests with exactly n vertices in total, sorted by key. n = 0 gives
/// the singleton {empty forest}.
const std::vector<Forest>& enumerate_forests(int n);

inline int k0_forest(const Forest& f) { return f.size(); }

}  // namespace hallforest::trees
