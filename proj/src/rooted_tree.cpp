#include "hallforest/rooted_tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hallforest::trees {

bool shortlex_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

RootedTree::RootedTree() : enc_("()") {}

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    enc_.reserve(2 + 8 * children_.size());
    enc_ += '(';
    for (const auto& c : children_) {
        enc_ += c.enc_;
        size_ += c.size_;
    }
    enc_ += ')';
}

bool RootedTree::operator<(const RootedTree& o) const {
    return shortlex_less(enc_, o.enc_);
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end());
    for (const auto& t : trees_) size_ += t.size();
}

Forest::Forest(const RootedTree& t) : Forest(std::vector<RootedTree>{t}) {}

std::string Forest::key() const {
    std::string s = "{";
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i) s += ',';
        s += trees_[i].encoding();
    }
    s += '}';
    return s;
}

Forest Forest::disjoint_union(const Forest& other) const {
    std::vector<RootedTree> all = trees_;
    all.insert(all.end(), other.trees_.begin(), other.trees_.end());
    return Forest(std::move(all));
}

bool Forest::operator<(const Forest& o) const {
    return shortlex_less(key(), o.key());
}

namespace {

RootedTree parse_tree_at(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '(')
        throw ParseError("expected '('", pos + 1);
    ++pos;
    std::vector<RootedTree> kids;
    while (true) {
        if (pos >= s.size())
            throw ParseError("unexpected end of input (unclosed '(')", s.size());
        if (s[pos] == ')') {
            ++pos;
            return RootedTree(std::move(kids));
        }
        kids.push_back(parse_tree_at(s, pos));
    }
}

std::size_t skip_ws(const std::string& s, std::size_t pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    return pos;
}

}  // namespace

RootedTree parse_tree(const std::string& text) {
    std::size_t pos = skip_ws(text, 0);
    RootedTree t = parse_tree_at(text, pos);
    pos = skip_ws(text, pos);
    if (pos != text.size())
        throw ParseError("trailing input after tree", pos + 1);
    return t;
}

Forest parse_forest(const std::string& text) {
    std::size_t pos = skip_ws(text, 0);
    if (pos < text.size() && text[pos] == '(') {
        return Forest(parse_tree(text.substr(pos)));
    }
    if (pos >= text.size() || text[pos] != '{')
        throw ParseError("expected '{' or '('", pos + 1);
    ++pos;
    pos = skip_ws(text, pos);
    std::vector<RootedTree> ts;
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            ts.push_back(parse_tree_at(text, pos));
            pos = skip_ws(text, pos);
            if (pos >= text.size())
                throw ParseError("unexpected end of input (unclosed '{')", text.size());
            if (text[pos] == ',') {
                ++pos;
                pos = skip_ws(text, pos);
                continue;
            }
            if (text[pos] == '}') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or '}'", pos + 1);
        }
    }
    pos = skip_ws(text, pos);
    if (pos != text.size())
        throw ParseError("trailing input after forest", pos + 1);
    return Forest(std::move(ts));
}

namespace {

std::mutex enum_mutex;
std::map<int, std::vector<RootedTree>> tree_cache;
std::map<int, std::vector<Forest>> forest_cache;

// Multisets of trees with `remaining` total vertices, every tree >= `least`
// in the canonical order. Appends the chosen trees to `prefix`.
void gen_forests(int remaining, const RootedTree* least,
                 std::vector<RootedTree>& prefix, std::vector<Forest>& out);

const std::vector<RootedTree>& trees_locked(int n) {
    auto it = tree_cache.find(n);
    if (it != tree_cache.end()) return it->second;
    std::vector<RootedTree> result;
    if (n >= 1) {
        // root + any forest on n-1 vertices
        std::vector<Forest> subs;
        std::vector<RootedTree> prefix;
        gen_forests(n - 1, nullptr, prefix, subs);
        result.reserve(subs.size());
        for (const auto& f : subs) result.emplace_back(f.trees());
        std::sort(result.begin(), result.end());
    }
    return tree_cache.emplace(n, std::move(result)).first->second;
}

void gen_forests(int remaining, const RootedTree* least,
                 std::vector<RootedTree>& prefix, std::vector<Forest>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int s = least ? least->size() : 1; s <= remaining; ++s) {
        for (const auto& t : trees_locked(s)) {
            if (least && t < *least) continue;
            prefix.push_back(t);
            gen_forests(remaining - s, &t, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

const std::vector<RootedTree>& enumerate_trees(int n) {
    std::lock_guard<std::mutex> lock(enum_mutex);
    if (n < 0) throw std::invalid_argument("enumerate_trees: negative n");
    return trees_locked(n);
}

const std::vector<Forest>& enumerate_forests(int n) {
    std::lock_guard<std::mutex> lock(enum_mutex);
    if (n < 0) throw std::invalid_argument("enumerate_forests: negative n");
    auto it = forest_cache.find(n);
    if (it != forest_cache.end()) return it->second;
    std::vector<Forest> result;
    std::vector<RootedTree> prefix;
    gen_forests(n, nullptr, prefix, result);
    std::sort(result.begin(), result.end());
    return forest_cache.emplace(n, std::move(result)).first->second;
}

}  // namespace hallforest::trees
