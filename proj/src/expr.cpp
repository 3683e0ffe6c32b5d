#include "hallforest/expr.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hallforest/feyngraph.hpp"
#include "hallforest/rooted_tree.hpp"

namespace hallforest::expr {

namespace {

struct Parser {
    const std::string& s;
    const CategoryBackend& backend;
    std::size_t pos = 0;

    explicit Parser(const std::string& text, const CategoryBackend& b) : s(text), backend(b) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return pos < s.size() ? s[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) { throw ParseError(msg, at + 1); }

    Rat parse_rational() {
        skip_ws();
        std::size_t start = pos;
        if (peek() == '-' || peek() == '+') ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected a number", start);
        std::string num = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected a denominator", dstart);
            std::string den = s.substr(dstart, pos - dstart);
            if (mpz_class(den) == 0) fail("zero denominator", dstart);
            Rat q{mpz_class(num), mpz_class(den)};
            q.canonicalize();
            return q;
        }
        return Rat(mpz_class(num), 1);
    }

    // a literal: forest/tree text, graph key, builtin name or @file
    std::string parse_literal() {
        skip_ws();
        std::size_t start = pos;
        char c = peek();
        if (c == '{' || c == '(') {
            // balanced braces/parens
            int depth = 0;
            std::size_t i = pos;
            for (; i < s.size(); ++i) {
                if (s[i] == '{' || s[i] == '(') ++depth;
                if (s[i] == '}' || s[i] == ')') {
                    --depth;
                    if (depth == 0) {
                        ++i;
                        break;
                    }
                    if (depth < 0) fail("unbalanced bracket", i);
                }
            }
            if (depth > 0) fail("unexpected end of input (unclosed bracket)", s.size() - 1);
            std::string text = s.substr(pos, i - pos);
            pos = i;
            try {
                if (backend.name() == "trees") return backend.canonical(text);
                // '{}' is the empty class in both categories
                if (text == "{}") return backend.empty_key();
                fail("forest literal in the graph category", start);
            } catch (const trees::ParseError& e) {
                fail(std::string("bad forest literal: ") + e.what(), start + e.column - 1);
            }
        }
        if (c == '@') {
            ++pos;
            std::size_t i = pos;
            while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
                   s[i] != '+' && s[i] != '*')
                ++i;
            std::string path = s.substr(pos, i - pos);
            pos = i;
            if (backend.name() != "graphs") fail("@file graph literal in the tree category", start);
            std::ifstream in(path);
            if (!in) fail("cannot open graph file '" + path + "'", start);
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                return graphs::canon_key(graphs::FeynmanGraph::from_raw(
                    graphs::raw_from_json(buf.str())));
            } catch (const std::exception& e) {
                fail(std::string("bad graph file: ") + e.what(), start);
            }
        }
        if (c == 'g' && pos + 1 < s.size() && s[pos + 1] == '[') {
            std::size_t i = s.find(']', pos);
            if (i == std::string::npos) fail("unclosed graph key", pos);
            std::string key = s.substr(pos, i - pos + 1);
            pos = i + 1;
            if (backend.name() != "graphs") fail("graph key in the tree category", start);
            try {
                return backend.canonical(key);
            } catch (const std::exception& e) {
                fail(std::string("bad graph key: ") + e.what(), start);
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t i = pos;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(pos, i - pos);
            pos = i;
            if (backend.name() != "graphs")
                fail("named graph literal '" + name + "' in the tree category", start);
            try {
                return graphs::canon_key(graphs::builtin_graph(name));
            } catch (const std::exception& e) {
                fail(std::string(e.what()), start);
            }
        }
        fail("expected a class literal", pos);
    }

    HallElement parse(Basis basis) {
        HallElement out(backend, basis);
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            skip_ws();
            Rat coeff = 1;
            char c = peek();
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = parse_rational();
                have_coeff = true;
            }
            skip_ws();
            if (have_coeff && peek() == '*') {
                ++pos;
                out.add_term(parse_literal(), negative ? -coeff : coeff);
            } else if (have_coeff) {
                // bare rational: a multiple of the empty class
                out.add_term(backend.empty_key(), negative ? -coeff : coeff);
            } else {
                out.add_term(parse_literal(), negative ? Rat(-1) : Rat(1));
            }
            if (at_end()) break;
            char op = peek();
            if (op == '+') {
                negative = false;
                ++pos;
            } else if (op == '-') {
                negative = true;
                ++pos;
            } else {
                fail("expected '+' or '-'", pos);
            }
        }
        return out;
    }
};

long long weight_of(const CategoryBackend& b, const std::string& key) { return b.weight(key); }

}  // namespace

HallElement parse_element(const std::string& text, const CategoryBackend& backend, Basis basis) {
    Parser p(text, backend);
    if (p.at_end()) throw ParseError("empty expression", 1);
    return p.parse(basis);
}

std::string print_element(const HallElement& e) {
    if (e.is_zero()) return "0";
    const auto& b = e.backend();
    std::vector<std::pair<std::pair<long long, std::string>, Rat>> terms;
    for (const auto& [k, c] : e.terms()) terms.push_back({{weight_of(b, k), k}, c});
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        if (x.first.first != y.first.first) return x.first.first < y.first.first;
        return trees::shortlex_less(x.first.second, y.first.second);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [wk, c] : terms) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        os << a.get_str() << '*' << wk.second;
    }
    return os.str();
}

std::string element_to_json(const HallElement& e) {
    nlohmann::json j;
    j["basis"] = e.basis() == Basis::delta ? "delta" : "phi";
    j["terms"] = nlohmann::json::array();
    const auto& b = e.backend();
    std::vector<std::pair<std::pair<long long, std::string>, Rat>> terms;
    for (const auto& [k, c] : e.terms()) terms.push_back({{weight_of(b, k), k}, c});
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        if (x.first.first != y.first.first) return x.first.first < y.first.first;
        return trees::shortlex_less(x.first.second, y.first.second);
    });
    for (const auto& [wk, c] : terms) {
        nlohmann::json t;
        t["key"] = wk.second;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

HallElement element_from_json(const std::string& text, const CategoryBackend& backend) {
    nlohmann::json j = nlohmann::json::parse(text);
    Basis basis = j.at("basis").get<std::string>() == "phi" ? Basis::phi : Basis::delta;
    HallElement out(backend, basis);
    for (const auto& t : j.at("terms")) {
        Rat c{mpz_class(t.at("num").get<std::string>()),
              mpz_class(t.at("den").get<std::string>())};
        c.canonicalize();
        out.add_term(backend.canonical(t.at("key").get<std::string>()), c);
    }
    return out;
}

}  // namespace hallforest::expr
