#include <doctest.h>

#include "hallforest/cli.hpp"
#include "hallforest/expr.hpp"
#include "hallforest/feyngraph.hpp"

using namespace hallforest;
using namespace hallforest::hall;
using namespace hallforest::expr;

namespace {

int run_cli(const std::vector<std::string>& args, std::string& out) {
    std::string err;
    return cli::run(args, out, err);
}

}  // namespace

TEST_CASE("parsing linear combinations") {
    const auto& b = tree_backend();
    auto e = parse_element("{(())} + 3/2*{(),()}", b);
    CHECK(e.coeff("{(())}") == 1);
    CHECK(e.coeff("{(),()}") == Rat(3, 2));
    CHECK(e.terms().size() == 2);

    CHECK(parse_element("{}", b).coeff("{}") == 1);
    auto neg = parse_element("-2*{()} + {(())} - {(())}", b);
    CHECK(neg.coeff("{()}") == -2);
    CHECK(neg.terms().size() == 1);
}

TEST_CASE("parse errors carry positions") {
    const auto& b = tree_backend();
    CHECK_THROWS_AS(parse_element("((()", b), ParseError);
    try {
        parse_element("((()", b);
    } catch (const ParseError& e) {
        CHECK(e.column == 4);
    }
    CHECK_THROWS_AS(parse_element("{()} + ", b), ParseError);
    CHECK_THROWS_AS(parse_element("1/0*{()}", b), ParseError);
    CHECK_THROWS_AS(parse_element("frobnicate", b), ParseError);
}

TEST_CASE("print/parse round-trips and term ordering") {
    const auto& b = tree_backend();
    auto e = parse_element("3*{((()))} - 1/2*{()} + {(()())}", b);
    auto text = print_element(e);
    // degree-major order puts the vertex first
    CHECK(text == "-1/2*{()} + 3*{((()))} + 1*{(()())}");
    CHECK(parse_element(text, b) == e);
    CHECK(print_element(HallElement::zero(b, Basis::delta)) == "0");

    const auto& gb = graph_backend();
    auto ge = parse_element("B2 + 2*T3", gb);
    CHECK(parse_element(print_element(ge), gb) == ge);
}

TEST_CASE("element JSON round-trips") {
    const auto& b = tree_backend();
    auto e = parse_element("2*{(())} - 1/3*{()}", b);
    CHECK(element_from_json(element_to_json(e), b) == e);
    auto u = e.with_basis(Basis::phi);
    CHECK(element_from_json(element_to_json(u), b) == u);
}

TEST_CASE("graph literals: builtins and keys") {
    const auto& gb = graph_backend();
    auto e = parse_element("B2", gb);
    CHECK(e.coeff(graphs::canon_key(graphs::builtin_graph("B2"))) == 1);
    auto key = graphs::canon_key(graphs::builtin_graph("T3"));
    CHECK(parse_element(key, gb).coeff(key) == 1);
    CHECK_THROWS_AS(parse_element("NOPE", gb), ParseError);
    CHECK_THROWS_AS(parse_element("{()}", gb), ParseError);
    CHECK(parse_element("{}", gb).coeff("{}") == 1);
}

TEST_CASE("cli: golden bracket output") {
    std::string out;
    int code = run_cli({"bracket", "--category", "trees", "{(()())}", "{()}"}, out);
    CHECK(code == 0);
    CHECK(out == "1*{((()()))} - 1*{(()(()))} - 3*{(()()())}\n");
}

TEST_CASE("cli: golden top-insertion output") {
    std::string out;
    int code = run_cli({"act", "--rep", "top-ins", "--by", "{(()())}", "--on", "{()}"}, out);
    CHECK(code == 0);
    CHECK(out == "1*{(()(()))} + 3*{(()()())} + 1*{(),(()())}\n");
}

TEST_CASE("cli: outputs re-parse to equal values") {
    const auto& b = tree_backend();
    for (const char* cmd : {"{(()())}", "{()}", "{(()()),((()))}"}) {
        std::string out;
        REQUIRE(run_cli({"antipode", std::string(cmd)}, out) == 0);
        out.pop_back();  // newline
        auto back = parse_element(out, b);
        CHECK(back == hall::antipode(parse_element(cmd, b)));
    }
}

TEST_CASE("cli: determinism, exit codes, side checking") {
    std::string out1, out2;
    CHECK(run_cli({"verify", "--suite", "prelie", "--category", "trees", "--max-degree", "5",
               "--seed", "7"},
              out1) == 0);
    CHECK(run_cli({"verify", "--suite", "prelie", "--category", "trees", "--max-degree", "5",
               "--seed", "7"},
              out2) == 0);
    CHECK(out1 == out2);

    std::string out;
    CHECK(run_cli({"verify", "--suite", "no-such-suite"}, out) == 2);
    CHECK(run_cli({"canon", "((()"}, out) == 2);
    CHECK(run_cli({"act", "--rep", "ins", "--side", "right", "--by", "{()}", "--on", "{()}"}, out) ==
          2);
    CHECK(run_cli({"act", "--rep", "ins", "--side", "left", "--by", "{()}", "--on", "{()}"}, out) ==
          0);
}

TEST_CASE("cli: truncation and diagnostics verbs") {
    std::string out;
    CHECK(run_cli({"truncate", "--mode", "quot", "--object", "{(),()}", "--list"}, out) == 0);
    CHECK(out.find("{()}") != std::string::npos);
    CHECK(run_cli({"diagnose-direct-sum", "{()}", "{()}"}, out) == 0);
    CHECK(out.find("3 vs 4") != std::string::npos);
    CHECK(run_cli({"hecke-conv", "--which", "2", "{(()())}", "{()}"}, out) == 0);
    CHECK(out == "1*{(()(()))} + 3*{(()()())} + 1*{(),(()())}\n");
}

TEST_CASE("cli: graph verbs") {
    std::string out;
    CHECK(run_cli({"validate", "--category", "graphs", "B2"}, out) == 0);
    CHECK(out == "valid\n");
    CHECK(run_cli({"validate", "--category", "graphs", "TP"}, out) == 1);
    CHECK(out.find("one-particle-reducible") != std::string::npos);
    CHECK(run_cli({"subgraphs", "--category", "graphs", "Y"}, out) == 0);
    CHECK(run_cli({"k0", "--category", "graphs", "X"}, out) == 0);
}
