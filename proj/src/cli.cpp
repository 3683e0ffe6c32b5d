#include "hallforest/cli.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hallforest/expr.hpp"
#include "hallforest/feyngraph.hpp"
#include "hallforest/hecke.hpp"
#include "hallforest/representations.hpp"
#include "hallforest/rooted_tree.hpp"
#include "hallforest/tree_algebra.hpp"
#include "hallforest/verify.hpp"

namespace hallforest::cli {

namespace {

using hall::Basis;
using hall::CategoryBackend;
using hall::HallElement;

struct Options {
    std::string category = "trees";
    std::string format = "text";
    bool timing = false;
};

std::string render(const HallElement& e, const Options& opt) {
    return opt.format == "json" ? expr::element_to_json(e) : expr::print_element(e);
}

std::string checks_to_text(const std::vector<hecke::Check>& checks) {
    std::ostringstream os;
    bool ok = true;
    for (const auto& c : checks) {
        os << "[" << c.status << "] " << c.claim;
        if (!c.witness.empty()) os << " (" << c.witness << ")";
        os << "\n";
        if (c.status == "fail") ok = false;
    }
    os << (ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string checks_to_json(const std::vector<hecke::Check>& checks) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks)
        j.push_back({{"claim", c.claim}, {"status", c.status}, {"witness", c.witness}});
    return j.dump();
}

bool checks_pass(const std::vector<hecke::Check>& checks) {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
    CLI::App app{"hallforest: rooted-tree and Feynman-graph Hall algebras"};
    app.require_subcommand(1);
    app.fallthrough(true);
    Options opt;
    app.add_option("--category", opt.category, "trees or graphs")
        ->check(CLI::IsMember({"trees", "graphs"}));
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", opt.timing, "include wall time in JSON reports");

    std::ostringstream os;

    // canon
    std::string canon_expr;
    auto* canon = app.add_subcommand("canon", "canonicalize an element");
    canon->add_option("expr", canon_expr)->required();

    // enumerate
    int enum_trees = -1, enum_forests = -1;
    auto* enumerate = app.add_subcommand("enumerate", "list isomorphism classes");
    enumerate->add_option("--trees", enum_trees, "all rooted trees with n vertices");
    enumerate->add_option("--forests", enum_forests, "all forests with n vertices");

    // binary/unary algebra verbs
    std::string lhs, rhs, single;
    auto* product = app.add_subcommand("product", "Hall product of two delta elements");
    product->add_option("lhs", lhs)->required();
    product->add_option("rhs", rhs)->required();
    auto* bracket = app.add_subcommand("bracket", "Hall commutator of two indecomposables");
    bracket->add_option("lhs", lhs)->required();
    bracket->add_option("rhs", rhs)->required();
    auto* prelie = app.add_subcommand("prelie", "pre-Lie product of two indecomposables");
    prelie->add_option("lhs", lhs)->required();
    prelie->add_option("rhs", rhs)->required();
    auto* kappa_cmd = app.add_subcommand("kappa", "bilinear form of two elements");
    kappa_cmd->add_option("lhs", lhs)->required();
    kappa_cmd->add_option("rhs", rhs)->required();
    auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of a delta element");
    coproduct_cmd->add_option("expr", single)->required();
    auto* antipode_cmd = app.add_subcommand("antipode", "antipode of a delta element");
    antipode_cmd->add_option("expr", single)->required();
    auto* primitive_cmd = app.add_subcommand("primitive", "is the element primitive?");
    primitive_cmd->add_option("expr", single)->required();
    auto* degree_cmd = app.add_subcommand("degree", "common K0 degree of the support");
    degree_cmd->add_option("expr", single)->required();
    auto* k0_cmd = app.add_subcommand("k0", "K0 class of one object");
    k0_cmd->add_option("expr", single)->required();

    // act
    std::string act_rep, act_by, act_on, act_side = "auto";
    auto* act_cmd = app.add_subcommand("act", "apply one of the four actions");
    act_cmd->add_option("--rep", act_rep, "ins|top-ins|elim|top-elim")->required();
    act_cmd->add_option("--by", act_by, "indecomposable generator class")->required();
    act_cmd->add_option("--on", act_on, "module element")->required();
    act_cmd->add_option("--side", act_side, "left|right (checked against --rep)")
        ->check(CLI::IsMember({"auto", "left", "right"}));

    // compare-brackets
    auto* cmpbr = app.add_subcommand(
        "compare-brackets", "insertion bracket vs Hall commutator: supports and ratios");
    cmpbr->add_option("lhs", lhs)->required();
    cmpbr->add_option("rhs", rhs)->required();

    // hecke-conv
    int which = 0;
    auto* conv = app.add_subcommand("hecke-conv", "one of the three Hecke convolutions");
    conv->add_option("--which", which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    conv->add_option("lhs", lhs)->required();
    conv->add_option("rhs", rhs)->required();

    // truncate
    std::string trunc_mode = "quot", trunc_object;
    bool trunc_list = false;
    auto* trunc = app.add_subcommand("truncate", "finite truncation sets Quot(M) and <=M");
    trunc->add_option("--mode", trunc_mode)->check(CLI::IsMember({"sub", "quot"}));
    trunc->add_option("--object", trunc_object)->required();
    trunc->add_flag("--list", trunc_list, "list the member classes");

    // act-trunc
    std::string at_mode = "quot", at_object, at_style, at_by, at_on;
    auto* at = app.add_subcommand("act-trunc", "truncated action inside Quot(M) or <=M");
    at->add_option("--mode", at_mode)->check(CLI::IsMember({"sub", "quot"}));
    at->add_option("--object", at_object)->required();
    at->add_option("--style", at_style, "elim|top-elim|dual-ins|dual-top-ins")->required();
    at->add_option("--by", at_by)->required();
    at->add_option("--on", at_on)->required();

    // diagnose-direct-sum
    std::string ds_a, ds_b, ds_mode = "quot";
    auto* ds = app.add_subcommand("diagnose-direct-sum",
                                  "dimension/projection findings for M = A + B");
    ds->add_option("a", ds_a)->required();
    ds->add_option("b", ds_b)->required();
    ds->add_option("--mode", ds_mode)->check(CLI::IsMember({"sub", "quot"}));

    // contract
    std::string ct_graph, ct_vertices;
    auto* contract_cmd = app.add_subcommand("contract", "contract a subgraph of a graph");
    contract_cmd->add_option("--graph", ct_graph, "@file, builtin name or key")->required();
    contract_cmd->add_option("--vertices", ct_vertices, "comma-separated vertex ids")->required();

    // graph utilities
    std::string vg_expr;
    auto* validate_cmd = app.add_subcommand("validate", "validate a graph JSON document");
    validate_cmd->add_option("graph", vg_expr, "@file, builtin name or key")->required();
    auto* subgraphs_cmd = app.add_subcommand("subgraphs", "list subgraph classes of a graph");
    subgraphs_cmd->add_option("graph", vg_expr)->required();
    auto* builtins_cmd = app.add_subcommand("builtins", "list named builtin graphs");
    (void)builtins_cmd;

    // verify
    std::string suite;
    int max_degree = 5;
    unsigned seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite)->required();
    verify_cmd->add_option("--max-degree", max_degree);
    verify_cmd->add_option("--seed", seed);

    // optional persistent canonical-form cache
    std::string cache_file;
    if (const char* dir = std::getenv("HALLFOREST_CACHE_DIR"); dir && *dir) {
        cache_file = std::string(dir) + "/canon-cache.tsv";
        std::ifstream in(cache_file);
        if (in) graphs::canon_cache_load(in);
    }

    std::vector<const char*> argv_vec;
    argv_vec.push_back("hallforest");
    for (const auto& a : args) argv_vec.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv_vec.size()), argv_vec.data());
    } catch (const CLI::CallForHelp& e) {
        out = app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err = std::string(e.what()) + "\n";
        return 2;
    }

    const CategoryBackend& backend = hall::backend_by_name(opt.category);
    auto parse = [&](const std::string& text, Basis basis = Basis::delta) {
        return expr::parse_element(text, backend, basis);
    };

    try {
        if (canon->parsed()) {
            os << render(parse(canon_expr), opt) << "\n";
        } else if (enumerate->parsed()) {
            if (enum_trees < 0 && enum_forests < 0)
                throw CLI::ValidationError("enumerate", "one of --trees or --forests is required");
            if (opt.category != "trees")
                throw CLI::ValidationError("enumerate", "enumeration is over the tree category");
            if (enum_trees >= 0)
                for (const auto& t : trees::enumerate_trees(enum_trees))
                    os << t.encoding() << "\n";
            if (enum_forests >= 0)
                for (const auto& f : trees::enumerate_forests(enum_forests)) os << f.key() << "\n";
        } else if (product->parsed()) {
            os << render(hall_product(parse(lhs), parse(rhs)), opt) << "\n";
        } else if (bracket->parsed()) {
            auto a = parse(lhs), b = parse(rhs);
            if (a.terms().size() != 1 || b.terms().size() != 1)
                throw std::invalid_argument("bracket expects single classes");
            os << render(hall::hall_bracket(backend, a.terms().begin()->first,
                                            b.terms().begin()->first),
                         opt)
               << "\n";
        } else if (prelie->parsed()) {
            auto a = parse(lhs), b = parse(rhs);
            if (a.terms().size() != 1 || b.terms().size() != 1)
                throw std::invalid_argument("prelie expects single classes");
            const auto& ka = a.terms().begin()->first;
            const auto& kb = b.terms().begin()->first;
            if (!backend.is_indecomposable(ka) || !backend.is_indecomposable(kb))
                throw std::invalid_argument("prelie expects indecomposable (connected) classes");
            HallElement result(backend, Basis::delta);
            if (opt.category == "trees") {
                auto t1 = trees::parse_forest(ka).trees().front();
                auto t2 = trees::parse_forest(kb).trees().front();
                for (const auto& [t, c] : trees::prelie_tree(t1, t2))
                    result.add_term(trees::Forest(t).key(), Rat(static_cast<long>(c)));
            } else {
                for (const auto& [k, c] : graphs::prelie_graph(graphs::graph_from_key(ka),
                                                               graphs::graph_from_key(kb)))
                    result.add_term(k, Rat(static_cast<long>(c)));
            }
            os << render(result, opt) << "\n";
        } else if (kappa_cmd->parsed()) {
            os << hall::kappa(parse(lhs), parse(rhs)).get_str() << "\n";
        } else if (coproduct_cmd->parsed()) {
            auto cp = hall::coproduct(parse(single));
            if (opt.format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& [p, c] : cp)
                    j.push_back({{"left", p.first},
                                 {"right", p.second},
                                 {"num", c.get_num().get_str()},
                                 {"den", c.get_den().get_str()}});
                os << j.dump() << "\n";
            } else {
                bool first = true;
                for (const auto& [p, c] : cp) {
                    if (!first) os << " + ";
                    first = false;
                    os << c.get_str() << "*" << p.first << "(x)" << p.second;
                }
                if (first) os << "0";
                os << "\n";
            }
        } else if (antipode_cmd->parsed()) {
            os << render(hall::antipode(parse(single)), opt) << "\n";
        } else if (primitive_cmd->parsed()) {
            os << (hall::is_primitive_element(parse(single)) ? "yes" : "no") << "\n";
        } else if (degree_cmd->parsed()) {
            auto deg = hall::degree(parse(single));
            os << (deg ? deg->to_string() : std::string("mixed")) << "\n";
        } else if (k0_cmd->parsed()) {
            auto e = parse(single);
            if (e.terms().size() != 1) throw std::invalid_argument("k0 expects a single class");
            os << backend.k0(e.terms().begin()->first).to_string() << "\n";
        } else if (act_cmd->parsed()) {
            auto kind = reps::rep_kind_from_string(act_rep);
            if (act_side != "auto") {
                bool right = reps::is_right_action(kind);
                if ((act_side == "right") != right)
                    throw std::invalid_argument("--side " + act_side + " does not match --rep " +
                                                act_rep + " (" + (right ? "right" : "left") +
                                                " action)");
            }
            auto by = parse(act_by);
            if (by.terms().size() != 1)
                throw std::invalid_argument("--by must be a single indecomposable class");
            Basis basis = reps::acts_on_delta(kind) ? Basis::delta : Basis::phi;
            auto on = parse(act_on, basis);
            os << render(reps::act(kind, by.terms().begin()->first, on), opt) << "\n";
        } else if (cmpbr->parsed()) {
            auto a = parse(lhs), b = parse(rhs);
            if (a.terms().size() != 1 || b.terms().size() != 1)
                throw std::invalid_argument("compare-brackets expects single classes");
            const auto& ka = a.terms().begin()->first;
            const auto& kb = b.terms().begin()->first;
            if (!backend.is_indecomposable(ka) || !backend.is_indecomposable(kb))
                throw std::invalid_argument("compare-brackets expects indecomposable classes");
            // insertion-product bracket
            std::map<std::string, long long> ins;
            auto accumulate = [&](const std::string& x, const std::string& y, long long sign) {
                if (opt.category == "trees") {
                    auto t1 = trees::parse_forest(x).trees().front();
                    auto t2 = trees::parse_forest(y).trees().front();
                    for (const auto& [t, c] : trees::prelie_tree(t1, t2))
                        ins[trees::Forest(t).key()] += sign * c;
                } else {
                    for (const auto& [k, c] : graphs::prelie_graph(graphs::graph_from_key(x),
                                                                   graphs::graph_from_key(y)))
                        ins[k] += sign * c;
                }
            };
            accumulate(ka, kb, 1);
            accumulate(kb, ka, -1);
            for (auto it = ins.begin(); it != ins.end();)
                it = it->second == 0 ? ins.erase(it) : std::next(it);
            auto hall_br = hall::hall_bracket(backend, ka, kb);
            std::set<std::string> keys;
            for (const auto& [k, c] : ins) {
                (void)c;
                keys.insert(k);
            }
            for (const auto& [k, c] : hall_br.terms()) {
                (void)c;
                keys.insert(k);
            }
            bool same_support = true;
            for (const auto& k : keys) {
                Rat h = hall_br.coeff(k);
                long long i = ins.count(k) ? ins.at(k) : 0;
                if ((h == 0) != (i == 0)) same_support = false;
                os << k << ": insertion " << i << ", hall " << h.get_str();
                if (h != 0 && i != 0) os << ", ratio " << Rat(Rat(static_cast<long>(i)) / h).get_str();
                os << "\n";
            }
            os << "supports " << (same_support ? "identical" : "DIFFER") << "\n";
        } else if (conv->parsed()) {
            auto f = parse(lhs), g = parse(rhs);
            HallElement r = which == 1   ? hecke::convolution1(f, g)
                            : which == 2 ? hecke::convolution2(f, g)
                                         : hecke::convolution3(f, g);
            os << render(r, opt) << "\n";
        } else if (trunc->parsed()) {
            auto obj = parse(trunc_object);
            if (obj.terms().size() != 1)
                throw std::invalid_argument("--object must be a single class");
            auto ts = hecke::truncation_set(
                backend, obj.terms().begin()->first,
                trunc_mode == "quot" ? hecke::TruncMode::quot : hecke::TruncMode::sub);
            if (opt.format == "json") {
                nlohmann::json j;
                j["root"] = ts.root;
                j["mode"] = trunc_mode;
                j["members"] = ts.members;
                os << j.dump() << "\n";
            } else {
                os << (trunc_mode == "quot" ? "Quot(" : "<=(") << ts.root << ") has "
                   << ts.members.size() << " members\n";
                if (trunc_list)
                    for (const auto& m : ts.members) os << m << "\n";
            }
        } else if (at->parsed()) {
            auto obj = parse(at_object);
            if (obj.terms().size() != 1)
                throw std::invalid_argument("--object must be a single class");
            auto style = hecke::trunc_style_from_string(at_style);
            auto mode = at_mode == "quot" ? hecke::TruncMode::quot : hecke::TruncMode::sub;
            auto ts = hecke::truncation_set(backend, obj.terms().begin()->first, mode);
            auto by = parse(at_by);
            if (by.terms().size() != 1)
                throw std::invalid_argument("--by must be a single class");
            bool phi_style =
                style == hecke::TruncStyle::elim || style == hecke::TruncStyle::top_elim;
            auto on = parse(at_on, phi_style ? Basis::phi : Basis::delta);
            os << render(hecke::truncated_act(ts, style, by.terms().begin()->first, on), opt)
               << "\n";
        } else if (ds->parsed()) {
            auto a = parse(ds_a), b = parse(ds_b);
            if (a.terms().size() != 1 || b.terms().size() != 1)
                throw std::invalid_argument("diagnose-direct-sum expects single classes");
            auto checks = hecke::direct_sum_diagnostic(
                backend, a.terms().begin()->first, b.terms().begin()->first,
                ds_mode == "quot" ? hecke::TruncMode::quot : hecke::TruncMode::sub);
            os << (opt.format == "json" ? checks_to_json(checks) + "\n"
                                        : checks_to_text(checks));
            out = os.str();
            return checks_pass(checks) ? 0 : 1;
        } else if (contract_cmd->parsed()) {
            if (opt.category != "graphs")
                throw std::invalid_argument("contract expects --category graphs");
            auto e = parse(ct_graph);
            if (e.terms().size() != 1)
                throw std::invalid_argument("--graph must be a single class");
            graphs::FeynmanGraph g =
                graphs::builtin_graphs().count(ct_graph)
                    ? graphs::builtin_graph(ct_graph)
                    : graphs::graph_from_key(e.terms().begin()->first);
            std::vector<int> vs;
            std::stringstream ss(ct_vertices);
            std::string item;
            while (std::getline(ss, item, ',')) {
                int v = g.vertex_index(item);
                if (v < 0) throw std::invalid_argument("unknown vertex id '" + item + "'");
                vs.push_back(v);
            }
            auto q = graphs::contract(g, graphs::selection_from_vertices(g, vs));
            if (opt.format == "json")
                os << graphs::raw_to_json(q.to_raw()) << "\n";
            else
                os << graphs::canon_key(q) << "\n";
        } else if (validate_cmd->parsed()) {
            if (opt.category != "graphs")
                throw std::invalid_argument("validate expects --category graphs");
            graphs::RawGraph raw;
            if (!vg_expr.empty() && vg_expr[0] == '@') {
                std::ifstream in(vg_expr.substr(1));
                if (!in) throw std::invalid_argument("cannot open '" + vg_expr.substr(1) + "'");
                std::stringstream buf;
                buf << in.rdbuf();
                raw = graphs::raw_from_json(buf.str());
            } else if (graphs::builtin_graphs().count(vg_expr)) {
                raw = graphs::builtin_graphs().at(vg_expr);
            } else if (graphs::reducible_examples().count(vg_expr)) {
                raw = graphs::reducible_examples().at(vg_expr);
            } else {
                raw = graphs::graph_from_key(vg_expr).to_raw();
            }
            auto violations = graphs::validate_raw(raw);
            if (opt.format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& v : violations)
                    j.push_back({{"rule", v.rule}, {"where", v.where}});
                os << j.dump() << "\n";
            } else if (violations.empty()) {
                os << "valid\n";
            } else {
                for (const auto& v : violations) os << v.rule << ": " << v.where << "\n";
            }
            out = os.str();
            return violations.empty() ? 0 : 1;
        } else if (subgraphs_cmd->parsed()) {
            if (opt.category != "graphs")
                throw std::invalid_argument("subgraphs expects --category graphs");
            auto e = parse(vg_expr);
            if (e.terms().size() != 1)
                throw std::invalid_argument("subgraphs expects a single class");
            auto g = graphs::graph_from_key(e.terms().begin()->first);
            for (const auto& sel : graphs::subgraph_selections(g))
                os << graphs::canon_key(graphs::induced_subgraph(g, sel)) << "\n";
        } else if (builtins_cmd->parsed()) {
            for (const auto& [name, raw] : graphs::builtin_graphs()) {
                os << name << " " << graphs::canon_key(graphs::FeynmanGraph::from_raw(raw))
                   << "\n";
            }
        } else if (verify_cmd->parsed()) {
            auto start = std::chrono::steady_clock::now();
            auto report = verify::run_suite(suite, opt.category, max_degree, seed);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            if (opt.format == "json")
                os << report.to_json(opt.timing ? ms : -1) << "\n";
            else
                os << report.to_text();
            err += "wall time: " + std::to_string(ms) + " ms\n";
            out = os.str();
            return report.passed() ? 0 : 1;
        }
    } catch (const expr::ParseError& e) {
        err = std::string("parse error: ") + e.what() + "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err = std::string(e.what()) + "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err = std::string("error: ") + e.what() + "\n";
        return 2;
    } catch (const std::exception& e) {
        err = std::string("error: ") + e.what() + "\n";
        return 1;
    }
    out = os.str();
    return 0;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    std::string out, err;
    int code = run(args, out, err);
    std::cout << out;
    std::cerr << err;
    if (const char* dir = std::getenv("HALLFOREST_CACHE_DIR"); dir && *dir) {
        std::ofstream of(std::string(dir) + "/canon-cache.tsv", std::ios::trunc);
        if (of) graphs::canon_cache_save(of);
    }
    return code;
}

}  // namespace hallforest::cli
