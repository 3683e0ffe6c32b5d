#include <doctest.h>

#include <set>

#include "hallforest/graph_morphism.hpp"

using namespace hallforest::graphs;

namespace {

Selection selection_of(const FeynmanGraph& g, const std::vector<std::string>& ids) {
    std::vector<int> vs;
    for (const auto& id : ids) vs.push_back(g.vertex_index(id));
    return selection_from_vertices(g, vs);
}

// the inclusion gamma_eg -> Gamma_eg as a morphism (gamma1 = ∅)
GraphMorphism inclusion_gamma_eg() {
    auto gamma = builtin_graph("gamma_eg");
    auto big = builtin_graph("Gamma_eg");
    std::map<std::string, std::string> vm, hm;
    for (int v = 0; v < gamma.vertex_count(); ++v) vm[gamma.vertex_id(v)] = gamma.vertex_id(v);
    for (int h = 0; h < gamma.half_count(); ++h) hm[gamma.half_id(h)] = gamma.half_id(h);
    return GraphMorphism(gamma, big, {}, selection_of(big, {"v3", "v4"}), std::move(vm),
                         std::move(hm));
}

}  // namespace

TEST_CASE("identity laws") {
    for (const char* name : {"B2", "T3", "Y", "Gamma_eg"}) {
        auto g = builtin_graph(name);
        auto id = graph_identity(g);
        CHECK(graph_compose(id, id) == id);
    }
    auto inc = inclusion_gamma_eg();
    CHECK(graph_compose(graph_identity(inc.source), inc) == inc);
    CHECK(graph_compose(inc, graph_identity(inc.target)) == inc);
}

TEST_CASE("kernel of the identity has empty source") {
    auto id = graph_identity(builtin_graph("T3"));
    CHECK(graph_kernel(id).source.is_empty());
    CHECK(graph_cokernel(id).target.is_empty());
}

TEST_CASE("cokernel of the worked inclusion is the displayed contraction") {
    auto inc = inclusion_gamma_eg();
    auto ck = graph_cokernel(inc);
    auto want = contract(builtin_graph("Gamma_eg"),
                         selection_of(builtin_graph("Gamma_eg"), {"v3", "v4"}));
    CHECK(canon_key(ck.target) == canon_key(want));
    CHECK(ck.target.vertex_count() == 4);
    CHECK(ck.target.loop_count() == 2);
}

TEST_CASE("kernel then morphism is zero; morphism then cokernel is zero") {
    // a projection morphism: Gamma_eg -> Gamma_eg/gamma_eg (gamma2 = full target)
    auto big = builtin_graph("Gamma_eg");
    auto gsel = selection_of(big, {"v3", "v4"});
    auto q = contract(big, gsel);
    std::vector<int> allv;
    for (int v = 0; v < q.vertex_count(); ++v) allv.push_back(v);
    Selection full = selection_from_vertices(q, allv);
    std::map<std::string, std::string> vm, hm;
    for (int v = 0; v < q.vertex_count(); ++v) vm[q.vertex_id(v)] = q.vertex_id(v);
    for (int h = 0; h < q.half_count(); ++h) hm[q.half_id(h)] = q.half_id(h);
    GraphMorphism proj(big, q, gsel, full, vm, hm);

    auto k = graph_kernel(proj);
    auto z = graph_compose(k, proj);
    CHECK(z.vmap.empty());
    CHECK(z == graph_zero(k.source, q));

    auto ck = graph_cokernel(proj);  // q -> ∅
    auto z2 = graph_compose(proj, ck);
    CHECK(z2.vmap.empty());
}

TEST_CASE("mono-epi factorization recomposes") {
    auto inc = inclusion_gamma_eg();
    auto [epi, mono] = graph_image_factorization(inc);
    CHECK(graph_compose(epi, mono) == inc);

    auto big = builtin_graph("Gamma_eg");
    auto gsel = selection_of(big, {"v3", "v4"});
    auto q = contract(big, gsel);
    std::vector<int> allv;
    for (int v = 0; v < q.vertex_count(); ++v) allv.push_back(v);
    Selection full = selection_from_vertices(q, allv);
    std::map<std::string, std::string> vm, hm;
    for (int v = 0; v < q.vertex_count(); ++v) vm[q.vertex_id(v)] = q.vertex_id(v);
    for (int h = 0; h < q.half_count(); ++h) hm[q.half_id(h)] = q.half_id(h);
    GraphMorphism proj(big, q, gsel, full, vm, hm);
    auto [epi2, mono2] = graph_image_factorization(proj);
    CHECK(graph_compose(epi2, mono2) == proj);
}

TEST_CASE("mismatched middle objects rejected") {
    auto inc = inclusion_gamma_eg();
    auto other = graph_identity(builtin_graph("B2"));
    CHECK_THROWS_AS(graph_compose(inc, other), GraphError);
}

TEST_CASE("inclusion chains compose: subobject of a subobject") {
    // bubble {d,e} inside X, X inside nothing further; compose the bubble
    // inclusion with X's identity and with a projection
    auto x = builtin_graph("X");
    auto bub = induced_subgraph(x, selection_of(x, {"d", "e"}));
    std::map<std::string, std::string> vm, hm;
    for (int v = 0; v < bub.vertex_count(); ++v) vm[bub.vertex_id(v)] = bub.vertex_id(v);
    for (int h = 0; h < bub.half_count(); ++h) hm[bub.half_id(h)] = bub.half_id(h);
    GraphMorphism inc(bub, x, {}, selection_of(x, {"d", "e"}), vm, hm);
    CHECK(graph_compose(inc, graph_identity(x)) == inc);

    // project X onto X/bubble = T3 and compose: bubble -> X -> T3 must be zero
    auto q = contract(x, selection_of(x, {"d", "e"}));
    std::vector<int> allv;
    for (int v = 0; v < q.vertex_count(); ++v) allv.push_back(v);
    Selection full = selection_from_vertices(q, allv);
    std::map<std::string, std::string> vm2, hm2;
    for (int v = 0; v < q.vertex_count(); ++v) vm2[q.vertex_id(v)] = q.vertex_id(v);
    for (int h = 0; h < q.half_count(); ++h) hm2[q.half_id(h)] = q.half_id(h);
    GraphMorphism proj(x, q, selection_of(x, {"d", "e"}), full, vm2, hm2);
    auto z = graph_compose(inc, proj);
    CHECK(z.vmap.empty());
}
