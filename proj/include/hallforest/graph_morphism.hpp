#pragma once

#include <map>
#include <string>

#include "hallforest/feyngraph.hpp"

namespace hallforest::graphs {

/// A morphism Γ1 -> Γ2 in the Feynman-graph category: subgraphs γ1 ⊆ Γ1
/// (a subobject, so Γ1/γ1 exists) and γ2 ⊆ Γ2, plus an isomorphism
/// f: Γ1/γ1 ≅ γ2 given by id maps on vertices and half-edges of the
/// quotient. The constructor validates all of it.
struct GraphMorphism {
    FeynmanGraph source, target;
    Selection gamma1;  // subobject of source
    Selection gamma2;  // subgraph of target
    std::map<std::string, std::string> vmap;  // quotient vertex id -> target vertex id
    std::map<std::string, std::string> hmap;  // quotient half id -> target half id

    GraphMorphism(FeynmanGraph src, FeynmanGraph tgt, Selection g1, Selection g2,
                  std::map<std::string, std::string> vm, std::map<std::string, std::string> hm);

    bool operator==(const GraphMorphism& o) const;
};

/// (∅, Γ, id): Γ -> Γ.
GraphMorphism graph_identity(const FeynmanGraph& g);

/// (Γ1, ∅, {}): Γ1 -> Γ2.
GraphMorphism graph_zero(const FeynmanGraph& g1, const FeynmanGraph& g2);

/// Composition m2 ∘ m1 following the subgraph-intersection recipe. Throws
/// GraphError when an intermediate subgraph is invalid (the intersection
/// of two subgraphs need not be one, so not every pair composes).
GraphMorphism graph_compose(const GraphMorphism& m1, const GraphMorphism& m2);

/// Ker(Φ) = (∅, γ1, id): γ1 -> Γ1.
GraphMorphism graph_kernel(const GraphMorphism& m);

/// Coker(Φ) = (γ2, Γ2/γ2, id): Γ2 -> Γ2/γ2. Requires γ2 to be a subobject.
GraphMorphism graph_cokernel(const GraphMorphism& m);

struct GraphFactorization {
    GraphMorphism epi;   // Γ1 -> Γ1/γ1
    GraphMorphism mono;  // Γ1/γ1 -> Γ2
};
GraphFactorization graph_image_factorization(const GraphMorphism& m);

bool same_graph_object(const FeynmanGraph& a, const FeynmanGraph& b);

}  // namespace hallforest::graphs
