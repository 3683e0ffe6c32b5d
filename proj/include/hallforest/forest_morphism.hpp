#pragma once

#include <map>
#include <string>

#include "hallforest/labeled_forest.hpp"

namespace hallforest::trees {

/// A morphism F1 -> F2 in the category of labeled rooted forests: a pair of
/// admissible cuts and an isomorphism f: R_{C1}(F1) ≅ P_{C2}(F2) given as a
/// label-to-label map. The constructor validates everything: admissibility,
/// that the map is a bijection between exactly those vertex sets, and that
/// it preserves component roots and parent-child incidences.
struct ForestMorphism {
    LabeledForest source, target;
    Cut c1, c2;
    std::map<std::string, std::string> vertex_map;

    ForestMorphism(LabeledForest src, LabeledForest tgt, Cut cut1, Cut cut2,
                   std::map<std::string, std::string> vmap);

    bool operator==(const ForestMorphism& o) const;
};

/// The identity (C_null, C_full, id): F -> F.
ForestMorphism identity_morphism(const LabeledForest& f);

/// The zero morphism (C_full, C_null, {}): F1 -> F2.
ForestMorphism zero_morphism(const LabeledForest& f1, const LabeledForest& f2);

/// Composition m2 ∘ m1 for m1: F1 -> F2, m2: F2 -> F3. Requires
/// m1.target == m2.source (same labeled object). The result is the triple
/// (E1, E3, g∘f) where E1 is induced by min(C2, D2) and E3 by max(C2, D2):
/// concretely, the composite's root part is the part of R_{C1}(F1) whose
/// image under f avoids P_{D2}(F2).
ForestMorphism compose(const ForestMorphism& m1, const ForestMorphism& m2);

/// Ker(Ψ) = (C_null, C1, id): P_{C1}(F1) -> F1.
ForestMorphism kernel(const ForestMorphism& m);

/// Coker(Ψ) = (C2, C_full, id): F2 -> R_{C2}(F2).
ForestMorphism cokernel(const ForestMorphism& m);

/// Mono-epi factorization m = mono ∘ epi through Im = R_{C1}(F1).
struct Factorization {
    ForestMorphism epi;   // F1 -> Im
    ForestMorphism mono;  // Im -> F2
};
Factorization image_factorization(const ForestMorphism& m);

/// Structural equality of labeled forests (same labels, same incidences,
/// same root order up to set equality of roots).
bool same_labeled_object(const LabeledForest& a, const LabeledForest& b);

}  // namespace hallforest::trees
