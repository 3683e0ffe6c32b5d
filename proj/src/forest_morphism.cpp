#include "hallforest/forest_morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallforest::trees {

bool same_labeled_object(const LabeledForest& a, const LabeledForest& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v) {
        int w = b.index_of(a.label(v));
        if (w < 0) return false;
        int pa = a.parent(v), pb = b.parent(w);
        if ((pa < 0) != (pb < 0)) return false;
        if (pa >= 0 && a.label(pa) != b.label(pb)) return false;
    }
    return true;
}

ForestMorphism::ForestMorphism(LabeledForest src, LabeledForest tgt, Cut cut1, Cut cut2,
                               std::map<std::string, std::string> vmap)
    : source(std::move(src)),
      target(std::move(tgt)),
      c1(std::move(cut1)),
      c2(std::move(cut2)),
      vertex_map(std::move(vmap)) {
    require_admissible(source, c1);
    require_admissible(target, c2);
    auto r1 = cut_upset(source, c1);
    auto p2 = cut_upset(target, c2);  // true = R part of target; P = complement
    // domain check
    std::size_t dom = 0;
    for (int v = 0; v < source.vertex_count(); ++v)
        if (r1[v]) ++dom;
    if (vertex_map.size() != dom)
        throw std::invalid_argument("morphism map does not cover R_{C1}(source)");
    std::map<std::string, int> hit;
    for (const auto& [a, b] : vertex_map) {
        int v = source.index_of(a);
        if (v < 0 || !r1[v])
            throw std::invalid_argument("morphism map domain outside R_{C1}: '" + a + "'");
        int w = target.index_of(b);
        if (w < 0 || p2[w])
            throw std::invalid_argument("morphism map image outside P_{C2}: '" + b + "'");
        if (++hit[b] > 1) throw std::invalid_argument("morphism map not injective at '" + b + "'");
    }
    // incidence and component-root preservation
    for (const auto& [a, b] : vertex_map) {
        int v = source.index_of(a);
        int w = target.index_of(b);
        int pv = source.parent(v);
        bool v_is_comp_root = (pv < 0);  // roots of R_{C1} components are forest roots
        int pw = target.parent(w);
        // w is a component root of P_{C2} iff the edge above it is cut or it
        // is the root of a full-flagged tree
        bool w_is_comp_root = (pw < 0) || c2.edges.count(target.label(w)) > 0;
        if (v_is_comp_root != w_is_comp_root)
            throw std::invalid_argument("morphism map does not preserve component roots at '" + a +
                                        "'");
        if (!v_is_comp_root) {
            auto it = vertex_map.find(source.label(pv));
            if (it == vertex_map.end() || target.index_of(it->second) != pw)
                throw std::invalid_argument("morphism map does not preserve incidences at '" + a +
                                            "'");
        }
    }
}

bool ForestMorphism::operator==(const ForestMorphism& o) const {
    return same_labeled_object(source, o.source) && same_labeled_object(target, o.target) &&
           c1 == o.c1 && c2 == o.c2 && vertex_map == o.vertex_map;
}

ForestMorphism identity_morphism(const LabeledForest& f) {
    std::map<std::string, std::string> id;
    for (const auto& l : f.labels()) id[l] = l;
    return ForestMorphism(f, f, empty_cut(), full_cut(f), std::move(id));
}

ForestMorphism zero_morphism(const LabeledForest& f1, const LabeledForest& f2) {
    return ForestMorphism(f1, f2, full_cut(f1), empty_cut(), {});
}

ForestMorphism compose(const ForestMorphism& m1, const ForestMorphism& m2) {
    if (!same_labeled_object(m1.target, m2.source))
        throw std::invalid_argument("compose: middle objects differ");
    const LabeledForest& f1 = m1.source;
    const LabeledForest& f2 = m2.source;  // use m2's arena for middle lookups
    const LabeledForest& f3 = m2.target;

    auto r1 = cut_upset(f1, m1.c1);
    auto pd2 = cut_upset(f2, m2.c1);  // true = R_{D2}; P_{D2} = complement

    // survivors in F1: v in R_{C1} with f(v) in R_{D2}
    std::vector<bool> s1(f1.vertex_count(), false);
    std::map<std::string, std::string> h;
    for (int v = 0; v < f1.vertex_count(); ++v) {
        if (!r1[v]) continue;
        const std::string& mid = m1.vertex_map.at(f1.label(v));
        int w = f2.index_of(mid);
        if (pd2[w]) {
            s1[v] = true;
            h[f1.label(v)] = m2.vertex_map.at(mid);
        }
    }
    Cut e1 = upset_to_cut(f1, s1);

    // image in F3 is a down-set; E3 cuts just above it
    std::vector<bool> s3(f3.vertex_count(), false);
    for (const auto& [a, b] : h) {
        (void)a;
        s3[f3.index_of(b)] = true;
    }
    std::vector<bool> keep3(f3.vertex_count());
    for (int v = 0; v < f3.vertex_count(); ++v) keep3[v] = !s3[v];
    Cut e3 = upset_to_cut(f3, keep3);
    return ForestMorphism(f1, f3, std::move(e1), std::move(e3), std::move(h));
}

ForestMorphism kernel(const ForestMorphism& m) {
    auto pieces = split_labeled(m.source, m.c1);
    std::map<std::string, std::string> id;
    for (const auto& l : pieces.p.labels()) id[l] = l;
    return ForestMorphism(pieces.p, m.source, empty_cut(), m.c1, std::move(id));
}

ForestMorphism cokernel(const ForestMorphism& m) {
    auto pieces = split_labeled(m.target, m.c2);
    std::map<std::string, std::string> id;
    for (const auto& l : pieces.r.labels()) id[l] = l;
    return ForestMorphism(m.target, pieces.r, m.c2, full_cut(pieces.r), std::move(id));
}

Factorization image_factorization(const ForestMorphism& m) {
    auto pieces = split_labeled(m.source, m.c1);
    const LabeledForest& im = pieces.r;
    std::map<std::string, std::string> id;
    for (const auto& l : im.labels()) id[l] = l;
    ForestMorphism epi(m.source, im, m.c1, full_cut(im), std::move(id));
    ForestMorphism mono(im, m.target, empty_cut(), m.c2, m.vertex_map);
    return Factorization{std::move(epi), std::move(mono)};
}

}  // namespace hallforest::trees
