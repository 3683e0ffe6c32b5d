#include "hallforest/graph_morphism.hpp"

#include <algorithm>
#include <set>

namespace hallforest::graphs {

namespace {

Selection full_selection(const FeynmanGraph& g) {
    Selection sel;
    for (const auto& comp : g.components()) sel.push_back(comp);
    std::sort(sel.begin(), sel.end());
    return sel;
}

}  // namespace

bool same_graph_object(const FeynmanGraph& a, const FeynmanGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.half_count() != b.half_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (b.vertex_index(a.vertex_id(v)) < 0) return false;
    for (int h = 0; h < a.half_count(); ++h) {
        int hb = b.half_index(a.half_id(h));
        if (hb < 0) return false;
        if (b.vertex_id(b.half_vertex(hb)) != a.vertex_id(a.half_vertex(h))) return false;
        int pa = a.partner(h), pb = b.partner(hb);
        if ((pa < 0) != (pb < 0)) return false;
        if (pa >= 0 && b.half_id(pb) != a.half_id(pa)) return false;
    }
    return true;
}

GraphMorphism::GraphMorphism(FeynmanGraph src, FeynmanGraph tgt, Selection g1, Selection g2,
                             std::map<std::string, std::string> vm,
                             std::map<std::string, std::string> hm)
    : source(std::move(src)),
      target(std::move(tgt)),
      gamma1(std::move(g1)),
      gamma2(std::move(g2)),
      vmap(std::move(vm)),
      hmap(std::move(hm)) {
    if (!quotient_defined(source, gamma1))
        throw GraphError("morphism: gamma1 is not a subobject of the source");
    if (!selection_valid(target, gamma2))
        throw GraphError("morphism: gamma2 is not a subgraph of the target");
    FeynmanGraph q = contract(source, gamma1);
    FeynmanGraph img = induced_subgraph(target, gamma2);
    if (q.vertex_count() != img.vertex_count() || q.half_count() != img.half_count())
        throw GraphError("morphism: quotient and gamma2 have different sizes");
    if (vmap.size() != static_cast<std::size_t>(q.vertex_count()) ||
        hmap.size() != static_cast<std::size_t>(q.half_count()))
        throw GraphError("morphism: map sizes do not match the quotient");
    std::set<std::string> seen_v, seen_h;
    for (const auto& [a, b] : vmap) {
        if (q.vertex_index(a) < 0)
            throw GraphError("morphism: unknown quotient vertex '" + a + "'");
        if (img.vertex_index(b) < 0)
            throw GraphError("morphism: image vertex outside gamma2: '" + b + "'");
        if (!seen_v.insert(b).second) throw GraphError("morphism: vertex map not injective");
    }
    for (const auto& [a, b] : hmap) {
        int qh = q.half_index(a);
        if (qh < 0) throw GraphError("morphism: unknown quotient half-edge '" + a + "'");
        int ih = img.half_index(b);
        if (ih < 0) throw GraphError("morphism: image half-edge outside gamma2: '" + b + "'");
        if (!seen_h.insert(b).second) throw GraphError("morphism: half map not injective");
        if (vmap.at(q.vertex_id(q.half_vertex(qh))) != img.vertex_id(img.half_vertex(ih)))
            throw GraphError("morphism: map breaks vertex incidence at '" + a + "'");
        int qp = q.partner(qh);
        int ip = img.partner(ih);  // pairing inside the subgraph structure
        if ((qp >= 0) != (ip >= 0))
            throw GraphError("morphism: map breaks pairing at '" + a + "'");
        if (qp >= 0 && hmap.at(q.half_id(qp)) != img.half_id(ip))
            throw GraphError("morphism: map breaks pairing at '" + a + "'");
    }
}

bool GraphMorphism::operator==(const GraphMorphism& o) const {
    return same_graph_object(source, o.source) && same_graph_object(target, o.target) &&
           gamma1 == o.gamma1 && gamma2 == o.gamma2 && vmap == o.vmap && hmap == o.hmap;
}

GraphMorphism graph_identity(const FeynmanGraph& g) {
    std::map<std::string, std::string> vm, hm;
    for (int v = 0; v < g.vertex_count(); ++v) vm[g.vertex_id(v)] = g.vertex_id(v);
    for (int h = 0; h < g.half_count(); ++h) hm[g.half_id(h)] = g.half_id(h);
    return GraphMorphism(g, g, {}, full_selection(g), std::move(vm), std::move(hm));
}

GraphMorphism graph_zero(const FeynmanGraph& g1, const FeynmanGraph& g2) {
    return GraphMorphism(g1, g2, full_selection(g1), {}, {}, {});
}

GraphMorphism graph_compose(const GraphMorphism& m1, const GraphMorphism& m2) {
    if (!same_graph_object(m1.target, m2.source))
        throw GraphError("graph_compose: middle objects differ");
    const FeynmanGraph& g1 = m1.source;
    const FeynmanGraph& g2 = m2.source;
    const FeynmanGraph& g3 = m2.target;

    // tau2 ∩ gamma2 in the middle object, regrouped into connected pieces
    std::set<int> tau2;
    for (const auto& piece : m2.gamma1) tau2.insert(piece.begin(), piece.end());
    std::vector<int> inter_vertices;
    for (const auto& piece : m1.gamma2)
        for (int v : piece)
            if (tau2.count(v)) inter_vertices.push_back(v);
    FeynmanGraph q1 = contract(g1, m1.gamma1);
    // sigma = f^{-1}(intersection) as a vertex set of q1
    std::vector<int> sigma_vertices;
    {
        std::set<std::string> inter_ids;
        for (int v : inter_vertices) inter_ids.insert(g2.vertex_id(v));
        for (int v = 0; v < q1.vertex_count(); ++v)
            if (inter_ids.count(m1.vmap.at(q1.vertex_id(v)))) sigma_vertices.push_back(v);
    }
    // xi = gamma1 together with the originals of sigma; regroup pieces by
    // (a) pairs inside gamma1 pieces, (b) surviving pairs internal to a
    // sigma piece of q1
    Selection sigma = selection_from_vertices(q1, sigma_vertices);
    Selection xi;
    {
        std::map<int, int> sigma_piece;  // q1 vertex -> sigma piece index
        for (std::size_t i = 0; i < sigma.size(); ++i)
            for (int v : sigma[i]) sigma_piece[v] = static_cast<int>(i);
        std::map<int, int> gamma_piece;  // g1 vertex -> gamma1 piece index
        for (std::size_t i = 0; i < m1.gamma1.size(); ++i)
            for (int v : m1.gamma1[i]) gamma_piece[v] = static_cast<int>(i);
        // externals of each gamma1 piece
        std::vector<std::vector<int>> piece_ext(m1.gamma1.size());
        for (std::size_t i = 0; i < m1.gamma1.size(); ++i) {
            std::set<int> cv(m1.gamma1[i].begin(), m1.gamma1[i].end());
            for (int v : m1.gamma1[i])
                for (int h : g1.halves_at(v)) {
                    int p = g1.partner(h);
                    if (p < 0 || !cv.count(g1.half_vertex(p))) piece_ext[i].push_back(h);
                }
        }
        // follows a piece external through chains of contracted 2-ext
        // pieces to the surviving q1 half (or -1 if it ends external)
        auto resolve = [&](int ext_half) {
            int cur = ext_half;
            for (int guard = 0; guard <= g1.half_count(); ++guard) {
                int p = g1.partner(cur);
                if (p < 0) return -1;
                if (q1.half_index(g1.half_id(p)) >= 0) return p;
                auto it = gamma_piece.find(g1.half_vertex(p));
                if (it == gamma_piece.end()) return -1;  // consumed internally
                const auto& exts = piece_ext[static_cast<std::size_t>(it->second)];
                if (exts.size() != 2) return -1;  // 3-ext piece keeps its halves
                cur = (exts[0] == p) ? exts[1] : exts[0];
            }
            return -1;
        };
        // image of a gamma1 piece inside q1: the collapse vertex (3-ext) or
        // the endpoints of the joined edge (2-ext)
        auto piece_image = [&](std::size_t i) {
            std::vector<int> vs;
            const auto& exts = piece_ext[i];
            if (exts.size() == 3) {
                // the new vertex carries the piece's externals
                for (int h : exts) {
                    int qh = q1.half_index(g1.half_id(h));
                    if (qh >= 0) {
                        vs.push_back(q1.half_vertex(qh));
                        break;
                    }
                }
            } else {
                for (int h : exts) {
                    int r = resolve(h);
                    if (r >= 0) {
                        int qh = q1.half_index(g1.half_id(r));
                        if (qh >= 0) vs.push_back(q1.half_vertex(qh));
                    }
                }
            }
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            return vs;
        };
        // each sigma piece pulls back to its originals plus every gamma1
        // piece whose image lies (nonempty) inside it
        std::vector<bool> absorbed(m1.gamma1.size(), false);
        for (std::size_t t = 0; t < sigma.size(); ++t) {
            std::set<int> tset(sigma[t].begin(), sigma[t].end());
            Piece pulled;
            for (int v : sigma[t]) {
                int orig = g1.vertex_index(q1.vertex_id(v));
                if (orig >= 0) pulled.push_back(orig);
            }
            for (std::size_t i = 0; i < m1.gamma1.size(); ++i) {
                auto img = piece_image(i);
                if (img.empty()) continue;
                bool inside = true;
                for (int v : img)
                    if (!tset.count(v)) inside = false;
                if (inside) {
                    pulled.insert(pulled.end(), m1.gamma1[i].begin(), m1.gamma1[i].end());
                    absorbed[i] = true;
                }
            }
            std::sort(pulled.begin(), pulled.end());
            xi.push_back(std::move(pulled));
        }
        for (std::size_t i = 0; i < m1.gamma1.size(); ++i)
            if (!absorbed[i]) xi.push_back(m1.gamma1[i]);
        std::sort(xi.begin(), xi.end());
    }
    if (!quotient_defined(g1, xi))
        throw GraphError("graph_compose: induced subgraph xi is not a subobject (recipe gap)");
    FeynmanGraph q13 = contract(g1, xi);
    FeynmanGraph q2 = contract(g2, m2.gamma1);

    // chase ids through f then g; complete new-vertex images by incidences
    std::map<std::string, std::string> vm, hm;
    for (int h = 0; h < q13.half_count(); ++h) {
        const std::string& id = q13.half_id(h);
        if (q1.half_index(id) < 0) continue;
        auto fit = m1.hmap.find(id);
        if (fit == m1.hmap.end()) continue;
        if (q2.half_index(fit->second) < 0) continue;
        hm[id] = m2.hmap.at(fit->second);
    }
    for (int v = 0; v < q13.vertex_count(); ++v) {
        const std::string& id = q13.vertex_id(v);
        if (q1.vertex_index(id) < 0) continue;
        auto fit = m1.vmap.find(id);
        if (fit == m1.vmap.end()) continue;
        if (q2.vertex_index(fit->second) < 0) continue;
        vm[id] = m2.vmap.at(fit->second);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int h = 0; h < q13.half_count(); ++h) {
            const std::string& id = q13.half_id(h);
            const std::string& vid = q13.vertex_id(q13.half_vertex(h));
            if (hm.count(id) && !vm.count(vid)) {
                int th = g3.half_index(hm.at(id));
                vm[vid] = g3.vertex_id(g3.half_vertex(th));
                changed = true;
            }
            int p = q13.partner(h);
            if (p >= 0 && hm.count(id) && !hm.count(q13.half_id(p))) {
                int th = g3.half_index(hm.at(id));
                int tp = g3.partner(th);
                if (tp >= 0) {
                    hm[q13.half_id(p)] = g3.half_id(tp);
                    changed = true;
                }
            }
        }
    }
    if (vm.size() != static_cast<std::size_t>(q13.vertex_count()) ||
        hm.size() != static_cast<std::size_t>(q13.half_count()))
        throw GraphError("graph_compose: could not complete the composite isomorphism");

    std::vector<int> rho_vertices;
    for (const auto& [a, b] : vm) {
        (void)a;
        rho_vertices.push_back(g3.vertex_index(b));
    }
    // rho pieces mirror the component structure of the quotient q13
    Selection rho;
    for (const auto& comp : q13.components()) {
        Piece piece;
        for (int v : comp) piece.push_back(g3.vertex_index(vm.at(q13.vertex_id(v))));
        std::sort(piece.begin(), piece.end());
        rho.push_back(std::move(piece));
    }
    std::sort(rho.begin(), rho.end());
    return GraphMorphism(g1, g3, std::move(xi), std::move(rho), std::move(vm), std::move(hm));
}

GraphMorphism graph_kernel(const GraphMorphism& m) {
    FeynmanGraph sub = induced_subgraph(m.source, m.gamma1);
    std::map<std::string, std::string> vm, hm;
    for (int v = 0; v < sub.vertex_count(); ++v) vm[sub.vertex_id(v)] = sub.vertex_id(v);
    for (int h = 0; h < sub.half_count(); ++h) hm[sub.half_id(h)] = sub.half_id(h);
    return GraphMorphism(sub, m.source, {}, m.gamma1, std::move(vm), std::move(hm));
}

GraphMorphism graph_cokernel(const GraphMorphism& m) {
    if (!quotient_defined(m.target, m.gamma2))
        throw GraphError("graph_cokernel: gamma2 has no defined quotient");
    FeynmanGraph q = contract(m.target, m.gamma2);
    std::map<std::string, std::string> vm, hm;
    for (int v = 0; v < q.vertex_count(); ++v) vm[q.vertex_id(v)] = q.vertex_id(v);
    for (int h = 0; h < q.half_count(); ++h) hm[q.half_id(h)] = q.half_id(h);
    return GraphMorphism(m.target, q, m.gamma2, full_selection(q), std::move(vm), std::move(hm));
}

GraphFactorization graph_image_factorization(const GraphMorphism& m) {
    FeynmanGraph q = contract(m.source, m.gamma1);
    std::map<std::string, std::string> vm, hm;
    for (int v = 0; v < q.vertex_count(); ++v) vm[q.vertex_id(v)] = q.vertex_id(v);
    for (int h = 0; h < q.half_count(); ++h) hm[q.half_id(h)] = q.half_id(h);
    GraphMorphism epi(m.source, q, m.gamma1, full_selection(q), vm, hm);
    GraphMorphism mono(q, m.target, {}, m.gamma2, m.vmap, m.hmap);
    return GraphFactorization{std::move(epi), std::move(mono)};
}

}  // namespace hallforest::graphs
