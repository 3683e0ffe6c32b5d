#include "hallforest/hall.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "hallforest/feyngraph.hpp"
#include "hallforest/rooted_tree.hpp"
#include "hallforest/tree_algebra.hpp"

namespace hallforest::hall {

Grading Grading::operator+(const Grading& o) const {
    Grading out = *this;
    out.scalar += o.scalar;
    for (const auto& [k, c] : o.formal) {
        out.formal[k] += c;
        if (out.formal[k] == 0) out.formal.erase(k);
    }
    return out;
}

Grading Grading::operator-(const Grading& o) const {
    Grading out = *this;
    out.scalar -= o.scalar;
    for (const auto& [k, c] : o.formal) {
        out.formal[k] -= c;
        if (out.formal[k] == 0) out.formal.erase(k);
    }
    return out;
}

std::string Grading::to_string() const {
    if (formal.empty()) return std::to_string(scalar);
    std::ostringstream os;
    os << scalar << ':';
    bool first = true;
    for (const auto& [k, c] : formal) {
        if (!first) os << '+';
        first = false;
        os << c << "[" << k << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// tree backend
// ---------------------------------------------------------------------------

namespace {

using trees::Forest;
using trees::RootedTree;

class TreeBackend final : public CategoryBackend {
public:
    std::string name() const override { return "trees"; }
    IsoKey empty_key() const override { return "{}"; }

    bool is_valid_key(const IsoKey& k) const override {
        try {
            trees::parse_forest(k);
            return true;
        } catch (const std::exception&) {
            return false;
        }
    }

    IsoKey canonical(const IsoKey& k) const override { return trees::parse_forest(k).key(); }

    std::vector<SplitTerm> split(const IsoKey& m) const override {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = split_cache_.find(m);
            if (it != split_cache_.end()) return it->second;
        }
        std::vector<SplitTerm> out;
        for (const auto& s : trees::forest_splits(trees::parse_forest(m)))
            out.push_back(SplitTerm{s.sub.key(), s.quot.key(), s.count});
        std::lock_guard<std::mutex> lock(mutex_);
        return split_cache_.emplace(m, std::move(out)).first->second;
    }

    std::vector<IsoKey> extension_candidates(const IsoKey& a, const IsoKey& b) const override {
        std::vector<IsoKey> out;
        for (const auto& f : trees::graft_candidates(trees::parse_forest(a), trees::parse_forest(b)))
            out.push_back(f.key());
        return out;
    }

    long long subobject_count(const IsoKey& a, const IsoKey& b, const IsoKey& m) const override {
        for (const auto& s : split(m))
            if (s.sub == a && s.quot == b) return s.count;
        return 0;
    }

    std::vector<IsoKey> components(const IsoKey& m) const override {
        std::vector<IsoKey> out;
        Forest f = trees::parse_forest(m);
        for (const auto& t : f.trees()) out.push_back(Forest(t).key());
        return out;
    }

    IsoKey direct_sum(const std::vector<IsoKey>& parts) const override {
        std::vector<RootedTree> ts;
        for (const auto& p : parts) {
            Forest f = trees::parse_forest(p);
            for (const auto& t : f.trees()) ts.push_back(t);
        }
        return Forest(std::move(ts)).key();
    }

    Grading k0(const IsoKey& m) const override {
        return Grading{trees::parse_forest(m).size(), {}};
    }

    long long length(const IsoKey& m) const override { return trees::parse_forest(m).size(); }
    long long weight(const IsoKey& m) const override { return trees::parse_forest(m).size(); }

    std::vector<IsoKey> objects_of_weight(int w) const override {
        std::vector<IsoKey> out;
        for (const auto& f : trees::enumerate_forests(w)) out.push_back(f.key());
        return out;
    }

    bool is_indecomposable(const IsoKey& m) const override {
        return trees::parse_forest(m).trees().size() == 1;
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<IsoKey, std::vector<SplitTerm>> split_cache_;
};

// ---------------------------------------------------------------------------
// graph backend
// ---------------------------------------------------------------------------

class GraphBackend final : public CategoryBackend {
public:
    std::string name() const override { return "graphs"; }
    IsoKey empty_key() const override { return "{}"; }

    bool is_valid_key(const IsoKey& k) const override {
        if (!graphs::is_graph_key(k)) return false;
        try {
            graphs::graph_from_key(k);
            return true;
        } catch (const std::exception&) {
            return false;
        }
    }

    IsoKey canonical(const IsoKey& k) const override {
        return graphs::canon_key(graphs::graph_from_key(k));
    }

    std::vector<SplitTerm> split(const IsoKey& m) const override {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = split_cache_.find(m);
            if (it != split_cache_.end()) return it->second;
        }
        std::vector<SplitTerm> out;
        for (const auto& s : graphs::graph_splits(graphs::graph_from_key(m)))
            out.push_back(SplitTerm{s.sub, s.quot, s.count});
        std::lock_guard<std::mutex> lock(mutex_);
        return split_cache_.emplace(m, std::move(out)).first->second;
    }

    std::vector<IsoKey> extension_candidates(const IsoKey& a, const IsoKey& b) const override {
        return graphs::graph_extension_candidates(a, b);
    }

    long long subobject_count(const IsoKey& a, const IsoKey& b, const IsoKey& m) const override {
        for (const auto& s : split(m))
            if (s.sub == a && s.quot == b) return s.count;
        return 0;
    }

    std::vector<IsoKey> components(const IsoKey& m) const override {
        return graphs::key_components(m);
    }

    IsoKey direct_sum(const std::vector<IsoKey>& parts) const override {
        std::vector<IsoKey> comps;
        for (const auto& p : parts)
            for (const auto& c : graphs::key_components(p)) comps.push_back(c);
        if (comps.empty()) return empty_key();
        return graphs::key_direct_sum(comps);
    }

    Grading k0(const IsoKey& m) const override {
        Grading g;
        auto graph = graphs::graph_from_key(m);
        g.scalar = graph.loop_count();
        for (const auto& [k, c] : graphs::k0_graph(graph)) g.formal[k] = c;
        return g;
    }

    long long length(const IsoKey& m) const override {
        long long n = 0;
        for (const auto& [k, c] : graphs::k0_graph(graphs::graph_from_key(m))) {
            (void)k;
            n += c;
        }
        return n;
    }

    long long weight(const IsoKey& m) const override {
        return graphs::graph_from_key(m).loop_count();
    }

    std::vector<IsoKey> objects_of_weight(int w) const override {
        // multisets of connected corpus classes with total loop number w
        if (w == 0) return {empty_key()};
        std::vector<IsoKey> out;
        std::vector<IsoKey> chosen;
        std::function<void(int, int, std::size_t)> rec = [&](int remaining, int min_loops,
                                                             std::size_t min_idx) {
            if (remaining == 0) {
                out.push_back(direct_sum(chosen));
                return;
            }
            for (int l = min_loops; l <= remaining; ++l) {
                const auto& pool = graphs::connected_corpus(l);
                for (std::size_t i = (l == min_loops ? min_idx : 0); i < pool.size(); ++i) {
                    chosen.push_back(pool[i]);
                    rec(remaining - l, l, i);
                    chosen.pop_back();
                }
            }
        };
        rec(w, 1, 0);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool is_indecomposable(const IsoKey& m) const override {
        if (m == empty_key()) return false;
        return graphs::graph_from_key(m).connected();
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<IsoKey, std::vector<SplitTerm>> split_cache_;
};

}  // namespace

const CategoryBackend& tree_backend() {
    static const TreeBackend b;
    return b;
}

const CategoryBackend& graph_backend() {
    static const GraphBackend b;
    return b;
}

const CategoryBackend& backend_by_name(const std::string& name) {
    if (name == "trees") return tree_backend();
    if (name == "graphs") return graph_backend();
    throw std::invalid_argument("unknown category '" + name + "' (use trees|graphs)");
}

// ---------------------------------------------------------------------------
// HallElement
// ---------------------------------------------------------------------------

HallElement HallElement::delta(const CategoryBackend& b, const IsoKey& key) {
    HallElement e(b, Basis::delta);
    e.add_term(b.canonical(key), 1);
    return e;
}

HallElement HallElement::phi(const CategoryBackend& b, const IsoKey& key) {
    HallElement e(b, Basis::phi);
    e.add_term(b.canonical(key), 1);
    return e;
}

HallElement HallElement::zero(const CategoryBackend& b, Basis basis) {
    return HallElement(b, basis);
}

Rat HallElement::coeff(const IsoKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HallElement::add_term(const IsoKey& key, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void HallElement::check_compatible(const HallElement& o) const {
    if (backend_ != o.backend_)
        throw std::invalid_argument("Hall elements from different categories");
    if (basis_ != o.basis_)
        throw std::invalid_argument("Hall elements in different bases (delta vs phi)");
}

HallElement HallElement::operator+(const HallElement& o) const {
    check_compatible(o);
    HallElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

HallElement HallElement::operator-(const HallElement& o) const {
    check_compatible(o);
    HallElement out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

HallElement HallElement::operator-() const { return scaled(-1); }

HallElement HallElement::scaled(const Rat& c) const {
    HallElement out(*backend_, basis_);
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

HallElement HallElement::with_basis(Basis b) const {
    HallElement out(*backend_, b);
    out.terms_ = terms_;
    return out;
}

bool HallElement::operator==(const HallElement& o) const {
    return backend_ == o.backend_ && basis_ == o.basis_ && terms_ == o.terms_;
}

// ---------------------------------------------------------------------------
// product, coproduct, antipode
// ---------------------------------------------------------------------------

namespace {

struct PairProductCache {
    std::mutex mutex;
    std::map<std::pair<IsoKey, IsoKey>, std::map<IsoKey, long long>> cache;
};

PairProductCache& product_cache_for(const CategoryBackend& b) {
    static PairProductCache tree_cache, graph_cache;
    return b.name() == "trees" ? tree_cache : graph_cache;
}

const std::map<IsoKey, long long>& product_pair(const CategoryBackend& b, const IsoKey& a,
                                                const IsoKey& bb) {
    auto& pc = product_cache_for(b);
    {
        std::lock_guard<std::mutex> lock(pc.mutex);
        auto it = pc.cache.find({a, bb});
        if (it != pc.cache.end()) return it->second;
    }
    std::map<IsoKey, long long> out;
    for (const auto& m : b.extension_candidates(a, bb)) {
        long long c = b.subobject_count(a, bb, m);
        if (c != 0) out[m] = c;
    }
    std::lock_guard<std::mutex> lock(pc.mutex);
    return pc.cache.emplace(std::make_pair(a, bb), std::move(out)).first->second;
}

}  // namespace

HallElement hall_product(const HallElement& f, const HallElement& g) {
    if (&f.backend() != &g.backend())
        throw std::invalid_argument("hall_product: different categories");
    if (f.basis() != Basis::delta || g.basis() != Basis::delta)
        throw std::invalid_argument("hall_product: both factors must be in the delta basis");
    HallElement out(f.backend(), Basis::delta);
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) {
            Rat c = ca * cb;
            for (const auto& [m, n] : product_pair(f.backend(), a, b))
                out.add_term(m, c * Rat(static_cast<long>(n)));
        }
    return out;
}

namespace {

// Distinct ordered splittings (B, C) of the component multiset of A, each
// class pair once.
std::vector<std::pair<IsoKey, IsoKey>> splittings(const CategoryBackend& b, const IsoKey& a) {
    auto comps = b.components(a);
    // group identical components
    std::map<IsoKey, int> groups;
    for (const auto& c : comps) ++groups[c];
    std::vector<std::pair<IsoKey, int>> gs(groups.begin(), groups.end());
    std::vector<std::pair<IsoKey, IsoKey>> out;
    std::vector<IsoKey> left, right;
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == gs.size()) {
            out.emplace_back(b.direct_sum(left), b.direct_sum(right));
            return;
        }
        const auto& [key, count] = gs[gi];
        for (int take = 0; take <= count; ++take) {
            for (int i = 0; i < take; ++i) left.push_back(key);
            for (int i = take; i < count; ++i) right.push_back(key);
            rec(gi + 1);
            for (int i = 0; i < take; ++i) left.pop_back();
            for (int i = take; i < count; ++i) right.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

TensorElement coproduct(const HallElement& f) {
    if (f.basis() != Basis::delta)
        throw std::invalid_argument("coproduct: delta basis only");
    TensorElement out;
    for (const auto& [a, c] : f.terms())
        for (const auto& [l, r] : splittings(f.backend(), a)) {
            out[{l, r}] += c;
            if (out[{l, r}] == 0) out.erase({l, r});
        }
    return out;
}

TensorElement reduced_coproduct(const HallElement& f) {
    TensorElement out = coproduct(f);
    const IsoKey e = f.backend().empty_key();
    for (const auto& [a, c] : f.terms()) {
        auto cut = [&](const std::pair<IsoKey, IsoKey>& key, const Rat& v) {
            out[key] -= v;
            if (out[key] == 0) out.erase(key);
        };
        cut({a, e}, c);
        cut({e, a}, c);
        if (a == e) cut({e, e}, -c);  // δ_∅ ⊗ δ_∅ was subtracted twice
    }
    return out;
}

Rat counit(const HallElement& f) { return f.coeff(f.backend().empty_key()); }

namespace {

struct AntipodeCache {
    std::mutex mutex;
    std::map<IsoKey, HallElement> cache;
};

const HallElement& antipode_key(const CategoryBackend& b, const IsoKey& a) {
    static AntipodeCache tree_cache, graph_cache;
    auto& ac = b.name() == "trees" ? tree_cache : graph_cache;
    {
        std::lock_guard<std::mutex> lock(ac.mutex);
        auto it = ac.cache.find(a);
        if (it != ac.cache.end()) return it->second;
    }
    const IsoKey e = b.empty_key();
    HallElement result(b, Basis::delta);
    if (a == e) {
        result.add_term(e, 1);
    } else {
        // S(δ_A) = -δ_A - Σ_{B ⊕ C = A, B ≠ A, C ≠ ∅≠B... } S(δ_B) × δ_C
        result.add_term(a, -1);
        for (const auto& [l, r] : splittings(b, a)) {
            if (l == a || l == e) continue;  // (A,∅) handled; (∅,A) gives -δ_A above
            HallElement s = antipode_key(b, l);
            HallElement rd = HallElement::delta(b, r);
            result = result - hall_product(s, rd);
        }
    }
    std::lock_guard<std::mutex> lock(ac.mutex);
    return ac.cache.emplace(a, std::move(result)).first->second;
}

}  // namespace

HallElement antipode(const HallElement& f) {
    if (f.basis() != Basis::delta)
        throw std::invalid_argument("antipode: delta basis only");
    HallElement out(f.backend(), Basis::delta);
    for (const auto& [a, c] : f.terms()) out = out + antipode_key(f.backend(), a).scaled(c);
    return out;
}

HallElement hall_bracket(const CategoryBackend& b, const IsoKey& x, const IsoKey& y) {
    IsoKey cx = b.canonical(x), cy = b.canonical(y);
    if (!b.is_indecomposable(cx) || !b.is_indecomposable(cy))
        throw std::invalid_argument("hall_bracket: arguments must be indecomposable");
    HallElement dx = HallElement::delta(b, cx), dy = HallElement::delta(b, cy);
    return hall_product(dx, dy) - hall_product(dy, dx);
}

Rat kappa(const HallElement& f, const HallElement& g) {
    if (&f.backend() != &g.backend())
        throw std::invalid_argument("kappa: different categories");
    if (f.basis() != g.basis()) throw std::invalid_argument("kappa: mixed bases");
    Rat out = 0;
    for (const auto& [k, c] : f.terms()) out += c * g.coeff(k);
    return out;
}

Rat pairing(const HallElement& u_phi, const HallElement& v_delta) {
    if (&u_phi.backend() != &v_delta.backend())
        throw std::invalid_argument("pairing: different categories");
    if (u_phi.basis() != Basis::phi || v_delta.basis() != Basis::delta)
        throw std::invalid_argument("pairing: expects (phi, delta)");
    Rat out = 0;
    for (const auto& [k, c] : u_phi.terms()) out += c * v_delta.coeff(k);
    return out;
}

bool is_primitive_element(const HallElement& f) {
    if (f.basis() != Basis::delta) return false;
    if (f.is_zero()) return false;
    return counit(f) == 0 && reduced_coproduct(f).empty();
}

std::optional<Grading> degree(const HallElement& f) {
    std::optional<Grading> deg;
    for (const auto& [k, c] : f.terms()) {
        (void)c;
        Grading g = f.backend().k0(k);
        if (!deg)
            deg = g;
        else if (!(*deg == g))
            return std::nullopt;
    }
    return deg;
}

}  // namespace hallforest::hall
