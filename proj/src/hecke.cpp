#include "hallforest/hecke.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hallforest/representations.hpp"
#include "hallforest/rooted_tree.hpp"

namespace hallforest::hecke {

void HeckeFunction::add(const HeckeKey& k, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat HeckeFunction::value(const HeckeKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

HeckeFunction HeckeFunction::operator*(const HeckeFunction& o) const {
    if (backend_ != o.backend_)
        throw std::invalid_argument("HeckeFunction product: different categories");
    HeckeFunction out(*backend_);
    const auto& small = terms_.size() <= o.terms_.size() ? *this : o;
    const auto& large = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& [k, c] : small.terms_) {
        Rat d = large.value(k);
        if (d != 0) out.add(k, c * d);
    }
    return out;
}

HeckeFunction pullback(const HallElement& f, Leg leg, const std::vector<IsoKey>& amb_window) {
    const auto& b = f.backend();
    HeckeFunction out(b);
    std::set<IsoKey> window;
    for (const auto& m : amb_window) window.insert(b.canonical(m));
    for (const auto& amb : window) {
        for (const auto& s : b.split(amb)) {
            HeckeKey key{s.sub, s.quot, amb};
            Rat v;
            switch (leg) {
                case Leg::sub: v = f.coeff(s.sub); break;
                case Leg::amb: v = f.coeff(amb); break;
                case Leg::quot: v = f.coeff(s.quot); break;
            }
            out.add(key, v);
        }
    }
    return out;
}

HallElement pushforward(const HeckeFunction& F, Leg leg) {
    const auto& b = F.backend();
    HallElement out(b, Basis::delta);
    for (const auto& [k, c] : F.terms()) {
        long long mult = b.subobject_count(k.sub, k.quot, k.amb);
        if (mult == 0) continue;
        const IsoKey& target = leg == Leg::sub ? k.sub : (leg == Leg::amb ? k.amb : k.quot);
        out.add_term(target, c * Rat(static_cast<long>(mult)));
    }
    return out;
}

HeckeFunction hecke_delta_pair(const CategoryBackend& b, const IsoKey& sub, const IsoKey& amb) {
    HeckeFunction out(b);
    IsoKey cs = b.canonical(sub), ca = b.canonical(amb);
    for (const auto& s : b.split(ca))
        if (s.sub == cs) out.add(HeckeKey{s.sub, s.quot, ca}, 1);
    return out;
}

namespace {

std::vector<IsoKey> support_keys(const HallElement& f) {
    std::vector<IsoKey> out;
    for (const auto& [k, c] : f.terms()) {
        (void)c;
        out.push_back(k);
    }
    return out;
}

}  // namespace

HallElement convolution1(const HallElement& f, const HallElement& g) {
    // π_{q*}(π_1^*(f) π_2^*(g)); ambients bounded by supp(g)
    auto window = support_keys(g);
    return pushforward(pullback(f, Leg::sub, window) * pullback(g, Leg::amb, window), Leg::quot);
}

HallElement convolution2(const HallElement& f, const HallElement& g) {
    // π_{2*}(π_q^*(f) π_1^*(g)); ambients are extensions of supp(g) by supp(f)
    const auto& b = f.backend();
    std::set<IsoKey> window;
    for (const auto& [bk, cb] : g.terms()) {
        (void)cb;
        for (const auto& [ak, ca] : f.terms()) {
            (void)ca;
            for (const auto& m : b.extension_candidates(bk, ak)) window.insert(m);
        }
    }
    std::vector<IsoKey> w(window.begin(), window.end());
    return pushforward(pullback(f, Leg::quot, w) * pullback(g, Leg::sub, w), Leg::amb);
}

HallElement convolution3(const HallElement& f, const HallElement& g) {
    // π_{1*}(π_q^*(f) π_2^*(g)); ambients bounded by supp(g)
    auto window = support_keys(g);
    return pushforward(pullback(f, Leg::quot, window) * pullback(g, Leg::amb, window), Leg::sub);
}

bool TruncationSet::contains(const IsoKey& k) const {
    return std::binary_search(members.begin(), members.end(), k, trees::shortlex_less);
}

TruncationSet truncation_set(const CategoryBackend& b, const IsoKey& m, TruncMode mode) {
    IsoKey cm = b.canonical(m);
    std::set<IsoKey> members;
    for (const auto& s : b.split(cm))
        members.insert(mode == TruncMode::quot ? s.quot : s.sub);
    std::vector<IsoKey> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end(), trees::shortlex_less);
    return TruncationSet{&b, cm, mode, std::move(sorted)};
}

TruncStyle trunc_style_from_string(const std::string& s) {
    if (s == "elim") return TruncStyle::elim;
    if (s == "top-elim") return TruncStyle::top_elim;
    if (s == "dual-ins") return TruncStyle::dual_ins;
    if (s == "dual-top-ins") return TruncStyle::dual_top_ins;
    throw std::invalid_argument("unknown truncated style '" + s +
                                "' (use elim|top-elim|dual-ins|dual-top-ins)");
}

std::string to_string(TruncStyle s) {
    switch (s) {
        case TruncStyle::elim: return "elim";
        case TruncStyle::top_elim: return "top-elim";
        case TruncStyle::dual_ins: return "dual-ins";
        case TruncStyle::dual_top_ins: return "dual-top-ins";
    }
    return "?";
}

HallElement truncated_act(const TruncationSet& ts, TruncStyle style, const IsoKey& a,
                          const HallElement& v) {
    const auto& b = *ts.backend;
    if (&v.backend() != &b) throw std::invalid_argument("truncated_act: backend mismatch");
    bool quot_mode = ts.mode == TruncMode::quot;
    if ((style == TruncStyle::elim || style == TruncStyle::dual_ins) != quot_mode)
        throw std::invalid_argument("truncated_act: style does not match the truncation mode");
    for (const auto& [k, c] : v.terms()) {
        (void)c;
        if (!ts.contains(k))
            throw std::invalid_argument("truncated_act: element not supported in the set");
    }
    switch (style) {
        case TruncStyle::elim: {
            HallElement r = reps::act(reps::RepKind::elimination, a, v);
            for (const auto& [k, c] : r.terms()) {
                (void)c;
                if (!ts.contains(k))
                    throw std::logic_error("truncated elimination left Quot(M) at '" + k + "'");
            }
            return r;
        }
        case TruncStyle::top_elim: {
            HallElement r = reps::act(reps::RepKind::top_elimination, a, v);
            for (const auto& [k, c] : r.terms()) {
                (void)c;
                if (!ts.contains(k))
                    throw std::logic_error("truncated top-elimination left <=M at '" + k + "'");
            }
            return r;
        }
        case TruncStyle::dual_ins: {
            HallElement full = reps::act(reps::RepKind::insertion, a, v);
            HallElement out(b, Basis::delta);
            for (const auto& [k, c] : full.terms())
                if (ts.contains(k)) out.add_term(k, c);
            return out;
        }
        case TruncStyle::dual_top_ins: {
            HallElement full = reps::act(reps::RepKind::top_insertion, a, v);
            HallElement out(b, Basis::delta);
            for (const auto& [k, c] : full.terms())
                if (ts.contains(k)) out.add_term(k, c);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// suites and diagnostics
// ---------------------------------------------------------------------------

namespace {

std::string describe(const HallElement& e) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*" << k;
    }
    if (first) os << "0";
    return os.str();
}

void record(std::vector<Check>& out, const std::string& claim, bool ok,
            const std::string& witness = "") {
    out.push_back(Check{claim, ok ? "pass" : "fail", witness});
}

}  // namespace

std::vector<Check> equivalence_suite(const CategoryBackend& b, int max_degree, unsigned seed) {
    std::vector<Check> out;
    std::vector<IsoKey> gens;
    std::vector<IsoKey> basis;
    for (int w = 1; w <= max_degree; ++w)
        for (const auto& k : b.objects_of_weight(w)) {
            basis.push_back(k);
            if (b.is_indecomposable(k)) gens.push_back(k);
        }

    auto run_case = [&](const IsoKey& a, const HallElement& v, const std::string& label) {
        HallElement da = HallElement::delta(b, a);
        HallElement v_phi = v.with_basis(Basis::phi);

        HallElement ins = reps::act(reps::RepKind::insertion, a, v);
        HallElement c2_left = convolution2(v, da);
        record(out, "convolution 2 (right slot) = insertion by " + a + " on " + label,
               ins == c2_left, describe(ins) + " vs " + describe(c2_left));

        HallElement top = reps::act(reps::RepKind::top_insertion, a, v);
        HallElement c2_right = convolution2(da, v);
        record(out, "convolution 2 (left slot) = top-insertion by " + a + " on " + label,
               top == c2_right, describe(top) + " vs " + describe(c2_right));

        HallElement elim = reps::act(reps::RepKind::elimination, a, v_phi);
        HallElement c1 = convolution1(da, v).with_basis(Basis::phi);
        record(out, "kappa-transported convolution 1 = -elimination by " + a + " on " + label,
               c1 == -elim, describe(c1) + " vs -(" + describe(elim) + ")");

        HallElement topelim = reps::act(reps::RepKind::top_elimination, a, v_phi);
        HallElement c3 = convolution3(da, v).with_basis(Basis::phi);
        record(out, "kappa-transported convolution 3 = -top-elimination by " + a + " on " + label,
               c3 == -topelim, describe(c3) + " vs -(" + describe(topelim) + ")");
    };

    for (const auto& a : gens)
        for (const auto& bk : basis) {
            if (b.weight(a) + b.weight(bk) > max_degree) continue;
            run_case(a, HallElement::delta(b, bk), bk);
        }

    // random combinations
    std::mt19937 rng(seed);
    for (int i = 0; i < 10 && !gens.empty() && !basis.empty(); ++i) {
        const auto& a = gens[rng() % gens.size()];
        HallElement v(b, Basis::delta);
        for (int t = 0; t < 3; ++t) {
            const auto& bk = basis[rng() % basis.size()];
            if (b.weight(a) + b.weight(bk) > max_degree) continue;
            v.add_term(bk, Rat(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 2)));
        }
        if (v.is_zero()) continue;
        run_case(a, v, "a random combination");
    }
    return out;
}

std::vector<Check> indecomposability_test(const TruncationSet& ts, unsigned seed) {
    const auto& b = *ts.backend;
    std::vector<Check> out;
    const IsoKey empty = b.empty_key();

    auto certify = [&](const HallElement& v, const std::string& label) {
        bool only_empty = true;
        for (const auto& [k, c] : v.terms()) {
            (void)c;
            if (k != empty) only_empty = false;
        }
        if (v.is_zero()) return;
        if (only_empty) {
            record(out, "vector " + label + " already lies on phi_empty", true, "");
            return;
        }
        // maximal length class with nonzero coefficient; ties by key order
        IsoKey z;
        long long best = -1;
        for (const auto& [k, c] : v.terms()) {
            (void)c;
            long long len = b.length(k);
            if (len > best || (len == best && (z.empty() || k < z))) {
                best = len;
                z = k;
            }
        }
        Rat cz = v.coeff(z);
        HallElement r = ts.mode == TruncMode::quot ? reps::eliminate_by(z, v)
                                                   : reps::top_eliminate_by(z, v);
        HallElement want = HallElement::phi(b, empty).scaled(-cz);
        record(out,
               "eliminating the maximal class " + z + " sends " + label + " to -c_Z phi_empty",
               r == want, describe(r) + " vs " + describe(want));
    };

    for (const auto& e : ts.members) {
        if (e == empty) continue;
        certify(HallElement::phi(b, e), "phi_" + e);
    }
    std::mt19937 rng(seed);
    for (int i = 0; i < 10; ++i) {
        HallElement v(b, Basis::phi);
        for (int t = 0; t < 3 && !ts.members.empty(); ++t)
            v.add_term(ts.members[rng() % ts.members.size()],
                       Rat(static_cast<long>(rng() % 7) - 3, 1));
        certify(v, "a random combination");
    }
    return out;
}

std::vector<Check> direct_sum_diagnostic(const CategoryBackend& b, const IsoKey& a,
                                         const IsoKey& bb, TruncMode mode) {
    std::vector<Check> out;
    IsoKey ca = b.canonical(a), cb = b.canonical(bb);
    IsoKey m = b.direct_sum({ca, cb});
    auto ts_m = truncation_set(b, m, mode);
    auto ts_a = truncation_set(b, ca, mode);
    auto ts_b = truncation_set(b, cb, mode);
    std::string tname = mode == TruncMode::quot ? "Quot" : "<=";

    // submodule inclusions are asserted
    bool incl = true;
    for (const auto& k : ts_a.members)
        if (!ts_m.contains(k)) incl = false;
    for (const auto& k : ts_b.members)
        if (!ts_m.contains(k)) incl = false;
    record(out, tname + "(" + ca + ") and " + tname + "(" + cb + ") include into " + tname +
                    "(M)",
           incl, "");

    std::size_t dim_m = ts_m.members.size();
    std::size_t dim_sum = ts_a.members.size() + ts_b.members.size();
    out.push_back(Check{
        "dim H_" + tname + "(M) vs dim H_" + tname + "(A) + dim H_" + tname + "(B)",
        dim_m == dim_sum ? "pass" : "info",
        std::to_string(dim_m) + " vs " + std::to_string(dim_sum)});

    // projection pi_A: group concrete presentations by the class they
    // present and look for conflicting images
    std::map<IsoKey, std::set<IsoKey>> images;  // member class -> {pi_A images}
    for (const auto& sa : b.split(ca))
        for (const auto& sb : b.split(cb)) {
            IsoKey member, image;
            if (mode == TruncMode::quot) {
                member = b.direct_sum({sa.quot, sb.quot});  // N = M/K
                image = sa.quot;                            // A/K_A
            } else {
                member = b.direct_sum({sa.sub, sb.sub});  // N = K
                image = sa.sub;                           // N ∩ A
            }
            images[member].insert(image);
        }
    std::vector<IsoKey> ambiguous;
    for (const auto& [n, imgs] : images)
        if (imgs.size() > 1) ambiguous.push_back(n);
    if (ambiguous.empty()) {
        out.push_back(Check{"pi_A is well-defined on classes", "pass", ""});
    } else {
        std::string w;
        for (const auto& n : ambiguous) {
            w += n + " -> {";
            bool first = true;
            for (const auto& i : images[n]) {
                if (!first) w += ", ";
                first = false;
                w += i;
            }
            w += "} ";
        }
        out.push_back(
            Check{"pi_A is not well-defined on classes (distinct presentations disagree)",
                  "info", w});
    }

    // pi_A ∘ iota_A = id where pi_A is single-valued
    bool retract_ok = true;
    std::string rw;
    for (const auto& n : ts_a.members) {
        auto it = images.find(n);
        if (it == images.end() || it->second.size() != 1) continue;
        if (*it->second.begin() != n) {
            retract_ok = false;
            rw += n + " -> " + *it->second.begin() + " ";
        }
    }
    out.push_back(Check{"pi_A restricted to " + tname + "(A) is the identity where defined",
                        retract_ok ? "pass" : "info", rw});
    return out;
}

}  // namespace hallforest::hecke
