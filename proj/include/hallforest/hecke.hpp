#pragma once

#include <string>
#include <vector>

#include "hallforest/hall.hpp"

namespace hallforest::hecke {

using hall::Basis;
using hall::CategoryBackend;
using hall::HallElement;
using hall::IsoKey;
using hallforest::Rat;

/// One outcome line of a diagnostic or suite.
struct Check {
    std::string claim;
    std::string status;  // "pass" | "fail" | "info"
    std::string witness;
};

/// The three legs of Heck_C -> Iso(C): π1(A,B) = A, π2(A,B) = B,
/// πq(A,B) = B/A.
enum class Leg { sub, amb, quot };

/// A point of Heck_C refined by its quotient class, so that all three leg
/// values are determined by the key. The number of concrete subobjects of
/// amb in class sub with quotient quot is the fiber multiplicity.
struct HeckeKey {
    IsoKey sub;
    IsoKey quot;
    IsoKey amb;
    auto operator<=>(const HeckeKey&) const = default;
};

/// A finitely supported function on Heck_C.
class HeckeFunction {
public:
    explicit HeckeFunction(const CategoryBackend& b) : backend_(&b) {}
    const CategoryBackend& backend() const { return *backend_; }
    const std::map<HeckeKey, Rat>& terms() const { return terms_; }
    void add(const HeckeKey& k, const Rat& c);
    Rat value(const HeckeKey& k) const;
    bool empty() const { return terms_.empty(); }

    /// Pointwise product (the commutative ring structure of F(Heck_C)).
    HeckeFunction operator*(const HeckeFunction& o) const;

private:
    const CategoryBackend* backend_;
    std::map<HeckeKey, Rat> terms_;
};

/// π_r^*(f) restricted to the pairs with ambient class in the finite
/// window. Windows are always explicit; a whole-category pullback is not
/// representable.
HeckeFunction pullback(const HallElement& f, Leg leg, const std::vector<IsoKey>& amb_window);

/// Integration along the fiber: π_{r*}(F)(y) = Σ_{x ∈ π_r^{-1}(y)} F(x),
/// counting concrete pairs (the key multiplicity is the subobject count).
HallElement pushforward(const HeckeFunction& F, Leg leg);

/// The indicator of the pairs (sub ⊂ amb), one key per quotient class.
HeckeFunction hecke_delta_pair(const CategoryBackend& b, const IsoKey& sub, const IsoKey& amb);

/// The three convolutions, computed through pullbacks and pushforwards with
/// windows derived from the supports:
///   1: π_{q*}(π_1^*(f) π_2^*(g))   2: π_{2*}(π_q^*(f) π_1^*(g))
///   3: π_{1*}(π_q^*(f) π_2^*(g))
HallElement convolution1(const HallElement& f, const HallElement& g);
HallElement convolution2(const HallElement& f, const HallElement& g);
HallElement convolution3(const HallElement& f, const HallElement& g);

enum class TruncMode { sub, quot };

/// Quot(M) or ≤M: the finite member set, precomputed. ∅ and M are always
/// members.
struct TruncationSet {
    const CategoryBackend* backend;
    IsoKey root;
    TruncMode mode;
    std::vector<IsoKey> members;  // sorted
    bool contains(const IsoKey& k) const;
};

TruncationSet truncation_set(const CategoryBackend& b, const IsoKey& m, TruncMode mode);

/// The four truncated actions. Elimination styles act on φ-elements
/// supported in the set and are provably stable (escape is a hard error);
/// the dual insertion styles act on δ-elements and keep only classes inside
/// the member set.
enum class TruncStyle { elim, top_elim, dual_ins, dual_top_ins };

TruncStyle trunc_style_from_string(const std::string& s);
std::string to_string(TruncStyle s);

HallElement truncated_act(const TruncationSet& ts, TruncStyle style, const IsoKey& a,
                          const HallElement& v);

/// Verifies convolution 2 = insertion / top-insertion and the κ-transports
/// of convolutions 1 and 3 = (minus) elimination / top-elimination, for all
/// indecomposable a and basis vectors with combined weight ≤ max_degree,
/// plus seeded random combinations.
std::vector<Check> equivalence_suite(const CategoryBackend& b, int max_degree, unsigned seed);

/// For each basis vector and seeded random combination v, finds the maximal-
/// length class Z in supp(v) and certifies that eliminating by Z sends v to
/// -c_Z φ_∅ (so every subrepresentation contains φ_∅).
std::vector<Check> indecomposability_test(const TruncationSet& ts, unsigned seed);

/// Dimension and projection diagnostics for H_{T(A ⊕ B)} vs
/// H_{T(A)} ⊕ H_{T(B)}; emits findings (info), asserting only the
/// submodule inclusions.
std::vector<Check> direct_sum_diagnostic(const CategoryBackend& b, const IsoKey& a,
                                         const IsoKey& bb, TruncMode mode);

}  // namespace hallforest::hecke
