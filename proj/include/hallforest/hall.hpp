#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallforest/rational.hpp"

namespace hallforest::hall {

using IsoKey = std::string;

/// K0 degree. `scalar` is the series-independent part (vertex count for
/// forests, loop number for graphs); `formal` carries the constituent
/// multiset for graphs (deterministic series; see k0_graph).
struct Grading {
    long long scalar = 0;
    std::map<IsoKey, long long> formal;

    Grading operator+(const Grading& o) const;
    Grading operator-(const Grading& o) const;
    bool operator==(const Grading& o) const = default;
    std::string to_string() const;
};

struct SplitTerm {
    IsoKey sub;
    IsoKey quot;
    long long count;
};

/// Capability interface over a category of objects-with-subobjects; the
/// Hall algebra, the representations and the Hecke layer are written once
/// against it.
class CategoryBackend {
public:
    virtual ~CategoryBackend() = default;
    virtual std::string name() const = 0;
    virtual IsoKey empty_key() const = 0;
    virtual bool is_valid_key(const IsoKey& k) const = 0;
    /// Parses/normalizes a key (throws on malformed input).
    virtual IsoKey canonical(const IsoKey& k) const = 0;
    /// All (sub, quot, multiplicity) splittings of m over its subobjects.
    virtual std::vector<SplitTerm> split(const IsoKey& m) const = 0;
    /// A finite set containing every M with a sub-quot presentation (a, b);
    /// completeness is a tested contract.
    virtual std::vector<IsoKey> extension_candidates(const IsoKey& a, const IsoKey& b) const = 0;
    virtual long long subobject_count(const IsoKey& a, const IsoKey& b, const IsoKey& m) const = 0;
    /// Indecomposable (connected) components, as a multiset of keys.
    virtual std::vector<IsoKey> components(const IsoKey& m) const = 0;
    virtual IsoKey direct_sum(const std::vector<IsoKey>& parts) const = 0;
    virtual Grading k0(const IsoKey& m) const = 0;
    /// Composition-series length: vertex count for forests, K0-constituent
    /// count for graphs. Additivity along splittings is a tested contract.
    virtual long long length(const IsoKey& m) const = 0;
    /// Enumeration size: vertex count (trees) / loop number (graphs).
    virtual long long weight(const IsoKey& m) const = 0;
    /// All corpus objects of the given weight, decomposables included.
    virtual std::vector<IsoKey> objects_of_weight(int w) const = 0;
    virtual bool is_indecomposable(const IsoKey& m) const = 0;
};

const CategoryBackend& tree_backend();
const CategoryBackend& graph_backend();
const CategoryBackend& backend_by_name(const std::string& name);  // "trees" | "graphs"

enum class Basis { delta, phi };

/// A finitely supported exact-rational combination of isomorphism classes,
/// tagged with its basis (δ or its κ-dual φ). Zero coefficients are never
/// stored. Elements of different bases or backends never mix.
class HallElement {
public:
    HallElement(const CategoryBackend& backend, Basis basis)
        : backend_(&backend), basis_(basis) {}

    static HallElement delta(const CategoryBackend& b, const IsoKey& key);
    static HallElement phi(const CategoryBackend& b, const IsoKey& key);
    static HallElement zero(const CategoryBackend& b, Basis basis);

    const CategoryBackend& backend() const { return *backend_; }
    Basis basis() const { return basis_; }
    const std::map<IsoKey, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const IsoKey& key) const;
    void add_term(const IsoKey& key, const Rat& c);

    HallElement operator+(const HallElement& o) const;
    HallElement operator-(const HallElement& o) const;
    HallElement operator-() const;
    HallElement scaled(const Rat& c) const;

    /// Same basis and backend; used by κ and by the basis flips.
    HallElement with_basis(Basis b) const;

    bool operator==(const HallElement& o) const;

private:
    const CategoryBackend* backend_;
    Basis basis_;
    std::map<IsoKey, Rat> terms_;

    void check_compatible(const HallElement& o) const;
};

/// δ_A × δ_B = Σ_M #{N ⊂ M : N ≅ A, M/N ≅ B} δ_M, extended bilinearly.
HallElement hall_product(const HallElement& f, const HallElement& g);

using TensorElement = std::map<std::pair<IsoKey, IsoKey>, Rat>;

/// Δ(f)(M, N) = f(M ⊕ N): Δ(δ_A) = Σ δ_B ⊗ δ_C over ordered splittings of
/// A's component multiset, each class pair once.
TensorElement coproduct(const HallElement& f);
TensorElement reduced_coproduct(const HallElement& f);
Rat counit(const HallElement& f);

/// Antipode by the connected-graded Hopf recursion; equals the transpose
/// map X -> -X on U(n).
HallElement antipode(const HallElement& f);
inline HallElement transpose(const HallElement& f) { return antipode(f); }

/// δ_a × δ_b − δ_b × δ_a for indecomposable keys a, b.
HallElement hall_bracket(const CategoryBackend& b, const IsoKey& a, const IsoKey& bkey);

/// κ(f, g) = Σ_A f(A) g(A); both arguments in the same basis.
Rat kappa(const HallElement& f, const HallElement& g);

/// The κ-pairing of a φ-element against a δ-element.
Rat pairing(const HallElement& u_phi, const HallElement& v_delta);

bool is_primitive_element(const HallElement& f);

/// Common K0 degree of the support; nullopt for mixed or zero elements.
std::optional<Grading> degree(const HallElement& f);

}  // namespace hallforest::hall
