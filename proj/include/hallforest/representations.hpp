#pragma once

#include "hallforest/hall.hpp"

namespace hallforest::reps {

using hall::Basis;
using hall::CategoryBackend;
using hall::HallElement;
using hall::IsoKey;

/// The four module structures: insertion X_A·δ_B = δ_A × δ_B (left),
/// top-insertion δ_B·X_A = δ_B × δ_A (right), and their κ-duals
/// elimination X_A·φ_B = −Σ_{A'⊂B, A'≅A} φ_{B/A'} (left) and
/// top-elimination φ_B·X_A = −Σ_{C⊂B, B/C≅A} φ_C (right).
enum class RepKind { insertion, top_insertion, elimination, top_elimination };

RepKind rep_kind_from_string(const std::string& s);  // ins|top-ins|elim|top-elim
std::string to_string(RepKind k);

bool acts_on_delta(RepKind k);  // insertion kinds act on δ, eliminations on φ
bool is_right_action(RepKind k);

/// Action of the generator X_a (a indecomposable) on v. Throws on basis
/// mismatch or decomposable a.
HallElement act(RepKind kind, const IsoKey& a, const HallElement& v);

/// Elimination/top-elimination formulas applied verbatim for an arbitrary
/// (possibly decomposable) class Z; used by the indecomposability
/// certificate, where the maximal-length class need not be connected.
HallElement eliminate_by(const IsoKey& z, const HallElement& v_phi);
HallElement top_eliminate_by(const IsoKey& z, const HallElement& v_phi);

/// κ(elim_a u, v) = −κ(u, ins_a v) and the top-pair analogue.
bool dual_pairing_check(const IsoKey& a, const HallElement& u_phi, const HallElement& v_delta);

/// act([a,b]) as a commutator (anti-commutator for the right actions).
bool module_axiom_check(RepKind kind, const IsoKey& a, const IsoKey& b, const HallElement& v);

/// (δ_a × u)^t = −(u^t × δ_a), the transpose intertwiner.
bool transpose_intertwiner_check(const IsoKey& a, const HallElement& u_delta);

/// Projection onto the indecomposably-supported part (the quotient of the
/// insertion representation by the decomposables ideal).
HallElement decomposable_ideal_quotient(const HallElement& v);

/// v must be K0-homogeneous; checks the result is homogeneous of degree
/// deg(v) ± deg(a) at the series-independent (scalar) level, plus the full
/// formal K0 for trees.
bool grading_check(RepKind kind, const IsoKey& a, const HallElement& v);

}  // namespace hallforest::reps
