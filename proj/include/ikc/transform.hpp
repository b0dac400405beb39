#pragma once

#include <variant>
#include <vector>

#include "ikc/derivation.hpp"
#include "ikc/reduction.hpp"

namespace ikc {

// ---- generation for abstractions, judgment level

struct OmegaShape {
  Index degree;
};

struct InvertedComponent {
  CanonType arg;  // V_i
  CanonT res;     // T_i
  Judgment premise;
};

using AbsShape = std::variant<OmegaShape, std::vector<InvertedComponent>>;

// Decomposes λx^L.M : ⟨Γ ⊢ U⟩. Throws ShapeRefutation when U is neither ω
// nor an expanded intersection of arrows whose argument degree can bind x^L.
AbsShape invert_abs(const Judgment& j);

// ---- generation for abstractions, derivation level

struct AbsComponent {
  CanonType arg;
  CanonT res;
  // M : ⟨Γ, x^L : ē_K arg ⊢ ē_K res⟩, without the binding when x^L ∉ fv(M).
  // Stated for the binder name of the inverted derivation's conclusion.
  Derivation premise;
};

struct AbsInversion {
  Index prefix;  // K
  std::vector<AbsComponent> components;  // empty when the type is ω^K
};

AbsInversion invert_abs_derivation(const Derivation& d);

// ---- structural transformers; every output passes check_derivation

// Renames the free variable `from` of the subject to `to` (same index),
// renaming inner binders when they would capture.
Derivation rename_free_in_derivation(const Derivation& d, const VarKey& from, const std::string& to);

// M^{-K} : ⟨Γ^{-K} ⊢ U^{-K}⟩. Throws DegreeError unless K ⪯ d(U).
Derivation lower_derivation(const Derivation& d, const Index& k);

// From M : ⟨Γ, x : U ⊢ V⟩ and N : ⟨Δ ⊢ U⟩ with M ◇ N, a derivation of
// M[x := N] : ⟨Γ ⊓ Δ ⊢ V⟩. Throws PreconditionError.
Derivation subst_derivation(const Derivation& dm, const VarKey& x, const Derivation& dn);

// From M x : ⟨Γ, x : U ⊢ W⟩ with x ∉ fv(M) and d(W) = ⊘, one derivation of
// M : ⟨Γ ⊢ U → T⟩ per component T of W.
std::vector<std::pair<CanonT, Derivation>> eta_invert(const Derivation& d, const VarKey& x);

// One contraction at `path` of the subject.
Derivation subject_reduce_step(const Derivation& d, const Path& path, StepKind kind);

// N : ⟨Γ|_N ⊢ U⟩ from M : ⟨Γ ⊢ U⟩ and M ▷*_r N. Throws NotAReductError.
Derivation subject_reduce(const CheckedJudgment& d, const Term& n, Relation r, std::size_t fuel = 10000);

// If M[x := N] : ⟨Γ ⊢ U⟩ and x ∈ fv(M): V, M : ⟨Γ1, x : V ⊢ U⟩, N : ⟨Γ2 ⊢ V⟩
// with Γ = Γ1 ⊓ Γ2. The returned derivations may rename bound variables of M.
struct SplitSubstitution {
  CanonType v;
  Derivation left;
  Derivation right;
};
SplitSubstitution split_substitution(const Derivation& d, const Term& m, const VarKey& x, const Term& n);

// From N : ⟨Γ ⊢ U⟩ where the β-redex m contracts to N, m : ⟨Γ↑^m ⊢ U⟩.
Derivation expand_redex(const Derivation& d, const Term& m);

// One β-expansion: m contracts at `path` to the subject of d.
Derivation subject_expand_step(const Derivation& d, const Term& m, const Path& path);

// M : ⟨Γ↑^M ⊢ U⟩ from N : ⟨Γ ⊢ U⟩ and M ▷*_β N. Throws NotAnExpansionError.
Derivation subject_expand_beta(const CheckedJudgment& d, const Term& m, std::size_t fuel = 10000);

}  // namespace ikc
