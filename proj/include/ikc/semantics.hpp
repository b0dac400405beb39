#pragma once

#include <string>
#include <vector>

#include "ikc/derivation.hpp"
#include "ikc/reduction.hpp"

namespace ikc {

enum class ExampleType { Id0, Id1, D, Nat0, Nat1, NatP0 };

const std::vector<ExampleType>& all_example_types();
std::string to_string(ExampleType t);
// "Id0", "Id1", "D", "Nat0", "Nat1", "NatP0". Throws SyntaxError.
ExampleType parse_example_type(std::string_view s);
CanonType example_type(ExampleType t);
// Degree of the type, and of every member.
Index example_degree(ExampleType t);

struct OracleVerdict {
  bool member = false;
  bool undecided = false;  // β-normalization ran out of fuel
  std::string witness;     // normal form, or why not a member
};

// Closed, right degree, and β-normal form of the characteristic shape.
OracleVerdict oracle_membership(ExampleType t, const Term& m, std::size_t fuel);

// True iff the subject of an empty-environment derivation at t's type is a
// member. Throws TypeMismatchError when the judgment is not ⟨() ⊢ t⟩.
bool soundness_check(const CheckedJudgment& d, ExampleType t, std::size_t fuel = 10000);

struct CompletenessReport {
  std::size_t enumerated = 0;
  std::size_t members = 0;
  std::size_t undecided = 0;
  std::size_t found = 0;
  std::vector<Term> unknown;
  std::vector<Term> refuted;  // members the search refuted: completeness violations
  // Definite non-members for which a derivation was found: soundness
  // violations. Only filled when non-members are checked.
  std::vector<Term> typable_non_members;
  bool ok() const { return refuted.empty() && typable_non_members.empty(); }
};

// Enumerates closed terms of t's degree up to size_bound (binder indexes
// from {⊘, (1)}) and runs bounded_typecheck on every oracle member.
CompletenessReport completeness_sample(ExampleType t, std::size_t size_bound, std::size_t fuel,
                                       bool check_non_members = false);

struct SaturationReport {
  std::size_t checked = 0;
  // (m, n): m ∉ terms reduces to n ∈ terms
  std::vector<std::pair<Term, Term>> violations;
  bool ok() const { return violations.empty(); }
};

// Every m in closed_under that reaches a member of `terms` within `depth`
// r-steps must itself be a member (up to α).
SaturationReport saturation_check(const std::vector<Term>& terms, const std::vector<Term>& closed_under, Relation r,
                                  std::size_t depth);

std::vector<Term> lift_all(const std::vector<Term>& xs, Index::value_type i);
std::vector<Term> intersect(const std::vector<Term>& xs, const std::vector<Term>& ys);
// (X ∩ Y)^{+i} = X^{+i} ∩ Y^{+i}, compared up to α.
bool lift_distributes(const std::vector<Term>& xs, const std::vector<Term>& ys, Index::value_type i);

}  // namespace ikc
