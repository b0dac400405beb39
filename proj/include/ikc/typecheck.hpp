#pragma once

#include <optional>
#include <string>

#include "ikc/derivation.hpp"

namespace ikc {

enum class Verdict { Found, RefutedByGeneration, Unknown };
std::string to_string(Verdict v);

struct TypecheckResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Derivation> derivation;  // set iff Found
  std::string reason;                     // why refuted or unknown
  std::size_t fuel_used = 0;
};

// Syntax-directed search for M : ⟨Γ ⊢ U⟩. Abstractions are inverted, head
// variables supply their argument types, head β-redexes are h-reduced and the
// derivation found for the reduct is expanded back. Fuel counts search nodes
// plus h-steps.
TypecheckResult bounded_typecheck(const Term& m, const Env& g, const CanonType& u, std::size_t fuel);

}  // namespace ikc
