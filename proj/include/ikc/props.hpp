#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ikc/derivation.hpp"
#include "ikc/reduction.hpp"

namespace ikc {

struct PropertyResult {
  explicit PropertyResult(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few only
  std::size_t failure_count = 0;
  bool ok() const { return failure_count == 0; }
  void fail(std::string what);
};

// Every single step of every relation preserves the degree; η-steps keep fv,
// β/h-steps never grow it; an h-step is unique and is also a β-step.
PropertyResult degree_preservation(const std::vector<Term>& terms);

// check_local_confluence on each term, spread over `threads` workers
// (0 = hardware concurrency).
PropertyResult local_confluence(const std::vector<Term>& terms, Relation r, std::size_t depth, unsigned threads = 0);

// Random canonical type over `atoms`, structural depth ≤ depth, expansion
// indexes from `exps`; the degree is always ⊘ unless `degree` is given.
CanonType random_type(std::mt19937_64& rng, std::size_t depth, const std::vector<std::string>& atoms,
                      const std::vector<Index::value_type>& exps, const Index& degree = Index());

// Reflexivity, transitivity and U ⊑ ω^{d(U)} on `count` seeded random types.
PropertyResult subtype_laws(std::uint64_t seed, std::size_t count);

// Every reduct within max_len βη-steps: each step transported with
// subject_reduce_step, and each reduct reached directly with subject_reduce;
// every output must check at ⟨Γ|_N ⊢ U⟩.
PropertyResult subject_reduction_transport(const std::vector<CheckedJudgment>& corpus, std::size_t max_len,
                                           std::size_t fuel = 10000);

// Single β-expansions of n: for every subterm S, (λz.z) S, (λz.S) w with a
// fresh w, and (λz.P) Q for each subterm Q of S that S does not bind, where
// P is S with that occurrence of Q replaced by z.
std::vector<Term> single_beta_expansions(const Term& n);

// subject_expand_beta on every single β-expansion must check at
// ⟨Γ↑^M ⊢ U⟩, and subject_reduce back must give ⟨Γ ⊢ U⟩ again.
PropertyResult subject_expansion_roundtrip(const std::vector<CheckedJudgment>& corpus, std::size_t fuel = 10000);

}  // namespace ikc
