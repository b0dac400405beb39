#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ikc/term.hpp"

namespace ikc {

enum class Relation { Beta, Eta, BetaEta, Head };

std::string to_string(Relation r);
// "beta", "eta", "betaeta", "h". Throws SyntaxError.
Relation parse_relation(std::string_view s);

enum class StepKind { Beta, Eta };

struct Redex {
  Path path;
  StepKind kind;
};

struct Step {
  Path path;
  StepKind kind;
  Term result;
};

// (λx^L.M)N with d(N) = L
bool is_beta_redex(const Term& m);
// λx^L.(M x^L) with x^L ∉ fv(M)
bool is_eta_redex(const Term& m);
Term contract_beta(const Term& redex);
Term contract_eta(const Term& redex);

// All redexes of m for r, leftmost-outermost first. For h, at most the head one.
std::vector<Redex> redexes(const Term& m, Relation r);
std::optional<Redex> first_redex(const Term& m, Relation r);
Term contract(const Term& m, const Redex& rx);
std::vector<Step> steps(const Term& m, Relation r);
// One-step reducts, deduplicated up to α; order follows redex order.
std::vector<Term> step(const Term& m, Relation r);

struct NormalForm {
  Term term;
  std::size_t steps = 0;
};
struct FuelExhausted {
  Term last;
  std::size_t steps = 0;
};
using ReductionOutcome = std::variant<NormalForm, FuelExhausted>;

// Leftmost-outermost. Fuel counts single steps.
ReductionOutcome normalize(const Term& m, Relation r, std::size_t fuel);

enum class Equivalence { Equivalent, Distinct, Unknown };
std::string to_string(Equivalence e);
Equivalence equiv(const Term& m, const Term& n, Relation r, std::size_t fuel);

// Shortest step sequence from m to a term α-equal to n, visiting at most
// `fuel` distinct terms. Empty vector when m and n are already α-equal.
std::optional<std::vector<Step>> find_reduction(const Term& m, const Term& n, Relation r, std::size_t fuel);

struct Peak {
  Term source, left, right;
};

struct ConfluenceReport {
  std::size_t sources = 0;  // terms whose peaks were examined
  std::size_t peaks = 0;
  std::vector<Peak> unjoined;
  bool ok() const { return unjoined.empty(); }
};

// Every peak whose source lies within depth-1 steps of m must join within
// depth + margin steps on both sides.
ConfluenceReport check_local_confluence(const Term& m, Relation r, std::size_t depth, std::size_t margin = 3,
                                        std::size_t node_cap = 20000);

}  // namespace ikc
