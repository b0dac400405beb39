#pragma once

#include <memory>
#include <set>
#include <string>

#include "ikc/env.hpp"
#include "ikc/term.hpp"
#include "ikc/types.hpp"

namespace ikc {

// Proof tree over the typing rules. Nodes store only what the rule needs;
// conclusions are always recomputed by check_derivation.
class Derivation {
 public:
  enum class Rule { Ax, Omega, ArrI, ArrIW, ArrE, InterI, Exp, Sub, InterIPrime, AxPrime };

  Derivation() = default;

  static Derivation ax(std::string x, CanonType t);
  static Derivation omega(Term m);
  static Derivation arr_i(std::string x, Index l, CanonType u, Derivation premise);
  static Derivation arr_iw(std::string x, Index l, Derivation premise);
  static Derivation arr_e(Derivation fun, Derivation arg);
  static Derivation inter_i(Derivation a, Derivation b);
  static Derivation exp(Index::value_type j, Derivation premise);
  static Derivation sub(Derivation premise, Env env, CanonType type);
  static Derivation inter_i_prime(Derivation a, Derivation b);
  static Derivation ax_prime(std::string x, CanonType u);

  Rule rule() const;
  bool null() const { return !node_; }
  const std::string& name() const;    // Ax, ArrI, ArrIW, AxPrime
  const Index& idx() const;           // ArrI, ArrIW
  const CanonType& type() const;      // Ax, ArrI, Sub, AxPrime
  const Term& term() const;           // Omega
  const Env& env() const;             // Sub
  Index::value_type j() const;        // Exp
  const Derivation& left() const;     // ArrE fun, InterI(')
  const Derivation& right() const;    // ArrE arg, InterI(')
  const Derivation& premise() const;  // ArrI, ArrIW, Exp, Sub

  bool same(const Derivation& o) const { return node_ == o.node_; }

  struct Node;

 private:
  explicit Derivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend const Judgment& conclusion(const Derivation& d);
  std::shared_ptr<const Node> node_;
};

std::string rule_name(Derivation::Rule r);

// Recomputes the conclusion, checking every side condition. Throws RuleError
// naming the rule, the node position and the violated condition.
Judgment check_derivation(const Derivation& d);
// Same, memoized per node; for use inside transformers.
const Judgment& conclusion(const Derivation& d);

struct CheckedJudgment {
  Judgment judgment;
  Derivation derivation;
};
CheckedJudgment certify(const Derivation& d);

// Replaces (⊓'_I) and (ax') nodes by primitive rules.
Derivation elaborate(const Derivation& d);
Derivation ax_prime_elaborated(const std::string& x, const CanonType& u);
Derivation inter_i_prime_elaborated(const Derivation& a, const Derivation& b);

// Adds a (⊑) node unless the conclusion already is ⟨env ⊢ type⟩.
Derivation sub_to(const Derivation& d, const Env& env, const CanonType& type);
// ē_K spine: exp(k1, exp(k2, … d)).
Derivation exp_prefix(const Index& k, const Derivation& d);

std::size_t node_count(const Derivation& d);
std::set<Derivation::Rule> rules_used(const Derivation& d);

Derivation derivation_from_sexpr(const SExpr& e);
Derivation parse_derivation(std::string_view text);
std::string to_string(const Derivation& d);

}  // namespace ikc
