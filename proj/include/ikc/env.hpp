#pragma once

#include <map>
#include <string>

#include "ikc/term.hpp"
#include "ikc/types.hpp"

namespace ikc {

// Type environment: one type per (name, index), printed in key order.
class Env {
 public:
  using Map = std::map<VarKey, CanonType>;

  Env() = default;
  explicit Env(Map m) : m_(std::move(m)) {}

  const Map& bindings() const { return m_; }
  bool empty() const { return m_.empty(); }
  std::size_t size() const { return m_.size(); }
  bool contains(const VarKey& k) const { return m_.count(k) != 0; }
  const CanonType& at(const VarKey& k) const;
  VarSet domain() const;

  // Adds or replaces one binding.
  Env with(const VarKey& k, const CanonType& u) const;
  Env without(const VarKey& k) const;

  friend bool operator==(const Env& a, const Env& b);
  friend bool operator!=(const Env& a, const Env& b) { return !(a == b); }

 private:
  Map m_;
};

struct Judgment {
  Term subject;
  Env env;
  CanonType type;
};

// Subjects compared up to α; environments and types exactly.
bool same_judgment(const Judgment& a, const Judgment& b);

bool env_ok(const Env& g);
// Pointwise ⊓. Throws DegreeError on a shared key with different degrees.
Env env_inter(const Env& a, const Env& b);
Env env_expand(Index::value_type j, const Env& g);
Env env_expand_prefix(const Index& k, const Env& g);
// Throws DegreeError unless k prefixes every key index and type degree.
Env env_lower(const Env& g, const Index& k);
// Throws DomainError unless keep ⊆ dom(g).
Env env_restrict(const Env& g, const VarSet& keep);
// Throws DomainError unless dom(g) ⊆ target.
Env env_enlarge(const Env& g, const VarSet& target);
bool env_sub(const Env& a, const Env& b);
// ⟨Γ ⊢ U⟩ ⊑ ⟨Γ' ⊢ U'⟩ iff Γ' ⊑ Γ and U ⊑ U'
bool typing_sub(const Env& g, const CanonType& u, const Env& g2, const CanonType& u2);
Env env_omega(const Term& m);
bool env_joinable(const Env& a, const Env& b);
// d(Γ) ⪰ k: k prefixes every key index.
bool env_degree_at_least(const Env& g, const Index& k);

Env env_from_sexpr(const SExpr& e);
Env parse_env(std::string_view text);
std::string to_string(const Env& g);

Judgment judgment_from_sexpr(const SExpr& e);
Judgment parse_judgment(std::string_view text);
std::string to_string(const Judgment& j);
// M : <Γ ⊢ U> for people
std::string pretty(const Judgment& j);

}  // namespace ikc
