#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ikc/index.hpp"
#include "ikc/sexpr.hpp"

namespace ikc {

struct VarKey {
  std::string name;
  Index idx;
  friend bool operator==(const VarKey&, const VarKey&) = default;
  friend auto operator<=>(const VarKey&, const VarKey&) = default;
};

std::string to_string(const VarKey& k);

using VarSet = std::set<VarKey>;

// Position of a subterm: 0 selects the function (or the body of a lambda),
// 1 selects the argument.
using Path = std::vector<std::uint8_t>;

// Immutable, shared, well-formed degree-annotated term. The smart constructors
// enforce the App/Abs side conditions, so holding a Term means holding a
// well-formed one.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Abs, App };

  Term() = default;  // null handle, only for containers

  static Term var(std::string name, Index idx);
  static Term abs(std::string name, Index idx, Term body);
  static Term app(Term fun, Term arg);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_app() const { return kind() == Kind::App; }
  bool null() const { return !node_; }

  // Var and Abs
  const std::string& name() const;
  const Index& idx() const;
  VarKey key() const { return {name(), idx()}; }
  // Abs
  const Term& body() const;
  // App
  const Term& fun() const;
  const Term& arg() const;

  const Index& degree() const;
  const VarSet& free_vars() const;
  bool has_free(const VarKey& k) const { return free_vars().count(k) != 0; }
  std::size_t size() const;

  bool same(const Term& o) const { return node_ == o.node_; }

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline const Index& degree(const Term& m) { return m.degree(); }
inline const VarSet& free_vars(const Term& m) { return m.free_vars(); }

// No name free in both sets with two different indexes.
bool joinable(const VarSet& a, const VarSet& b);
bool joinable(const Term& m, const Term& n);
bool joinable_all(const std::vector<Term>& ms);

Term parse_term(std::string_view text);
Term term_from_sexpr(SCursor& cur);
std::string to_string(const Term& m);

// Simultaneous capture-avoiding substitution. Bound variables of m are renamed
// to fresh `_k` names whenever a binder name is free in a substituted term.
Term substitute(const Term& m, const std::vector<std::pair<VarKey, Term>>& bindings);
Term substitute(const Term& m, const VarKey& x, const Term& n);

Term lift(const Term& m, Index::value_type i);
// M^{+()} = M, M^{+(i::L)} = (M^{+i})^{+L}
Term lift_seq(const Term& m, const Index& l);
// Prepends k to every index: the term counterpart of an ē_k spine.
Term lift_prefix(const Term& m, const Index& k);
Term lower(const Term& m, Index::value_type i);
// Strips the prefix k from every index.
Term lower_seq(const Term& m, const Index& k);

// Canonical key: binders renamed positionally in traversal order.
std::string alpha_key(const Term& m);
bool alpha_eq(const Term& m, const Term& n);

// Every name occurring in m, bound or free.
void collect_names(const Term& m, std::set<std::string>& out);
// Smallest `_k` not in avoid.
std::string fresh_name(const std::set<std::string>& avoid);

const Term& subterm_at(const Term& m, const Path& p);
Term replace_at(const Term& m, const Path& p, const Term& t);

std::string to_string(const Path& p);

}  // namespace ikc
