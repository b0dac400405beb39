#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ikc/index.hpp"
#include "ikc/sexpr.hpp"

namespace ikc {

class CanonT;

// ē_prefix (T_1 ⊓ … ⊓ T_n), or ω^prefix when there are no components.
// Components are kept sorted and duplicate free.
class CanonType {
 public:
  CanonType() = default;
  CanonType(Index prefix, std::vector<CanonT> components);

  static CanonType omega(Index l) { return CanonType(std::move(l), {}); }
  static CanonType of(const CanonT& t);

  const Index& prefix() const { return prefix_; }
  const Index& degree() const { return prefix_; }
  const std::vector<CanonT>& components() const { return comps_; }
  bool is_omega() const { return comps_.empty(); }
  // true when the type is a single T of degree ⊘, i.e. an element of 𝕋
  bool is_simple() const { return prefix_.empty() && comps_.size() == 1; }

 private:
  Index prefix_;
  std::vector<CanonT> comps_;
};

// Atom(name) or Arrow(arg, res); always of degree ⊘.
class CanonT {
 public:
  enum class Kind { Atom, Arrow };
  CanonT() = default;
  static CanonT atom(std::string name);
  static CanonT arrow(CanonType arg, CanonT res);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  const std::string& name() const;
  const CanonType& arg() const;
  const CanonT& res() const;

  struct Node;

 private:
  explicit CanonT(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Structural order: atoms before arrows, atoms by name, arrows by (arg, res).
int compare(const CanonT& a, const CanonT& b);
int compare(const CanonType& a, const CanonType& b);
inline bool operator==(const CanonT& a, const CanonT& b) { return compare(a, b) == 0; }
inline bool operator<(const CanonT& a, const CanonT& b) { return compare(a, b) < 0; }
inline bool operator==(const CanonType& a, const CanonType& b) { return compare(a, b) == 0; }
inline bool operator!=(const CanonType& a, const CanonType& b) { return compare(a, b) != 0; }
inline bool operator<(const CanonType& a, const CanonType& b) { return compare(a, b) < 0; }

// Surface syntax before the quotient is applied.
struct TypeRaw {
  enum class Kind { Atom, Omega, Arrow, Inter, Exp };
  Kind kind = Kind::Atom;
  std::string name;  // Atom
  Index idx;         // Omega
  unsigned i = 0;    // Exp
  std::shared_ptr<const TypeRaw> a, b;

  static TypeRaw atom(std::string n);
  static TypeRaw omega(Index l);
  static TypeRaw arrow(TypeRaw l, TypeRaw r);
  static TypeRaw inter(TypeRaw l, TypeRaw r);
  static TypeRaw exp(unsigned i, TypeRaw t);
};

// Throws DegreeError (⊓ of different degrees), ShapeError (arrow target not in 𝕋).
CanonType canonicalize(const TypeRaw& u);
TypeRaw embed(const CanonType& u);

TypeRaw type_raw_from_sexpr(const SExpr& e);
CanonType type_from_sexpr(const SExpr& e);
CanonType parse_type(std::string_view text);
std::string to_string(const CanonType& u);
std::string to_string(const CanonT& t);

inline const Index& degree_type(const CanonType& u) { return u.prefix(); }
CanonType expand_type(Index::value_type i, const CanonType& u);
// ē_k u
CanonType expand_prefix(const Index& k, const CanonType& u);
// u^{-k}. Throws DegreeError unless k ⪯ d(u).
CanonType lower_type(const CanonType& u, const Index& k);
// u ⊓ v. Throws DegreeError on degree mismatch.
CanonType inter(const CanonType& u, const CanonType& v);
// U → T as an element of 𝕋. Throws ShapeError unless t is simple.
CanonType arrow_type(const CanonType& u, const CanonType& t);

bool subtype(const CanonType& u, const CanonType& v);
bool subtype(const CanonT& t, const CanonT& s);

}  // namespace ikc
