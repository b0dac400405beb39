#include "ikc/types.hpp"

#include <algorithm>

#include "ikc/errors.hpp"

namespace ikc {

struct CanonT::Node {
  Kind kind;
  std::string name;
  CanonType arg;
  CanonT res;
};

CanonType::CanonType(Index prefix, std::vector<CanonT> components)
    : prefix_(std::move(prefix)), comps_(std::move(components)) {
  std::sort(comps_.begin(), comps_.end());
  comps_.erase(std::unique(comps_.begin(), comps_.end()), comps_.end());
}

CanonType CanonType::of(const CanonT& t) { return CanonType(Index(), {t}); }

CanonT CanonT::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return CanonT(std::move(n));
}

CanonT CanonT::arrow(CanonType arg, CanonT res) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Arrow;
  n->arg = std::move(arg);
  n->res = std::move(res);
  return CanonT(std::move(n));
}

CanonT::Kind CanonT::kind() const { return node_->kind; }
const std::string& CanonT::name() const { return node_->name; }
const CanonType& CanonT::arg() const { return node_->arg; }
const CanonT& CanonT::res() const { return node_->res; }

int compare(const CanonT& a, const CanonT& b) {
  if (a.kind() != b.kind()) return a.is_atom() ? -1 : 1;
  if (a.is_atom()) return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
  if (int c = compare(a.arg(), b.arg())) return c;
  return compare(a.res(), b.res());
}

int compare(const CanonType& a, const CanonType& b) {
  if (a.prefix() != b.prefix()) return a.prefix() < b.prefix() ? -1 : 1;
  const auto& x = a.components();
  const auto& y = b.components();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    if (int c = compare(x[i], y[i])) return c;
  if (x.size() == y.size()) return 0;
  return x.size() < y.size() ? -1 : 1;
}

// ---------------------------------------------------------------- raw

TypeRaw TypeRaw::atom(std::string n) {
  TypeRaw t;
  t.kind = Kind::Atom;
  t.name = std::move(n);
  return t;
}

TypeRaw TypeRaw::omega(Index l) {
  TypeRaw t;
  t.kind = Kind::Omega;
  t.idx = std::move(l);
  return t;
}

TypeRaw TypeRaw::arrow(TypeRaw l, TypeRaw r) {
  TypeRaw t;
  t.kind = Kind::Arrow;
  t.a = std::make_shared<const TypeRaw>(std::move(l));
  t.b = std::make_shared<const TypeRaw>(std::move(r));
  return t;
}

TypeRaw TypeRaw::inter(TypeRaw l, TypeRaw r) {
  TypeRaw t;
  t.kind = Kind::Inter;
  t.a = std::make_shared<const TypeRaw>(std::move(l));
  t.b = std::make_shared<const TypeRaw>(std::move(r));
  return t;
}

TypeRaw TypeRaw::exp(unsigned i, TypeRaw body) {
  TypeRaw t;
  t.kind = Kind::Exp;
  t.i = i;
  t.a = std::make_shared<const TypeRaw>(std::move(body));
  return t;
}

CanonType canonicalize(const TypeRaw& u) {
  switch (u.kind) {
    case TypeRaw::Kind::Atom:
      return CanonType::of(CanonT::atom(u.name));
    case TypeRaw::Kind::Omega:
      return CanonType::omega(u.idx);
    case TypeRaw::Kind::Exp:
      return expand_type(u.i, canonicalize(*u.a));
    case TypeRaw::Kind::Inter:
      return inter(canonicalize(*u.a), canonicalize(*u.b));
    case TypeRaw::Kind::Arrow:
      return arrow_type(canonicalize(*u.a), canonicalize(*u.b));
  }
  return {};
}

namespace {

TypeRaw embed_t(const CanonT& t) {
  if (t.is_atom()) return TypeRaw::atom(t.name());
  return TypeRaw::arrow(embed(t.arg()), embed_t(t.res()));
}

}  // namespace

TypeRaw embed(const CanonType& u) {
  if (u.is_omega()) return TypeRaw::omega(u.prefix());
  const auto& cs = u.components();
  TypeRaw body = embed_t(cs.back());
  for (std::size_t i = cs.size() - 1; i-- > 0;) body = TypeRaw::inter(embed_t(cs[i]), std::move(body));
  const auto& p = u.prefix().entries();
  for (std::size_t i = p.size(); i-- > 0;) body = TypeRaw::exp(p[i], std::move(body));
  return body;
}

// ---------------------------------------------------------------- text

TypeRaw type_raw_from_sexpr(const SExpr& e) {
  if (e.is_atom()) {
    if (!is_identifier(e.text)) throw SyntaxError(e.where() + ": bad type atom '" + e.text + "'");
    return TypeRaw::atom(e.text);
  }
  if (!e.is_list() || e.items.empty()) throw SyntaxError(e.where() + ": expected a type");
  const SExpr& head = e.items[0];
  auto arity = [&](std::size_t n) {
    if (e.items.size() != n + 1)
      throw SyntaxError(e.where() + ": '" + head.text + "' takes " + std::to_string(n) + " arguments");
  };
  if (head.is_atom("w")) {
    arity(1);
    if (!e.items[1].is_bracket()) throw SyntaxError(e.items[1].where() + ": ω needs an index");
    return TypeRaw::omega(e.items[1].index);
  }
  if (head.is_atom("->")) {
    arity(2);
    return TypeRaw::arrow(type_raw_from_sexpr(e.items[1]), type_raw_from_sexpr(e.items[2]));
  }
  if (head.is_atom("^")) {
    arity(2);
    return TypeRaw::inter(type_raw_from_sexpr(e.items[1]), type_raw_from_sexpr(e.items[2]));
  }
  if (head.is_atom("e")) {
    arity(2);
    return TypeRaw::exp(parse_nat(e.items[1]), type_raw_from_sexpr(e.items[2]));
  }
  throw SyntaxError(head.where() + ": expected w, ->, ^ or e");
}

CanonType type_from_sexpr(const SExpr& e) {
  TypeRaw raw = type_raw_from_sexpr(e);
  try {
    return canonicalize(raw);
  } catch (const DegreeError& err) {
    throw DegreeError(e.where() + ": " + err.detail());
  } catch (const ShapeError& err) {
    throw ShapeError(e.where() + ": " + err.detail());
  }
}

CanonType parse_type(std::string_view text) { return type_from_sexpr(read_sexpr(text)); }

namespace {

void print_t(const CanonT& t, std::string& out);

void print_u(const CanonType& u, std::string& out) {
  // ω carries its whole index: ē_i ω^K = ω^{i::K}
  if (u.is_omega()) {
    out += "(w " + to_string(u.prefix()) + ")";
    return;
  }
  const auto& p = u.prefix().entries();
  for (auto i : p) out += "(e " + std::to_string(i) + " ";
  const auto& cs = u.components();
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    out += "(^ ";
    print_t(cs[i], out);
    out += ' ';
  }
  print_t(cs.back(), out);
  out.append(cs.size() - 1, ')');
  out.append(p.size(), ')');
}

void print_t(const CanonT& t, std::string& out) {
  if (t.is_atom()) {
    out += t.name();
    return;
  }
  out += "(-> ";
  print_u(t.arg(), out);
  out += ' ';
  print_t(t.res(), out);
  out += ')';
}

}  // namespace

std::string to_string(const CanonType& u) {
  std::string s;
  print_u(u, s);
  return s;
}

std::string to_string(const CanonT& t) {
  std::string s;
  print_t(t, s);
  return s;
}

// ---------------------------------------------------------------- algebra

CanonType expand_type(Index::value_type i, const CanonType& u) {
  return CanonType(u.prefix().cons(i), u.components());
}

CanonType expand_prefix(const Index& k, const CanonType& u) {
  if (k.empty()) return u;
  return CanonType(concat(k, u.prefix()), u.components());
}

CanonType lower_type(const CanonType& u, const Index& k) {
  if (!prefix_leq(k, u.prefix()))
    throw DegreeError("cannot lower a type of degree " + to_string(u.prefix()) + " by " + to_string(k));
  return CanonType(u.prefix().drop(k.size()), u.components());
}

CanonType inter(const CanonType& u, const CanonType& v) {
  if (u.prefix() != v.prefix())
    throw DegreeError("⊓ of types with degrees " + to_string(u.prefix()) + " and " + to_string(v.prefix()));
  std::vector<CanonT> cs(u.components());
  cs.insert(cs.end(), v.components().begin(), v.components().end());
  return CanonType(u.prefix(), std::move(cs));
}

CanonType arrow_type(const CanonType& u, const CanonType& t) {
  if (!t.is_simple()) throw ShapeError("arrow target " + to_string(t) + " is not in 𝕋");
  return CanonType::of(CanonT::arrow(u, t.components().front()));
}

bool subtype(const CanonT& t, const CanonT& s) {
  if (t.kind() != s.kind()) return false;
  if (t.is_atom()) return t.name() == s.name();
  return subtype(s.arg(), t.arg()) && subtype(t.res(), s.res());
}

bool subtype(const CanonType& u, const CanonType& v) {
  if (u.prefix() != v.prefix()) return false;
  if (v.is_omega()) return true;
  if (u.is_omega()) return false;
  for (const auto& s : v.components()) {
    bool found = false;
    for (const auto& t : u.components())
      if (subtype(t, s)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace ikc
