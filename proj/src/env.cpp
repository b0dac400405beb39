#include "ikc/env.hpp"

#include "ikc/errors.hpp"

namespace ikc {

const CanonType& Env::at(const VarKey& k) const {
  auto it = m_.find(k);
  if (it == m_.end()) throw DomainError(to_string(k) + " is not bound");
  return it->second;
}

VarSet Env::domain() const {
  VarSet s;
  for (const auto& [k, _] : m_) s.insert(s.end(), k);
  return s;
}

Env Env::with(const VarKey& k, const CanonType& u) const {
  Map m = m_;
  m.insert_or_assign(k, u);
  return Env(std::move(m));
}

Env Env::without(const VarKey& k) const {
  Map m = m_;
  m.erase(k);
  return Env(std::move(m));
}

bool operator==(const Env& a, const Env& b) {
  if (a.m_.size() != b.m_.size()) return false;
  auto i = a.m_.begin();
  for (auto j = b.m_.begin(); j != b.m_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

bool same_judgment(const Judgment& a, const Judgment& b) {
  return a.env == b.env && a.type == b.type && alpha_eq(a.subject, b.subject);
}

bool env_ok(const Env& g) {
  for (const auto& [k, u] : g.bindings())
    if (u.degree() != k.idx) return false;
  return true;
}

Env env_inter(const Env& a, const Env& b) {
  Env::Map m = a.bindings();
  for (const auto& [k, u] : b.bindings()) {
    auto it = m.find(k);
    if (it == m.end())
      m.emplace(k, u);
    else
      it->second = inter(it->second, u);
  }
  return Env(std::move(m));
}

Env env_expand(Index::value_type j, const Env& g) { return env_expand_prefix(Index{j}, g); }

Env env_expand_prefix(const Index& k, const Env& g) {
  if (k.empty()) return g;
  Env::Map m;
  for (const auto& [key, u] : g.bindings()) m.emplace(VarKey{key.name, concat(k, key.idx)}, expand_prefix(k, u));
  return Env(std::move(m));
}

Env env_lower(const Env& g, const Index& k) {
  if (k.empty()) return g;
  Env::Map m;
  for (const auto& [key, u] : g.bindings()) {
    if (!prefix_leq(k, key.idx))
      throw DegreeError("cannot lower binding " + to_string(key) + " by " + to_string(k));
    m.emplace(VarKey{key.name, key.idx.drop(k.size())}, lower_type(u, k));
  }
  return Env(std::move(m));
}

Env env_restrict(const Env& g, const VarSet& keep) {
  Env::Map m;
  for (const auto& k : keep) {
    auto it = g.bindings().find(k);
    if (it == g.bindings().end()) throw DomainError("restriction to " + to_string(k) + " outside the domain");
    m.emplace(k, it->second);
  }
  return Env(std::move(m));
}

Env env_enlarge(const Env& g, const VarSet& target) {
  Env::Map m;
  for (const auto& [k, _] : g.bindings())
    if (!target.count(k)) throw DomainError("enlargement target misses " + to_string(k));
  for (const auto& k : target) {
    auto it = g.bindings().find(k);
    m.emplace(k, it == g.bindings().end() ? CanonType::omega(k.idx) : it->second);
  }
  return Env(std::move(m));
}

bool env_sub(const Env& a, const Env& b) {
  if (a.size() != b.size()) return false;
  auto i = a.bindings().begin();
  for (auto j = b.bindings().begin(); j != b.bindings().end(); ++i, ++j)
    if (i->first != j->first || !subtype(i->second, j->second)) return false;
  return true;
}

bool typing_sub(const Env& g, const CanonType& u, const Env& g2, const CanonType& u2) {
  return env_sub(g2, g) && subtype(u, u2);
}

Env env_omega(const Term& m) {
  Env::Map out;
  for (const auto& k : m.free_vars()) out.emplace(k, CanonType::omega(k.idx));
  return Env(std::move(out));
}

bool env_joinable(const Env& a, const Env& b) { return joinable(a.domain(), b.domain()); }

bool env_degree_at_least(const Env& g, const Index& k) {
  for (const auto& [key, _] : g.bindings())
    if (!prefix_leq(k, key.idx)) return false;
  return true;
}

// ---------------------------------------------------------------- text

Env env_from_sexpr(const SExpr& e) {
  if (!e.is_list()) throw SyntaxError(e.where() + ": expected an environment list");
  Env::Map m;
  for (const auto& b : e.items) {
    if (!b.is_list() || b.items.size() != 3 || !b.items[0].is_atom() || !is_identifier(b.items[0].text) ||
        !b.items[1].is_bracket())
      throw SyntaxError(b.where() + ": expected (ident index type)");
    VarKey k{b.items[0].text, b.items[1].index};
    CanonType u = type_from_sexpr(b.items[2]);
    if (!m.emplace(k, u).second) throw SyntaxError(b.where() + ": " + to_string(k) + " bound twice");
  }
  return Env(std::move(m));
}

Env parse_env(std::string_view text) { return env_from_sexpr(read_sexpr(text)); }

std::string to_string(const Env& g) {
  std::string s = "(";
  bool first = true;
  for (const auto& [k, u] : g.bindings()) {
    if (!first) s += ' ';
    first = false;
    s += "(" + k.name + " " + to_string(k.idx) + " " + to_string(u) + ")";
  }
  return s + ")";
}

Judgment judgment_from_sexpr(const SExpr& e) {
  if (!e.is_list() || e.items.empty() || !e.items[0].is_atom("judg"))
    throw SyntaxError(e.where() + ": expected (judg term env type)");
  SCursor cur(e.items, 1);
  Term m = term_from_sexpr(cur);
  Env g = env_from_sexpr(cur.next());
  CanonType u = type_from_sexpr(cur.next());
  cur.expect_done("judg");
  return {m, g, u};
}

Judgment parse_judgment(std::string_view text) { return judgment_from_sexpr(read_sexpr(text)); }

std::string to_string(const Judgment& j) {
  return "(judg " + to_string(j.subject) + " " + to_string(j.env) + " " + to_string(j.type) + ")";
}

std::string pretty(const Judgment& j) {
  return to_string(j.subject) + " : <" + to_string(j.env) + " |- " + to_string(j.type) + ">";
}

}  // namespace ikc
