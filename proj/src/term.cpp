#include "ikc/term.hpp"

#include <algorithm>
#include <map>

#include "ikc/errors.hpp"

namespace ikc {

struct Term::Node {
  Kind kind;
  std::string name;
  Index idx;
  Term a, b;  // Abs: a = body. App: a = fun, b = arg.
  Index degree;
  VarSet fv;
  std::size_t size = 1;
};

std::string to_string(const VarKey& k) { return k.name + to_string(k.idx); }

Term Term::var(std::string name, Index idx) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->degree = idx;
  n->fv.insert(VarKey{name, idx});
  n->name = std::move(name);
  n->idx = std::move(idx);
  return Term(std::move(n));
}

Term Term::abs(std::string name, Index idx, Term body) {
  if (!prefix_leq(body.degree(), idx))
    throw DegreeError("in λ" + name + to_string(idx) + ": binder index must extend the body degree " +
                      to_string(body.degree()));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->degree = body.degree();
  n->fv = body.free_vars();
  n->fv.erase(VarKey{name, idx});
  n->size = body.size() + 1;
  n->name = std::move(name);
  n->idx = std::move(idx);
  n->a = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  if (!prefix_leq(fun.degree(), arg.degree()))
    throw DegreeError("application needs d(fun) ⪯ d(arg), got " + to_string(fun.degree()) + " and " +
                      to_string(arg.degree()));
  if (!joinable(fun, arg))
    throw JoinabilityError("function and argument use a free variable at two different indexes");
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->degree = fun.degree();
  n->fv = fun.free_vars();
  n->fv.insert(arg.free_vars().begin(), arg.free_vars().end());
  n->size = fun.size() + arg.size() + 1;
  n->a = std::move(fun);
  n->b = std::move(arg);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Index& Term::idx() const { return node_->idx; }
const Term& Term::body() const { return node_->a; }
const Term& Term::fun() const { return node_->a; }
const Term& Term::arg() const { return node_->b; }
const Index& Term::degree() const { return node_->degree; }
const VarSet& Term::free_vars() const { return node_->fv; }
std::size_t Term::size() const { return node_->size; }

bool joinable(const VarSet& a, const VarSet& b) {
  // Both sets are ordered by name first, so a merge finds every shared name.
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    int c = i->name.compare(j->name);
    if (c < 0) {
      ++i;
    } else if (c > 0) {
      ++j;
    } else {
      if (i->idx != j->idx) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

bool joinable(const Term& m, const Term& n) { return joinable(m.free_vars(), n.free_vars()); }

bool joinable_all(const std::vector<Term>& ms) {
  std::map<std::string, Index> seen;
  for (const auto& m : ms)
    for (const auto& k : m.free_vars()) {
      auto [it, fresh] = seen.emplace(k.name, k.idx);
      if (!fresh && it->second != k.idx) return false;
    }
  return true;
}

// ---------------------------------------------------------------- text

Term term_from_sexpr(SCursor& cur) {
  const SExpr& e = cur.next();
  try {
    if (e.is_atom()) {
      if (!is_identifier(e.text)) throw SyntaxError(e.where() + ": bad identifier '" + e.text + "'");
      if (cur.done() || !cur.peek().is_bracket())
        throw SyntaxError(e.where() + ": variable '" + e.text + "' needs an index");
      return Term::var(e.text, cur.next().index);
    }
    if (!e.is_list() || e.items.empty()) throw SyntaxError(e.where() + ": expected a term");
    SCursor in(e.items);
    const SExpr& head = in.next();
    if (head.is_atom("lam")) {
      const SExpr& x = in.next();
      if (!x.is_atom() || !is_identifier(x.text)) throw SyntaxError(x.where() + ": expected a binder name");
      const SExpr& l = in.next();
      if (!l.is_bracket()) throw SyntaxError(l.where() + ": expected the binder index");
      Term body = term_from_sexpr(in);
      in.expect_done("lam");
      return Term::abs(x.text, l.index, std::move(body));
    }
    if (head.is_atom("app")) {
      Term f = term_from_sexpr(in);
      Term a = term_from_sexpr(in);
      in.expect_done("app");
      return Term::app(std::move(f), std::move(a));
    }
    throw SyntaxError(head.where() + ": expected 'lam' or 'app'");
  } catch (const DegreeError& err) {
    if (err.detail().rfind(e.where(), 0) == 0) throw;
    throw DegreeError(e.where() + ": " + err.detail());
  } catch (const JoinabilityError& err) {
    if (err.detail().rfind(e.where(), 0) == 0) throw;
    throw JoinabilityError(e.where() + ": " + err.detail());
  }
}

Term parse_term(std::string_view text) {
  auto forms = read_sexprs(text);
  SCursor cur(forms);
  Term t = term_from_sexpr(cur);
  cur.expect_done("term");
  return t;
}

namespace {

void print(const Term& m, std::string& out) {
  switch (m.kind()) {
    case Term::Kind::Var:
      out += m.name();
      out += to_string(m.idx());
      break;
    case Term::Kind::Abs:
      out += "(lam ";
      out += m.name();
      out += ' ';
      out += to_string(m.idx());
      out += ' ';
      print(m.body(), out);
      out += ')';
      break;
    case Term::Kind::App:
      out += "(app ";
      print(m.fun(), out);
      out += ' ';
      print(m.arg(), out);
      out += ')';
      break;
  }
}

}  // namespace

std::string to_string(const Term& m) {
  std::string s;
  print(m, s);
  return s;
}

// ---------------------------------------------------------------- names

void collect_names(const Term& m, std::set<std::string>& out) {
  switch (m.kind()) {
    case Term::Kind::Var:
      out.insert(m.name());
      break;
    case Term::Kind::Abs:
      out.insert(m.name());
      collect_names(m.body(), out);
      break;
    case Term::Kind::App:
      collect_names(m.fun(), out);
      collect_names(m.arg(), out);
      break;
  }
}

std::string fresh_name(const std::set<std::string>& avoid) {
  for (std::size_t k = 0;; ++k) {
    std::string s = "_" + std::to_string(k);
    if (!avoid.count(s)) return s;
  }
}

// ---------------------------------------------------------------- substitution

namespace {

using Sigma = std::vector<std::pair<VarKey, Term>>;

struct Subst {
  std::set<std::string> avoid;

  std::string fresh() {
    std::string s = fresh_name(avoid);
    avoid.insert(s);
    return s;
  }

  static const Term* lookup(const Sigma& s, const VarKey& k) {
    for (const auto& [key, t] : s)
      if (key == k) return &t;
    return nullptr;
  }

  Term go(const Term& m, const Sigma& sigma) {
    Sigma live;
    for (const auto& b : sigma)
      if (m.has_free(b.first)) live.push_back(b);
    if (live.empty()) return m;
    switch (m.kind()) {
      case Term::Kind::Var:
        return *lookup(live, m.key());
      case Term::Kind::App: {
        Term f = go(m.fun(), live);
        Term a = go(m.arg(), live);
        return Term::app(std::move(f), std::move(a));
      }
      case Term::Kind::Abs: {
        bool clash = false;
        for (const auto& b : live)
          for (const auto& k : b.second.free_vars())
            if (k.name == m.name()) clash = true;
        if (!clash) return Term::abs(m.name(), m.idx(), go(m.body(), live));
        std::string z = fresh();
        Term body = go(m.body(), Sigma{{m.key(), Term::var(z, m.idx())}});
        return Term::abs(z, m.idx(), go(body, live));
      }
    }
    return m;
  }
};

}  // namespace

Term substitute(const Term& m, const std::vector<std::pair<VarKey, Term>>& bindings) {
  std::vector<Term> family{m};
  for (const auto& [k, n] : bindings) {
    if (n.degree() != k.idx)
      throw DegreeError("substituting " + to_string(k) + " by a term of degree " + to_string(n.degree()));
    family.push_back(n);
  }
  if (!joinable_all(family))
    throw JoinabilityError("substitution family is not pairwise joinable");
  Subst s;
  collect_names(m, s.avoid);
  for (const auto& b : bindings) {
    s.avoid.insert(b.first.name);
    collect_names(b.second, s.avoid);
  }
  Term out = s.go(m, bindings);
  if (out.degree() != m.degree()) throw DegreeError("substitution changed the degree (internal)");
  return out;
}

Term substitute(const Term& m, const VarKey& x, const Term& n) { return substitute(m, {{x, n}}); }

// ---------------------------------------------------------------- lift / lower

namespace {

template <class F>
Term map_indexes(const Term& m, const F& f) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return Term::var(m.name(), f(m.idx()));
    case Term::Kind::Abs:
      return Term::abs(m.name(), f(m.idx()), map_indexes(m.body(), f));
    case Term::Kind::App:
      return Term::app(map_indexes(m.fun(), f), map_indexes(m.arg(), f));
  }
  return m;
}

}  // namespace

Term lift(const Term& m, Index::value_type i) {
  return map_indexes(m, [i](const Index& l) { return l.cons(i); });
}

Term lift_seq(const Term& m, const Index& l) {
  Term out = m;
  for (auto i : l.entries()) out = lift(out, i);
  return out;
}

Term lift_prefix(const Term& m, const Index& k) {
  if (k.empty()) return m;
  return map_indexes(m, [&k](const Index& l) { return concat(k, l); });
}

Term lower_seq(const Term& m, const Index& k) {
  if (!prefix_leq(k, m.degree()))
    throw DegreeError("cannot lower a term of degree " + to_string(m.degree()) + " by " + to_string(k));
  if (k.empty()) return m;
  return map_indexes(m, [&k](const Index& l) {
    if (!prefix_leq(k, l)) throw DegreeError("index " + to_string(l) + " does not start with " + to_string(k));
    return l.drop(k.size());
  });
}

Term lower(const Term& m, Index::value_type i) { return lower_seq(m, Index{i}); }

// ---------------------------------------------------------------- alpha

namespace {

void alpha_rec(const Term& m, std::vector<std::pair<VarKey, std::size_t>>& scope, std::size_t& counter,
               std::string& out) {
  switch (m.kind()) {
    case Term::Kind::Var: {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first.name == m.name() && it->first.idx == m.idx()) {
          out += '#';
          out += std::to_string(it->second);
          out += to_string(m.idx());
          return;
        }
      out += m.name();
      out += to_string(m.idx());
      return;
    }
    case Term::Kind::Abs: {
      std::size_t k = counter++;
      out += "(\\#";
      out += std::to_string(k);
      out += to_string(m.idx());
      out += ' ';
      scope.emplace_back(m.key(), k);
      alpha_rec(m.body(), scope, counter, out);
      scope.pop_back();
      out += ')';
      return;
    }
    case Term::Kind::App:
      out += '(';
      alpha_rec(m.fun(), scope, counter, out);
      out += ' ';
      alpha_rec(m.arg(), scope, counter, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string alpha_key(const Term& m) {
  std::vector<std::pair<VarKey, std::size_t>> scope;
  std::size_t counter = 0;
  std::string out;
  alpha_rec(m, scope, counter, out);
  return out;
}

bool alpha_eq(const Term& m, const Term& n) {
  if (m.same(n)) return true;
  if (m.size() != n.size() || m.degree() != n.degree() || m.free_vars() != n.free_vars()) return false;
  return alpha_key(m) == alpha_key(n);
}

// ---------------------------------------------------------------- paths

const Term& subterm_at(const Term& m, const Path& p) {
  const Term* cur = &m;
  for (auto s : p) {
    if (cur->is_abs() && s == 0)
      cur = &cur->body();
    else if (cur->is_app())
      cur = s == 0 ? &cur->fun() : &cur->arg();
    else
      throw DomainError("path " + to_string(p) + " leaves the term");
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& m, const Path& p, std::size_t i, const Term& t) {
  if (i == p.size()) return t;
  if (m.is_abs() && p[i] == 0) return Term::abs(m.name(), m.idx(), replace_rec(m.body(), p, i + 1, t));
  if (m.is_app()) {
    if (p[i] == 0) return Term::app(replace_rec(m.fun(), p, i + 1, t), m.arg());
    return Term::app(m.fun(), replace_rec(m.arg(), p, i + 1, t));
  }
  throw DomainError("path " + to_string(p) + " leaves the term");
}

}  // namespace

Term replace_at(const Term& m, const Path& p, const Term& t) { return replace_rec(m, p, 0, t); }

std::string to_string(const Path& p) {
  std::string s = "/";
  for (auto x : p) s += x == 0 ? '0' : '1';
  return s;
}

}  // namespace ikc
