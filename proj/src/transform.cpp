#include "ikc/transform.hpp"

#include <stdexcept>

#include "ikc/errors.hpp"

namespace ikc {

namespace {

[[noreturn]] void internal(const std::string& what) { throw std::logic_error("ikc transformer: " + what); }

std::set<std::string> names_in(std::initializer_list<const Term*> ts) {
  std::set<std::string> out;
  for (const Term* t : ts) collect_names(*t, out);
  return out;
}

bool name_free_in(const std::string& name, const Term& t) {
  for (const auto& k : t.free_vars())
    if (k.name == name) return true;
  return false;
}

const Term& subject(const Derivation& d) { return conclusion(d).subject; }

Derivation sub_restrict(const Derivation& d, const Env& g, const CanonType& u) {
  return sub_to(d, env_restrict(g, subject(d).free_vars()), u);
}

}  // namespace

// ---------------------------------------------------------------- invert_abs

AbsShape invert_abs(const Judgment& j) {
  if (!j.subject.is_abs()) throw PreconditionError("invert_abs needs an abstraction subject");
  const CanonType& u = j.type;
  const Index& k = u.prefix();
  if (u.is_omega()) return OmegaShape{k};
  VarKey x = j.subject.key();
  const Term& body = j.subject.body();
  bool free = body.has_free(x);
  std::vector<InvertedComponent> out;
  for (const auto& c : u.components()) {
    if (!c.is_arrow())
      throw ShapeRefutation("type component " + to_string(c) + " of an abstraction is neither ω nor an arrow");
    CanonType bound = expand_prefix(k, c.arg());
    if (bound.degree() != x.idx)
      throw ShapeRefutation("argument type " + to_string(bound) + " has degree " + to_string(bound.degree()) +
                            " but the binder is " + to_string(x));
    CanonType res = expand_prefix(k, CanonType::of(c.res()));
    Env g = free ? j.env.with(x, bound) : j.env;
    out.push_back({c.arg(), c.res(), Judgment{body, g, res}});
  }
  return out;
}

// ---------------------------------------------------------------- renaming

namespace {

Derivation rename_rec(const Derivation& d, const VarKey& from, const std::string& to) {
  using R = Derivation::Rule;
  if (!subject(d).has_free(from)) return d;
  switch (d.rule()) {
    case R::Ax:
      return Derivation::ax(to, d.type());
    case R::Omega:
      return Derivation::omega(substitute(d.term(), from, Term::var(to, from.idx)));
    case R::ArrI:
    case R::ArrIW: {
      std::string y = d.name();
      Derivation p = d.premise();
      if (y == to) {
        std::set<std::string> avoid = names_in({&subject(d)});
        avoid.insert(to);
        avoid.insert(from.name);
        std::string w = fresh_name(avoid);
        p = rename_rec(p, VarKey{y, d.idx()}, w);
        y = w;
      }
      p = rename_rec(p, from, to);
      if (d.rule() == R::ArrI) return Derivation::arr_i(y, d.idx(), d.type(), p);
      return Derivation::arr_iw(y, d.idx(), p);
    }
    case R::ArrE:
      return Derivation::arr_e(rename_rec(d.left(), from, to), rename_rec(d.right(), from, to));
    case R::InterI:
      return Derivation::inter_i(rename_rec(d.left(), from, to), rename_rec(d.right(), from, to));
    case R::Exp:
      return Derivation::exp(d.j(), rename_rec(d.premise(), VarKey{from.name, from.idx.drop(1)}, to));
    case R::Sub: {
      Env::Map m = d.env().bindings();
      auto node = m.extract(from);
      node.key() = VarKey{to, from.idx};
      m.insert(std::move(node));
      return Derivation::sub(rename_rec(d.premise(), from, to), Env(std::move(m)), d.type());
    }
    default:
      internal("macro node reached renaming");
  }
}

}  // namespace

Derivation rename_free_in_derivation(const Derivation& d, const VarKey& from, const std::string& to) {
  if (from.name == to) return d;
  return rename_rec(elaborate(d), from, to);
}

// ---------------------------------------------------------------- inversion

namespace {

// Premises of `in` speak about the binder of `src`; restate them for the
// binder name `name`.
void align(std::vector<AbsComponent>& cs, const Term& src, const std::string& name) {
  if (src.name() == name) return;
  for (auto& c : cs) c.premise = rename_rec(c.premise, src.key(), name);
}

AbsInversion invert_rec(const Derivation& d) {
  using R = Derivation::Rule;
  const Judgment& j = conclusion(d);
  switch (d.rule()) {
    case R::Omega:
      return {j.type.prefix(), {}};
    case R::ArrI:
      return {Index(), {{d.type(), conclusion(d.premise()).type.components().front(), d.premise()}}};
    case R::ArrIW:
      return {Index(),
              {{CanonType::omega(d.idx()), conclusion(d.premise()).type.components().front(), d.premise()}}};
    case R::InterI: {
      AbsInversion a = invert_rec(d.left());
      AbsInversion b = invert_rec(d.right());
      align(b.components, subject(d.right()), j.subject.name());
      for (auto& c : b.components) a.components.push_back(std::move(c));
      return a;
    }
    case R::Exp: {
      AbsInversion p = invert_rec(d.premise());
      for (auto& c : p.components) c.premise = Derivation::exp(d.j(), c.premise);
      return {p.prefix.cons(d.j()), std::move(p.components)};
    }
    case R::Sub: {
      AbsInversion p = invert_rec(d.premise());
      const CanonType& ut = d.type();
      if (ut.is_omega()) return {p.prefix, {}};
      VarKey x = j.subject.key();
      bool free = j.subject.body().has_free(x);
      std::vector<AbsComponent> out;
      for (const auto& c : ut.components()) {
        if (!c.is_arrow()) internal("abstraction below a non-arrow component");
        const AbsComponent* pick = nullptr;
        for (const auto& pc : p.components)
          if (subtype(c.arg(), pc.arg) && subtype(pc.res, c.res())) {
            pick = &pc;
            break;
          }
        if (!pick) internal("no premise component below " + to_string(c));
        Env g = free ? d.env().with(x, expand_prefix(p.prefix, c.arg())) : d.env();
        out.push_back({c.arg(), c.res(), sub_to(pick->premise, g, expand_prefix(p.prefix, CanonType::of(c.res())))});
      }
      return {p.prefix, std::move(out)};
    }
    default:
      internal("abstraction concluded by " + rule_name(d.rule()));
  }
}

}  // namespace

AbsInversion invert_abs_derivation(const Derivation& d0) {
  Derivation d = elaborate(d0);
  if (!subject(d).is_abs()) throw PreconditionError("invert_abs_derivation needs an abstraction subject");
  return invert_rec(d);
}

// ---------------------------------------------------------------- lowering

namespace {

Derivation lower1(const Derivation& d, Index::value_type i) {
  using R = Derivation::Rule;
  switch (d.rule()) {
    case R::Omega:
      return Derivation::omega(lower(d.term(), i));
    case R::InterI:
      return Derivation::inter_i(lower1(d.left(), i), lower1(d.right(), i));
    case R::Exp:
      if (d.j() != i) internal("expansion index mismatch while lowering");
      return d.premise();
    case R::Sub:
      return Derivation::sub(lower1(d.premise(), i), env_lower(d.env(), Index{i}), lower_type(d.type(), Index{i}));
    default:
      internal("cannot lower a conclusion of rule " + rule_name(d.rule()));
  }
}

Derivation lower_rec(const Derivation& d, const Index& k) {
  Derivation out = d;
  for (auto i : k.entries()) out = lower1(out, i);
  return out;
}

}  // namespace

Derivation lower_derivation(const Derivation& d0, const Index& k) {
  if (k.empty()) return d0;
  const Judgment& j = conclusion(d0);
  if (!prefix_leq(k, j.type.degree()))
    throw DegreeError("cannot lower a derivation of degree " + to_string(j.type.degree()) + " by " + to_string(k));
  return lower_rec(elaborate(d0), k);
}

// ---------------------------------------------------------------- substitution

namespace {

Derivation subst_rec(const Derivation& d, const VarKey& x, const Derivation& dn) {
  using R = Derivation::Rule;
  const Judgment& j = conclusion(d);
  const Judgment& jn = conclusion(dn);
  switch (d.rule()) {
    case R::Ax:
      return dn;
    case R::Omega: {
      Derivation w = Derivation::omega(substitute(d.term(), x, jn.subject));
      return sub_to(w, env_inter(j.env.without(x), jn.env), j.type);
    }
    case R::ArrI:
    case R::ArrIW: {
      std::string y = d.name();
      Derivation p = d.premise();
      if (name_free_in(y, jn.subject)) {
        std::set<std::string> avoid = names_in({&j.subject, &jn.subject});
        avoid.insert(x.name);
        std::string w = fresh_name(avoid);
        p = rename_rec(p, VarKey{y, d.idx()}, w);
        y = w;
      }
      Derivation r = subst_rec(p, x, dn);
      if (d.rule() == R::ArrI) return Derivation::arr_i(y, d.idx(), d.type(), r);
      return Derivation::arr_iw(y, d.idx(), r);
    }
    case R::ArrE: {
      const Judgment& ja = conclusion(d.left());
      const Judgment& jb = conclusion(d.right());
      bool in_a = ja.env.contains(x), in_b = jb.env.contains(x);
      Derivation a = d.left(), b = d.right();
      if (in_a) a = subst_rec(a, x, in_b ? sub_to(dn, jn.env, ja.env.at(x)) : dn);
      if (in_b) b = subst_rec(b, x, in_a ? sub_to(dn, jn.env, jb.env.at(x)) : dn);
      return Derivation::arr_e(a, b);
    }
    case R::InterI:
      return Derivation::inter_i(subst_rec(d.left(), x, dn), subst_rec(d.right(), x, dn));
    case R::Exp: {
      Derivation low = lower_rec(dn, Index{d.j()});
      return Derivation::exp(d.j(), subst_rec(d.premise(), VarKey{x.name, x.idx.drop(1)}, low));
    }
    case R::Sub: {
      const Judgment& jp = conclusion(d.premise());
      Derivation r = subst_rec(d.premise(), x, sub_to(dn, jn.env, jp.env.at(x)));
      return sub_to(r, env_inter(d.env().without(x), jn.env), d.type());
    }
    default:
      internal("macro node reached substitution");
  }
}

}  // namespace

Derivation subst_derivation(const Derivation& dm0, const VarKey& x, const Derivation& dn0) {
  Derivation dm = elaborate(dm0), dn = elaborate(dn0);
  const Judgment& jm = conclusion(dm);
  const Judgment& jn = conclusion(dn);
  if (!jm.env.contains(x)) throw PreconditionError(to_string(x) + " is not bound in the environment of M");
  if (jm.env.at(x) != jn.type)
    throw PreconditionError("N has type " + to_string(jn.type) + " but " + to_string(x) + " has type " +
                            to_string(jm.env.at(x)));
  if (!joinable(jm.subject, jn.subject)) throw PreconditionError("M and N are not joinable");
  Derivation out = subst_rec(dm, x, dn);
  const Judgment& jo = conclusion(out);
  if (!alpha_eq(jo.subject, substitute(jm.subject, x, jn.subject)) ||
      jo.env != env_inter(jm.env.without(x), jn.env) || jo.type != jm.type)
    internal("substitution produced " + pretty(jo));
  return out;
}

// ---------------------------------------------------------------- eta

namespace {

std::vector<std::pair<CanonT, Derivation>> eta_rec(const Derivation& d, const VarKey& x) {
  using R = Derivation::Rule;
  const Judgment& j = conclusion(d);
  switch (d.rule()) {
    case R::Omega:
      return {};
    case R::ArrE: {
      const Judgment& ja = conclusion(d.left());
      const CanonT& t = ja.type.components().front().res();
      return {{t, sub_to(d.left(), j.env.without(x), arrow_type(j.env.at(x), CanonType::of(t)))}};
    }
    case R::InterI: {
      auto a = eta_rec(d.left(), x);
      auto b = eta_rec(d.right(), x);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case R::Sub: {
      auto p = eta_rec(d.premise(), x);
      std::vector<std::pair<CanonT, Derivation>> out;
      for (const auto& c : d.type().components()) {
        const Derivation* pick = nullptr;
        for (const auto& [t, pd] : p)
          if (subtype(t, c)) {
            pick = &pd;
            break;
          }
        if (!pick) internal("η inversion found no component below " + to_string(c));
        out.emplace_back(c, sub_to(*pick, d.env().without(x), arrow_type(d.env().at(x), CanonType::of(c))));
      }
      return out;
    }
    default:
      internal("η inversion through rule " + rule_name(d.rule()));
  }
}

}  // namespace

std::vector<std::pair<CanonT, Derivation>> eta_invert(const Derivation& d0, const VarKey& x) {
  Derivation d = elaborate(d0);
  const Judgment& j = conclusion(d);
  if (!j.subject.is_app() || !j.subject.arg().is_var() || j.subject.arg().key() != x ||
      j.subject.fun().has_free(x))
    throw PreconditionError("η inversion needs a subject M " + to_string(x) + " with " + to_string(x) + " ∉ fv(M)");
  if (!j.type.degree().empty()) throw PreconditionError("η inversion needs a type of degree ⊘");
  return eta_rec(d, x);
}

// ---------------------------------------------------------------- subject reduction

namespace {

Path tail(const Path& p) { return Path(p.begin() + 1, p.end()); }

Derivation reduce_rec(const Derivation& d, const Path& p, StepKind kind) {
  using R = Derivation::Rule;
  const Judgment& j = conclusion(d);
  switch (d.rule()) {
    case R::Omega:
      return Derivation::omega(contract(d.term(), Redex{p, kind}));
    case R::Sub:
      return sub_restrict(reduce_rec(d.premise(), p, kind), d.env(), d.type());
    case R::InterI:
      return Derivation::inter_i(reduce_rec(d.left(), p, kind), reduce_rec(d.right(), p, kind));
    case R::Exp:
      return Derivation::exp(d.j(), reduce_rec(d.premise(), p, kind));
    case R::ArrI: {
      VarKey x{d.name(), d.idx()};
      if (p.empty()) {
        if (kind != StepKind::Eta) internal("β step at an abstraction");
        const CanonT& t = conclusion(d.premise()).type.components().front();
        for (const auto& [tj, dj] : eta_rec(d.premise(), x))
          if (subtype(tj, t)) return sub_to(dj, j.env, j.type);
        internal("η inversion lost the component " + to_string(t));
      }
      Derivation r = reduce_rec(d.premise(), tail(p), kind);
      if (conclusion(r).env.contains(x)) return Derivation::arr_i(x.name, x.idx, d.type(), r);
      return sub_restrict(Derivation::arr_iw(x.name, x.idx, r), j.env, j.type);
    }
    case R::ArrIW:
      if (p.empty()) internal("η step at a vacuous abstraction");
      return Derivation::arr_iw(d.name(), d.idx(), reduce_rec(d.premise(), tail(p), kind));
    case R::ArrE: {
      if (!p.empty()) {
        Derivation a = d.left(), b = d.right();
        if (p[0] == 0)
          a = reduce_rec(a, tail(p), kind);
        else
          b = reduce_rec(b, tail(p), kind);
        return sub_restrict(Derivation::arr_e(a, b), j.env, j.type);
      }
      if (kind != StepKind::Beta) internal("η step at an application");
      const Judgment& ja = conclusion(d.left());
      const CanonT& arr = ja.type.components().front();
      AbsInversion inv = invert_rec(d.left());
      const AbsComponent* pick = nullptr;
      for (const auto& c : inv.components)
        if (c.arg == arr.arg() && c.res == arr.res()) {
          pick = &c;
          break;
        }
      if (!pick) internal("inversion lost the arrow " + to_string(arr));
      VarKey x = ja.subject.key();
      const Term& q = subject(d.right());
      Derivation prem = pick->premise;
      Derivation r;
      if (subject(prem).has_free(x)) {
        if (!joinable(subject(prem), q) || name_free_in(x.name, q)) {
          std::set<std::string> avoid = names_in({&j.subject});
          std::string z = fresh_name(avoid);
          prem = rename_rec(prem, x, z);
          x.name = z;
        }
        r = subst_rec(prem, x, d.right());
      } else {
        r = prem;
      }
      return sub_restrict(r, j.env, j.type);
    }
    default:
      internal("no redex under rule " + rule_name(d.rule()));
  }
}

}  // namespace

Derivation subject_reduce_step(const Derivation& d0, const Path& path, StepKind kind) {
  Derivation d = elaborate(d0);
  const Judgment& j = conclusion(d);
  Term expect = contract(j.subject, Redex{path, kind});
  Derivation out = reduce_rec(d, path, kind);
  const Judgment& jo = conclusion(out);
  if (!alpha_eq(jo.subject, expect) || jo.type != j.type || jo.env != env_restrict(j.env, expect.free_vars()))
    internal("reduction produced " + pretty(jo));
  return out;
}

Derivation subject_reduce(const CheckedJudgment& cj, const Term& n, Relation r, std::size_t fuel) {
  auto seq = find_reduction(cj.judgment.subject, n, r, fuel);
  if (!seq) throw NotAReductError(to_string(n) + " is not an " + to_string(r) + "-reduct within fuel");
  if (seq->empty()) return cj.derivation;
  Derivation d = elaborate(cj.derivation);
  for (const auto& s : *seq) d = subject_reduce_step(d, s.path, s.kind);
  return d;
}

// ---------------------------------------------------------------- expansion

namespace {

SplitSubstitution split_rec(const Derivation& d, const Term& m, const VarKey& x, const Term& n) {
  using R = Derivation::Rule;
  const Judgment& j = conclusion(d);
  if (m.is_var() && m.key() == x) return {j.type, ax_prime_elaborated(x.name, j.type), d};
  switch (d.rule()) {
    case R::Omega:
      return {CanonType::omega(x.idx), Derivation::omega(m), Derivation::omega(n)};
    case R::Sub: {
      SplitSubstitution s = split_rec(d.premise(), m, x, n);
      Env g1 = env_restrict(d.env(), conclusion(s.left).env.without(x).domain());
      Env g2 = env_restrict(d.env(), conclusion(s.right).env.domain());
      return {s.v, sub_to(s.left, g1.with(x, s.v), d.type()), sub_to(s.right, g2, s.v)};
    }
    case R::InterI: {
      SplitSubstitution a = split_rec(d.left(), m, x, n);
      SplitSubstitution b = split_rec(d.right(), m, x, n);
      return {inter(a.v, b.v), inter_i_prime_elaborated(a.left, b.left), inter_i_prime_elaborated(a.right, b.right)};
    }
    case R::Exp: {
      Index::value_type i = d.j();
      SplitSubstitution s = split_rec(d.premise(), lower(m, i), VarKey{x.name, x.idx.drop(1)}, lower(n, i));
      return {expand_type(i, s.v), Derivation::exp(i, s.left), Derivation::exp(i, s.right)};
    }
    case R::ArrE: {
      if (!m.is_app()) internal("application typed for a non-application");
      bool in_a = m.fun().has_free(x), in_b = m.arg().has_free(x);
      if (in_a && in_b) {
        SplitSubstitution a = split_rec(d.left(), m.fun(), x, n);
        SplitSubstitution b = split_rec(d.right(), m.arg(), x, n);
        return {inter(a.v, b.v), Derivation::arr_e(a.left, b.left), inter_i_prime_elaborated(a.right, b.right)};
      }
      if (in_a) {
        SplitSubstitution a = split_rec(d.left(), m.fun(), x, n);
        return {a.v, Derivation::arr_e(a.left, d.right()), a.right};
      }
      SplitSubstitution b = split_rec(d.right(), m.arg(), x, n);
      return {b.v, Derivation::arr_e(d.left(), b.left), b.right};
    }
    case R::ArrI:
    case R::ArrIW: {
      if (!m.is_abs()) internal("abstraction typed for a non-abstraction");
      VarKey z = m.key();
      Term body = m.body();
      if (name_free_in(z.name, n) || z.name == x.name) {
        std::set<std::string> avoid = names_in({&m, &n, &j.subject});
        std::string w = fresh_name(avoid);
        body = substitute(body, z, Term::var(w, z.idx));
        z.name = w;
      }
      Derivation p = d.premise();
      if (d.name() != z.name) p = rename_rec(p, VarKey{d.name(), d.idx()}, z.name);
      SplitSubstitution s = split_rec(p, body, x, n);
      if (d.rule() == R::ArrI) return {s.v, Derivation::arr_i(z.name, z.idx, d.type(), s.left), s.right};
      return {s.v, Derivation::arr_iw(z.name, z.idx, s.left), s.right};
    }
    default:
      internal("cannot split a conclusion of rule " + rule_name(d.rule()));
  }
}

Derivation expand_rec(const Derivation& d, const Term& m, const Path& p);

}  // namespace

SplitSubstitution split_substitution(const Derivation& d0, const Term& m, const VarKey& x, const Term& n) {
  if (!m.has_free(x)) throw PreconditionError(to_string(x) + " is not free in M");
  if (n.degree() != x.idx) throw PreconditionError("degree of N differs from " + to_string(x));
  if (!joinable(m, n)) throw PreconditionError("M and N are not joinable");
  Derivation d = elaborate(d0);
  if (!alpha_eq(subject(d), substitute(m, x, n))) throw PreconditionError("derivation subject is not M[x := N]");
  return split_rec(d, m, x, n);
}

Derivation expand_redex(const Derivation& d0, const Term& m0) {
  if (!is_beta_redex(m0)) throw NotAnExpansionError(to_string(m0) + " is not a β-redex");
  Derivation d = elaborate(d0);
  const Judgment& j = conclusion(d);
  Term m = m0;
  VarKey x = m.fun().key();
  Term p = m.fun().body();
  const Term& q = m.arg();
  if (name_free_in(x.name, q) || !joinable(p, q)) {
    std::set<std::string> avoid = names_in({&m0});
    std::string z = fresh_name(avoid);
    p = substitute(p, x, Term::var(z, x.idx));
    x.name = z;
    m = Term::app(Term::abs(z, x.idx, p), q);
  }
  if (!alpha_eq(j.subject, contract_beta(m))) throw NotAnExpansionError("the redex does not contract to the subject");
  Env target = env_enlarge(j.env, m.free_vars());
  const CanonType& u = j.type;
  if (u.is_omega()) return sub_to(Derivation::omega(m), target, u);

  const Index& k = u.prefix();
  Derivation dl = lower_rec(d, k);
  const Env& gl = conclusion(dl).env;
  Term pl = lower_seq(p, k), ql = lower_seq(q, k);
  VarKey xl{x.name, x.idx.drop(k.size())};
  bool free = p.has_free(x);
  std::optional<Derivation> acc;
  for (const auto& t : u.components()) {
    Derivation di = sub_to(dl, gl, CanonType::of(t));
    Derivation app;
    if (free) {
      SplitSubstitution s = split_rec(di, pl, xl, ql);
      app = Derivation::arr_e(Derivation::arr_i(xl.name, xl.idx, s.v, s.left), s.right);
    } else {
      app = Derivation::arr_e(Derivation::arr_iw(xl.name, xl.idx, di), Derivation::omega(ql));
    }
    acc = acc ? Derivation::inter_i(*acc, app) : app;
  }
  return sub_to(exp_prefix(k, *acc), target, u);
}

namespace {

Derivation expand_rec(const Derivation& d, const Term& m, const Path& p) {
  using R = Derivation::Rule;
  if (p.empty()) return expand_redex(d, m);
  const Judgment& j = conclusion(d);
  switch (d.rule()) {
    case R::Omega:
      return Derivation::omega(m);
    case R::Sub:
      return sub_to(expand_rec(d.premise(), m, p), env_enlarge(d.env(), m.free_vars()), d.type());
    case R::InterI:
      return Derivation::inter_i(expand_rec(d.left(), m, p), expand_rec(d.right(), m, p));
    case R::Exp:
      return Derivation::exp(d.j(), expand_rec(d.premise(), lower(m, d.j()), p));
    case R::ArrI:
    case R::ArrIW: {
      if (!m.is_abs() || p[0] != 0) internal("path leaves the abstraction");
      VarKey z = m.key();
      Derivation q = d.premise();
      if (d.name() != z.name) q = rename_rec(q, VarKey{d.name(), d.idx()}, z.name);
      Derivation r = expand_rec(q, m.body(), tail(p));
      if (d.rule() == R::ArrI) return Derivation::arr_i(z.name, z.idx, d.type(), r);
      if (conclusion(r).env.contains(z)) return Derivation::arr_i(z.name, z.idx, CanonType::omega(z.idx), r);
      return Derivation::arr_iw(z.name, z.idx, r);
    }
    case R::ArrE: {
      if (!m.is_app()) internal("path leaves the application");
      Derivation a = d.left(), b = d.right();
      if (p[0] == 0)
        a = expand_rec(a, m.fun(), tail(p));
      else
        b = expand_rec(b, m.arg(), tail(p));
      return sub_to(Derivation::arr_e(a, b), env_enlarge(j.env, m.free_vars()), j.type);
    }
    default:
      internal("cannot expand under rule " + rule_name(d.rule()));
  }
}

}  // namespace

Derivation subject_expand_step(const Derivation& d0, const Term& m, const Path& path) {
  Derivation d = elaborate(d0);
  const Judgment& j = conclusion(d);
  const Term& redex = subterm_at(m, path);
  if (!is_beta_redex(redex)) throw NotAnExpansionError("no β-redex at " + to_string(path));
  if (!alpha_eq(contract(m, Redex{path, StepKind::Beta}), j.subject))
    throw NotAnExpansionError(to_string(m) + " does not contract at " + to_string(path) + " to the subject");
  Derivation out = expand_rec(d, m, path);
  const Judgment& jo = conclusion(out);
  if (!alpha_eq(jo.subject, m) || jo.type != j.type || jo.env != env_enlarge(j.env, m.free_vars()))
    internal("expansion produced " + pretty(jo));
  return out;
}

Derivation subject_expand_beta(const CheckedJudgment& cj, const Term& m, std::size_t fuel) {
  auto seq = find_reduction(m, cj.judgment.subject, Relation::Beta, fuel);
  if (!seq) throw NotAnExpansionError(to_string(m) + " does not β-reduce to the subject within fuel");
  if (seq->empty()) return cj.derivation;
  std::vector<Term> terms{m};
  for (const auto& s : *seq) terms.push_back(s.result);
  Derivation d = elaborate(cj.derivation);
  for (std::size_t i = seq->size(); i-- > 0;) d = subject_expand_step(d, terms[i], (*seq)[i].path);
  return d;
}

}  // namespace ikc
