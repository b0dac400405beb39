#include "ikc/typecheck.hpp"

#include <algorithm>
#include <unordered_set>

#include "ikc/errors.hpp"
#include "ikc/reduction.hpp"
#include "ikc/transform.hpp"

namespace ikc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Found:
      return "Found";
    case Verdict::RefutedByGeneration:
      return "RefutedByGeneration";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "?";
}

namespace {

struct Out {
  Verdict verdict;
  std::optional<Derivation> d;
  std::string reason;
};

Out found(Derivation d) { return {Verdict::Found, std::move(d), {}}; }
Out refuted(std::string why) { return {Verdict::RefutedByGeneration, std::nullopt, std::move(why)}; }
Out unknown(std::string why) { return {Verdict::Unknown, std::nullopt, std::move(why)}; }

class Search {
 public:
  explicit Search(std::size_t fuel) : fuel_(fuel) {}
  std::size_t used() const { return used_; }

  Out run(const Term& m, const Env& g, const CanonType& u) {
    if (!spend()) return unknown("fuel exhausted");
    if (g.domain() != m.free_vars()) return refuted("environment domain differs from fv of " + to_string(m));
    if (!env_ok(g)) return refuted("environment is not OK: " + to_string(g));
    if (u.degree() != m.degree())
      return refuted("type degree " + to_string(u.degree()) + " differs from term degree " + to_string(m.degree()));
    if (!env_degree_at_least(g, u.degree())) return refuted("environment degree is below " + to_string(u.degree()));

    if (u.is_omega()) return found(sub_to(Derivation::omega(m), g, u));

    const Index& k = u.prefix();
    if (!k.empty()) {
      Out o = run(lower_seq(m, k), env_lower(g, k), lower_type(u, k));
      if (o.verdict == Verdict::Found) o.d = exp_prefix(k, *o.d);
      return o;
    }

    std::optional<Derivation> acc;
    for (const auto& t : u.components()) {
      Out o = simple(m, g, t);
      if (o.verdict != Verdict::Found) return o;
      acc = acc ? Derivation::inter_i(*acc, *o.d) : *o.d;
    }
    return found(*acc);
  }

 private:
  bool spend() {
    if (used_ >= fuel_) return false;
    ++used_;
    return true;
  }

  // Degree ⊘, type in 𝕋.
  Out simple(const Term& m, const Env& g, const CanonT& t) {
    CanonType u = CanonType::of(t);
    switch (m.kind()) {
      case Term::Kind::Var: {
        const CanonType& v = g.at(m.key());
        if (!subtype(v, u)) return refuted(to_string(m.key()) + " : " + to_string(v) + " is not below " + to_string(t));
        return found(sub_to(ax_prime_elaborated(m.name(), v), g, u));
      }
      case Term::Kind::Abs:
        return abstraction(m, g, u);
      case Term::Kind::App:
        break;
    }
    std::vector<Term> args;
    Term head = m;
    while (head.is_app()) {
      args.push_back(head.arg());
      head = head.fun();
    }
    std::reverse(args.begin(), args.end());
    if (head.is_var()) return spine(head, args, g, t);
    if (args[0].degree() != head.idx())
      return refuted("head abstraction binds " + to_string(head.key()) + " but its argument has degree " +
                     to_string(args[0].degree()));
    return head_beta(m, g, u);
  }

  Out abstraction(const Term& m, const Env& g, const CanonType& u) {
    std::vector<InvertedComponent> cs;
    try {
      cs = std::get<std::vector<InvertedComponent>>(invert_abs(Judgment{m, g, u}));
    } catch (const ShapeRefutation& e) {
      return refuted(e.detail());
    }
    const InvertedComponent& c = cs.front();
    Out o = run(c.premise.subject, c.premise.env, c.premise.type);
    if (o.verdict != Verdict::Found) return o;
    VarKey x = m.key();
    if (m.body().has_free(x)) return found(Derivation::arr_i(x.name, x.idx, c.arg, *o.d));
    return found(sub_to(Derivation::arr_iw(x.name, x.idx, *o.d), g, u));
  }

  Out spine(const Term& head, const std::vector<Term>& args, const Env& g, const CanonT& t) {
    const CanonType& hv = g.at(head.key());
    if (hv.is_omega()) return refuted(to_string(head.key()) + " has type ω and is applied");
    bool unsure = false;
    std::string why;
    for (const auto& comp : hv.components()) {
      CanonT cur = comp;
      std::vector<CanonType> params;
      bool shape = true;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (!cur.is_arrow()) {
          shape = false;
          break;
        }
        params.push_back(cur.arg());
        cur = cur.res();
      }
      if (!shape || !subtype(cur, t)) continue;
      Derivation fun = sub_to(ax_prime_elaborated(head.name(), hv), Env({{head.key(), hv}}), CanonType::of(comp));
      bool ok = true;
      for (std::size_t i = 0; i < args.size() && ok; ++i) {
        Out o = run(args[i], env_restrict(g, args[i].free_vars()), params[i]);
        if (o.verdict == Verdict::Found) {
          fun = Derivation::arr_e(fun, *o.d);
          continue;
        }
        ok = false;
        if (o.verdict == Verdict::Unknown) {
          unsure = true;
          why = o.reason;
        }
      }
      if (ok) return found(sub_to(fun, g, CanonType::of(t)));
    }
    if (unsure) return unknown(why);
    return refuted("no component of " + to_string(hv) + " types " + to_string(head.key()) + " applied to " +
                   std::to_string(args.size()) + " arguments at " + to_string(t));
  }

  Out head_beta(const Term& m, const Env& g, const CanonType& u) {
    std::vector<Term> chain{m};
    std::vector<Path> paths;
    std::unordered_set<std::string> seen{alpha_key(m)};
    Term cur = m;
    while (auto rx = first_redex(cur, Relation::Head)) {
      if (!spend()) return unknown("fuel exhausted during head reduction");
      paths.push_back(rx->path);
      cur = contract(cur, *rx);
      if (!seen.insert(alpha_key(cur)).second) return unknown("head reduction of " + to_string(m) + " loops");
      chain.push_back(cur);
    }
    Out o = run(cur, env_restrict(g, cur.free_vars()), u);
    if (o.verdict != Verdict::Found) return o;
    Derivation d = *o.d;
    for (std::size_t i = paths.size(); i-- > 0;) d = subject_expand_step(d, chain[i], paths[i]);
    return found(sub_to(d, g, u));
  }

  std::size_t fuel_;
  std::size_t used_ = 0;
};

}  // namespace

TypecheckResult bounded_typecheck(const Term& m, const Env& g, const CanonType& u, std::size_t fuel) {
  Search s(fuel);
  Out o = s.run(m, g, u);
  TypecheckResult r;
  r.verdict = o.verdict;
  r.derivation = std::move(o.d);
  r.reason = std::move(o.reason);
  r.fuel_used = s.used();
  if (r.derivation) check_derivation(*r.derivation);
  return r;
}

}  // namespace ikc
