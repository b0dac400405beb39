#include "ikc/derivation.hpp"

#include <mutex>
#include <optional>

#include "ikc/errors.hpp"

namespace ikc {

struct Derivation::Node {
  Rule rule;
  std::string name;
  Index idx;
  CanonType type;
  Term term;
  Env env;
  Index::value_type j = 0;
  Derivation a, b;

  mutable std::once_flag once;
  mutable std::optional<Judgment> memo;
};

namespace {

std::shared_ptr<Derivation::Node> make(Derivation::Rule r) {
  auto n = std::make_shared<Derivation::Node>();
  n->rule = r;
  return n;
}

}  // namespace

Derivation Derivation::ax(std::string x, CanonType t) {
  auto n = make(Rule::Ax);
  n->name = std::move(x);
  n->type = std::move(t);
  return Derivation(std::move(n));
}

Derivation Derivation::omega(Term m) {
  auto n = make(Rule::Omega);
  n->term = std::move(m);
  return Derivation(std::move(n));
}

Derivation Derivation::arr_i(std::string x, Index l, CanonType u, Derivation premise) {
  auto n = make(Rule::ArrI);
  n->name = std::move(x);
  n->idx = std::move(l);
  n->type = std::move(u);
  n->a = std::move(premise);
  return Derivation(std::move(n));
}

Derivation Derivation::arr_iw(std::string x, Index l, Derivation premise) {
  auto n = make(Rule::ArrIW);
  n->name = std::move(x);
  n->idx = std::move(l);
  n->a = std::move(premise);
  return Derivation(std::move(n));
}

Derivation Derivation::arr_e(Derivation fun, Derivation arg) {
  auto n = make(Rule::ArrE);
  n->a = std::move(fun);
  n->b = std::move(arg);
  return Derivation(std::move(n));
}

Derivation Derivation::inter_i(Derivation a, Derivation b) {
  auto n = make(Rule::InterI);
  n->a = std::move(a);
  n->b = std::move(b);
  return Derivation(std::move(n));
}

Derivation Derivation::exp(Index::value_type j, Derivation premise) {
  auto n = make(Rule::Exp);
  n->j = j;
  n->a = std::move(premise);
  return Derivation(std::move(n));
}

Derivation Derivation::sub(Derivation premise, Env env, CanonType type) {
  auto n = make(Rule::Sub);
  n->a = std::move(premise);
  n->env = std::move(env);
  n->type = std::move(type);
  return Derivation(std::move(n));
}

Derivation Derivation::inter_i_prime(Derivation a, Derivation b) {
  auto n = make(Rule::InterIPrime);
  n->a = std::move(a);
  n->b = std::move(b);
  return Derivation(std::move(n));
}

Derivation Derivation::ax_prime(std::string x, CanonType u) {
  auto n = make(Rule::AxPrime);
  n->name = std::move(x);
  n->type = std::move(u);
  return Derivation(std::move(n));
}

Derivation::Rule Derivation::rule() const { return node_->rule; }
const std::string& Derivation::name() const { return node_->name; }
const Index& Derivation::idx() const { return node_->idx; }
const CanonType& Derivation::type() const { return node_->type; }
const Term& Derivation::term() const { return node_->term; }
const Env& Derivation::env() const { return node_->env; }
Index::value_type Derivation::j() const { return node_->j; }
const Derivation& Derivation::left() const { return node_->a; }
const Derivation& Derivation::right() const { return node_->b; }
const Derivation& Derivation::premise() const { return node_->a; }

std::string rule_name(Derivation::Rule r) {
  switch (r) {
    case Derivation::Rule::Ax:
      return "ax";
    case Derivation::Rule::Omega:
      return "w";
    case Derivation::Rule::ArrI:
      return "arrI";
    case Derivation::Rule::ArrIW:
      return "arrIW";
    case Derivation::Rule::ArrE:
      return "arrE";
    case Derivation::Rule::InterI:
      return "interI";
    case Derivation::Rule::Exp:
      return "exp";
    case Derivation::Rule::Sub:
      return "sub";
    case Derivation::Rule::InterIPrime:
      return "interI'";
    case Derivation::Rule::AxPrime:
      return "ax'";
  }
  return "?";
}

// ---------------------------------------------------------------- checking

namespace {

[[noreturn]] void fail(const Derivation& d, const std::string& why) {
  throw RuleError("(" + rule_name(d.rule()) + "): " + why);
}

Judgment compute(const Derivation& d);

// Child conclusion; failures below are prefixed with the route to them.
const Judgment& memo(const Derivation& parent, const Derivation& c, const char* which) {
  try {
    return conclusion(c);
  } catch (const RuleError& e) {
    throw RuleError(rule_name(parent.rule()) + "." + which + " / " + e.detail());
  }
}

Judgment inter_prime_conclusion(const Derivation& d) {
  const Judgment& a = memo(d, d.left(), "left");
  const Judgment& b = memo(d, d.right(), "right");
  if (!alpha_eq(a.subject, b.subject)) fail(d, "premises type different subjects");
  Env g;
  CanonType u;
  try {
    g = env_inter(a.env, b.env);
    u = inter(a.type, b.type);
  } catch (const DegreeError& e) {
    fail(d, e.detail());
  }
  return {a.subject, g, u};
}

Judgment compute(const Derivation& d) {
  using R = Derivation::Rule;
  switch (d.rule()) {
    case R::Ax: {
      if (!d.type().is_simple()) fail(d, "type " + to_string(d.type()) + " is not in 𝕋");
      VarKey x{d.name(), Index()};
      return {Term::var(d.name(), Index()), Env(Env::Map{{x, d.type()}}), d.type()};
    }
    case R::Omega: {
      const Term& m = d.term();
      return {m, env_omega(m), CanonType::omega(m.degree())};
    }
    case R::ArrI: {
      const Judgment& p = memo(d, d.premise(), "premise");
      VarKey x{d.name(), d.idx()};
      if (!p.type.is_simple()) fail(d, "premise type " + to_string(p.type) + " is not in 𝕋");
      if (!p.env.contains(x)) fail(d, to_string(x) + " is not bound in the premise environment");
      if (p.env.at(x) != d.type())
        fail(d, "premise binds " + to_string(x) + " to " + to_string(p.env.at(x)) + ", not " + to_string(d.type()));
      Term m;
      try {
        m = Term::abs(d.name(), d.idx(), p.subject);
      } catch (const Error& e) {
        fail(d, e.detail());
      }
      return {m, p.env.without(x), arrow_type(d.type(), p.type)};
    }
    case R::ArrIW: {
      const Judgment& p = memo(d, d.premise(), "premise");
      VarKey x{d.name(), d.idx()};
      if (!p.type.is_simple()) fail(d, "premise type " + to_string(p.type) + " is not in 𝕋");
      if (p.env.contains(x)) fail(d, to_string(x) + " is bound in the premise environment");
      Term m;
      try {
        m = Term::abs(d.name(), d.idx(), p.subject);
      } catch (const Error& e) {
        fail(d, e.detail());
      }
      return {m, p.env, arrow_type(CanonType::omega(d.idx()), p.type)};
    }
    case R::ArrE: {
      const Judgment& f = memo(d, d.left(), "left");
      const Judgment& a = memo(d, d.right(), "right");
      if (!f.type.is_simple() || !f.type.components().front().is_arrow())
        fail(d, "function type " + to_string(f.type) + " is not an arrow in 𝕋");
      const CanonT& arr = f.type.components().front();
      if (arr.arg() != a.type)
        fail(d, "argument type " + to_string(a.type) + " differs from " + to_string(arr.arg()));
      if (!env_joinable(f.env, a.env)) fail(d, "environments are not joinable");
      Term m;
      Env g;
      try {
        m = Term::app(f.subject, a.subject);
        g = env_inter(f.env, a.env);
      } catch (const Error& e) {
        fail(d, e.detail());
      }
      return {m, g, CanonType::of(arr.res())};
    }
    case R::InterI: {
      const Judgment& a = memo(d, d.left(), "left");
      const Judgment& b = memo(d, d.right(), "right");
      if (!alpha_eq(a.subject, b.subject)) fail(d, "premises type different subjects");
      if (a.env != b.env) fail(d, "premise environments differ");
      if (a.type.degree() != b.type.degree()) fail(d, "premise types have different degrees");
      return {a.subject, a.env, inter(a.type, b.type)};
    }
    case R::Exp: {
      const Judgment& p = memo(d, d.premise(), "premise");
      return {lift(p.subject, d.j()), env_expand(d.j(), p.env), expand_type(d.j(), p.type)};
    }
    case R::Sub: {
      const Judgment& p = memo(d, d.premise(), "premise");
      if (!typing_sub(p.env, p.type, d.env(), d.type()))
        fail(d, "<" + to_string(p.env) + " |- " + to_string(p.type) + "> is not below <" + to_string(d.env()) +
                    " |- " + to_string(d.type()) + ">");
      return {p.subject, d.env(), d.type()};
    }
    case R::InterIPrime:
      return inter_prime_conclusion(d);
    case R::AxPrime: {
      const Index& l = d.type().degree();
      VarKey x{d.name(), l};
      return {Term::var(d.name(), l), Env(Env::Map{{x, d.type()}}), d.type()};
    }
  }
  fail(d, "unknown rule");
}

}  // namespace

const Judgment& conclusion(const Derivation& d) {
  if (d.null()) throw RuleError("empty derivation");
  const auto& n = *d.node_;
  std::call_once(n.once, [&] { n.memo = compute(d); });
  return *n.memo;
}

Judgment check_derivation(const Derivation& d) { return conclusion(d); }

CheckedJudgment certify(const Derivation& d) { return {check_derivation(d), d}; }

// ---------------------------------------------------------------- macros

Derivation sub_to(const Derivation& d, const Env& env, const CanonType& type) {
  const Judgment& j = conclusion(d);
  if (j.env == env && j.type == type) return d;
  return Derivation::sub(d, env, type);
}

Derivation exp_prefix(const Index& k, const Derivation& d) {
  Derivation out = d;
  for (std::size_t i = k.size(); i-- > 0;) out = Derivation::exp(k[i], out);
  return out;
}

Derivation inter_i_prime_elaborated(const Derivation& a, const Derivation& b) {
  const Judgment& ja = conclusion(a);
  const Judgment& jb = conclusion(b);
  Env g = env_inter(ja.env, jb.env);
  return Derivation::inter_i(sub_to(a, g, ja.type), sub_to(b, g, jb.type));
}

Derivation ax_prime_elaborated(const std::string& x, const CanonType& u) {
  const Index& k = u.prefix();
  if (u.is_omega()) return Derivation::omega(Term::var(x, k));
  std::optional<Derivation> acc;
  for (const auto& t : u.components()) {
    Derivation one = exp_prefix(k, Derivation::ax(x, CanonType::of(t)));
    acc = acc ? inter_i_prime_elaborated(*acc, one) : one;
  }
  return *acc;
}

Derivation elaborate(const Derivation& d) {
  using R = Derivation::Rule;
  switch (d.rule()) {
    case R::Ax:
    case R::Omega:
      return d;
    case R::ArrI: {
      Derivation p = elaborate(d.premise());
      return p.same(d.premise()) ? d : Derivation::arr_i(d.name(), d.idx(), d.type(), p);
    }
    case R::ArrIW: {
      Derivation p = elaborate(d.premise());
      return p.same(d.premise()) ? d : Derivation::arr_iw(d.name(), d.idx(), p);
    }
    case R::ArrE: {
      Derivation a = elaborate(d.left()), b = elaborate(d.right());
      return a.same(d.left()) && b.same(d.right()) ? d : Derivation::arr_e(a, b);
    }
    case R::InterI: {
      Derivation a = elaborate(d.left()), b = elaborate(d.right());
      return a.same(d.left()) && b.same(d.right()) ? d : Derivation::inter_i(a, b);
    }
    case R::Exp: {
      Derivation p = elaborate(d.premise());
      return p.same(d.premise()) ? d : Derivation::exp(d.j(), p);
    }
    case R::Sub: {
      Derivation p = elaborate(d.premise());
      return p.same(d.premise()) ? d : Derivation::sub(p, d.env(), d.type());
    }
    case R::InterIPrime: {
      conclusion(d);  // reports macro-level errors against the macro node
      return inter_i_prime_elaborated(elaborate(d.left()), elaborate(d.right()));
    }
    case R::AxPrime:
      return ax_prime_elaborated(d.name(), d.type());
  }
  return d;
}

std::size_t node_count(const Derivation& d) {
  switch (d.rule()) {
    case Derivation::Rule::ArrE:
    case Derivation::Rule::InterI:
    case Derivation::Rule::InterIPrime:
      return 1 + node_count(d.left()) + node_count(d.right());
    case Derivation::Rule::ArrI:
    case Derivation::Rule::ArrIW:
    case Derivation::Rule::Exp:
    case Derivation::Rule::Sub:
      return 1 + node_count(d.premise());
    default:
      return 1;
  }
}

namespace {

void rules_rec(const Derivation& d, std::set<Derivation::Rule>& out) {
  out.insert(d.rule());
  switch (d.rule()) {
    case Derivation::Rule::ArrE:
    case Derivation::Rule::InterI:
    case Derivation::Rule::InterIPrime:
      rules_rec(d.left(), out);
      rules_rec(d.right(), out);
      break;
    case Derivation::Rule::ArrI:
    case Derivation::Rule::ArrIW:
    case Derivation::Rule::Exp:
    case Derivation::Rule::Sub:
      rules_rec(d.premise(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::set<Derivation::Rule> rules_used(const Derivation& d) {
  std::set<Derivation::Rule> out;
  rules_rec(d, out);
  return out;
}

// ---------------------------------------------------------------- text

namespace {

std::string ident(const SExpr& e) {
  if (!e.is_atom() || !is_identifier(e.text)) throw SyntaxError(e.where() + ": expected an identifier");
  return e.text;
}

Index index_of(const SExpr& e) {
  if (!e.is_bracket()) throw SyntaxError(e.where() + ": expected an index");
  return e.index;
}

}  // namespace

Derivation derivation_from_sexpr(const SExpr& e) {
  if (!e.is_list() || e.items.empty() || !e.items[0].is_atom())
    throw SyntaxError(e.where() + ": expected a derivation node");
  const std::string& tag = e.items[0].text;
  const auto& it = e.items;
  auto arity = [&](std::size_t n) {
    if (it.size() != n + 1) throw SyntaxError(e.where() + ": '" + tag + "' takes " + std::to_string(n) + " arguments");
  };
  if (tag == "ax") {
    arity(2);
    return Derivation::ax(ident(it[1]), type_from_sexpr(it[2]));
  }
  if (tag == "w") {
    SCursor cur(it, 1);
    Term m = term_from_sexpr(cur);
    cur.expect_done("w");
    return Derivation::omega(m);
  }
  if (tag == "arrI") {
    arity(4);
    return Derivation::arr_i(ident(it[1]), index_of(it[2]), type_from_sexpr(it[3]), derivation_from_sexpr(it[4]));
  }
  if (tag == "arrIW") {
    arity(3);
    return Derivation::arr_iw(ident(it[1]), index_of(it[2]), derivation_from_sexpr(it[3]));
  }
  if (tag == "arrE") {
    arity(2);
    return Derivation::arr_e(derivation_from_sexpr(it[1]), derivation_from_sexpr(it[2]));
  }
  if (tag == "interI") {
    arity(2);
    return Derivation::inter_i(derivation_from_sexpr(it[1]), derivation_from_sexpr(it[2]));
  }
  if (tag == "interI'") {
    arity(2);
    return Derivation::inter_i_prime(derivation_from_sexpr(it[1]), derivation_from_sexpr(it[2]));
  }
  if (tag == "exp") {
    arity(2);
    return Derivation::exp(parse_nat(it[1]), derivation_from_sexpr(it[2]));
  }
  if (tag == "sub") {
    arity(3);
    return Derivation::sub(derivation_from_sexpr(it[1]), env_from_sexpr(it[2]), type_from_sexpr(it[3]));
  }
  if (tag == "ax'") {
    arity(2);
    return Derivation::ax_prime(ident(it[1]), type_from_sexpr(it[2]));
  }
  throw SyntaxError(e.items[0].where() + ": unknown rule '" + tag + "'");
}

Derivation parse_derivation(std::string_view text) { return derivation_from_sexpr(read_sexpr(text)); }

std::string to_string(const Derivation& d) {
  using R = Derivation::Rule;
  switch (d.rule()) {
    case R::Ax:
      return "(ax " + d.name() + " " + to_string(d.type()) + ")";
    case R::Omega:
      return "(w " + to_string(d.term()) + ")";
    case R::ArrI:
      return "(arrI " + d.name() + " " + to_string(d.idx()) + " " + to_string(d.type()) + " " +
             to_string(d.premise()) + ")";
    case R::ArrIW:
      return "(arrIW " + d.name() + " " + to_string(d.idx()) + " " + to_string(d.premise()) + ")";
    case R::ArrE:
      return "(arrE " + to_string(d.left()) + " " + to_string(d.right()) + ")";
    case R::InterI:
      return "(interI " + to_string(d.left()) + " " + to_string(d.right()) + ")";
    case R::Exp:
      return "(exp " + std::to_string(d.j()) + " " + to_string(d.premise()) + ")";
    case R::Sub:
      return "(sub " + to_string(d.premise()) + " " + to_string(d.env()) + " " + to_string(d.type()) + ")";
    case R::InterIPrime:
      return "(interI' " + to_string(d.left()) + " " + to_string(d.right()) + ")";
    case R::AxPrime:
      return "(ax' " + d.name() + " " + to_string(d.type()) + ")";
  }
  return "?";
}

}  // namespace ikc
