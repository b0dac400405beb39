#include "ikc/semantics.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ikc/enumerate.hpp"
#include "ikc/errors.hpp"
#include "ikc/typecheck.hpp"

namespace ikc {

const std::vector<ExampleType>& all_example_types() {
  static const std::vector<ExampleType> all{ExampleType::Id0,  ExampleType::Id1,  ExampleType::D,
                                            ExampleType::Nat0, ExampleType::Nat1, ExampleType::NatP0};
  return all;
}

std::string to_string(ExampleType t) {
  switch (t) {
    case ExampleType::Id0:
      return "Id0";
    case ExampleType::Id1:
      return "Id1";
    case ExampleType::D:
      return "D";
    case ExampleType::Nat0:
      return "Nat0";
    case ExampleType::Nat1:
      return "Nat1";
    case ExampleType::NatP0:
      return "NatP0";
  }
  return "?";
}

ExampleType parse_example_type(std::string_view s) {
  for (auto t : all_example_types())
    if (to_string(t) == s) return t;
  throw SyntaxError("unknown example type '" + std::string(s) + "' (expected Id0, Id1, D, Nat0, Nat1 or NatP0)");
}

CanonType example_type(ExampleType t) {
  switch (t) {
    case ExampleType::Id0:
      return parse_type("(-> a a)");
    case ExampleType::Id1:
      return parse_type("(e 1 (-> a a))");
    case ExampleType::D:
      return parse_type("(-> (^ a (-> a b)) b)");
    case ExampleType::Nat0:
      return parse_type("(-> (-> a a) (-> a a))");
    case ExampleType::Nat1:
      return parse_type("(e 1 (-> (-> a a) (-> a a)))");
    case ExampleType::NatP0:
      return parse_type("(-> (-> (e 1 a) a) (-> (e 1 a) a))");
  }
  return {};
}

Index example_degree(ExampleType t) {
  return (t == ExampleType::Id1 || t == ExampleType::Nat1) ? Index{1} : Index();
}

namespace {

Term v(const char* x, const Index& l) { return Term::var(x, l); }

// λf^L.λy^L.(f^L)^n y^L
Term numeral(std::size_t n, const Index& l) {
  Term body = v("y", l);
  for (std::size_t i = 0; i < n; ++i) body = Term::app(v("f", l), body);
  return Term::abs("f", l, Term::abs("y", l, body));
}

std::size_t spine_length(const Term& m) {
  std::size_t n = 0;
  for (const Term* t = &m; t->is_app(); t = &t->arg()) ++n;
  return n;
}

std::string match(ExampleType t, const Term& nf) {
  const Index l = example_degree(t);
  switch (t) {
    case ExampleType::Id0:
    case ExampleType::Id1:
      return alpha_eq(nf, Term::abs("y", l, v("y", l))) ? "identity" : "";
    case ExampleType::D:
      return alpha_eq(nf, Term::abs("y", l, Term::app(v("y", l), v("y", l)))) ? "self-application" : "";
    case ExampleType::Nat0:
    case ExampleType::Nat1: {
      if (alpha_eq(nf, Term::abs("f", l, v("f", l)))) return "λf.f";
      if (!nf.is_abs() || !nf.body().is_abs()) return "";
      std::size_t n = spine_length(nf.body().body());
      return alpha_eq(nf, numeral(n, l)) ? "n=" + std::to_string(n) : "";
    }
    case ExampleType::NatP0: {
      Index one{1};
      if (alpha_eq(nf, Term::abs("f", l, v("f", l)))) return "λf.f";
      Term p = Term::abs("f", l, Term::abs("y", one, Term::app(v("f", l), v("y", one))));
      return alpha_eq(nf, p) ? "λf.λy.f y" : "";
    }
  }
  return "";
}

}  // namespace

OracleVerdict oracle_membership(ExampleType t, const Term& m, std::size_t fuel) {
  OracleVerdict out;
  if (!m.free_vars().empty()) {
    out.witness = "not closed";
    return out;
  }
  if (m.degree() != example_degree(t)) {
    out.witness = "degree " + to_string(m.degree()) + ", expected " + to_string(example_degree(t));
    return out;
  }
  // Leftmost-outermost is normalizing, so a cycle in its sequence means
  // there is no β-normal form at all.
  std::unordered_set<std::string> seen{alpha_key(m)};
  Term nf = m;
  std::size_t steps = 0;
  while (auto rx = first_redex(nf, Relation::Beta)) {
    if (steps == fuel) {
      out.undecided = true;
      out.witness = "undecided within fuel after " + std::to_string(steps) + " steps";
      return out;
    }
    nf = contract(nf, *rx);
    ++steps;
    if (!seen.insert(alpha_key(nf)).second) {
      out.witness = "leftmost-outermost reduction cycles after " + std::to_string(steps) + " steps; no β-normal form";
      return out;
    }
  }
  std::string shape = match(t, nf);
  out.member = !shape.empty();
  out.witness = to_string(nf) + (out.member ? " (" + shape + ")" : " does not match");
  return out;
}

bool soundness_check(const CheckedJudgment& d, ExampleType t, std::size_t fuel) {
  const Judgment& j = d.judgment;
  if (!j.env.empty()) throw TypeMismatchError("environment is not empty: " + to_string(j.env));
  if (j.type != example_type(t))
    throw TypeMismatchError("type " + to_string(j.type) + " is not " + to_string(t) + " = " +
                            to_string(example_type(t)));
  return oracle_membership(t, j.subject, fuel).member;
}

CompletenessReport completeness_sample(ExampleType t, std::size_t size_bound, std::size_t fuel,
                                       bool check_non_members) {
  CompletenessReport rep;
  const CanonType u = example_type(t);
  for (const Term& m : enumerate_closed(size_bound, {Index(), Index{1}}, example_degree(t))) {
    ++rep.enumerated;
    OracleVerdict o = oracle_membership(t, m, fuel);
    if (o.undecided) ++rep.undecided;
    if (!o.member && (o.undecided || !check_non_members)) continue;
    TypecheckResult r = bounded_typecheck(m, Env(), u, fuel);
    if (!o.member) {
      if (r.verdict == Verdict::Found) rep.typable_non_members.push_back(m);
      continue;
    }
    ++rep.members;
    switch (r.verdict) {
      case Verdict::Found:
        ++rep.found;
        break;
      case Verdict::Unknown:
        rep.unknown.push_back(m);
        break;
      case Verdict::RefutedByGeneration:
        rep.refuted.push_back(m);
        break;
    }
  }
  return rep;
}

SaturationReport saturation_check(const std::vector<Term>& terms, const std::vector<Term>& closed_under, Relation r,
                                  std::size_t depth) {
  std::unordered_map<std::string, Term> in;
  for (const auto& t : terms) in.emplace(alpha_key(t), t);
  SaturationReport rep;
  for (const auto& m : closed_under) {
    ++rep.checked;
    if (in.count(alpha_key(m))) continue;
    std::unordered_set<std::string> seen{alpha_key(m)};
    std::vector<Term> frontier{m};
    for (std::size_t k = 0; k < depth && !frontier.empty(); ++k) {
      std::vector<Term> next;
      for (const auto& t : frontier)
        for (auto& n : step(t, r)) {
          std::string key = alpha_key(n);
          if (!seen.insert(key).second) continue;
          if (auto it = in.find(key); it != in.end()) rep.violations.emplace_back(m, it->second);
          next.push_back(std::move(n));
        }
      frontier = std::move(next);
    }
  }
  return rep;
}

std::vector<Term> lift_all(const std::vector<Term>& xs, Index::value_type i) {
  std::vector<Term> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(lift(x, i));
  return out;
}

std::vector<Term> intersect(const std::vector<Term>& xs, const std::vector<Term>& ys) {
  std::unordered_set<std::string> keys;
  for (const auto& y : ys) keys.insert(alpha_key(y));
  std::vector<Term> out;
  for (const auto& x : xs)
    if (keys.count(alpha_key(x))) out.push_back(x);
  return out;
}

bool lift_distributes(const std::vector<Term>& xs, const std::vector<Term>& ys, Index::value_type i) {
  auto keys = [](const std::vector<Term>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(alpha_key(t));
    return out;
  };
  return keys(lift_all(intersect(xs, ys), i)) == keys(intersect(lift_all(xs, i), lift_all(ys, i)));
}

}  // namespace ikc
