#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ikc/enumerate.hpp"
#include "ikc/errors.hpp"
#include "ikc/props.hpp"
#include "ikc/semantics.hpp"
#include "ikc/transform.hpp"
#include "ikc/typecheck.hpp"

using namespace ikc;

namespace {

constexpr const char* kGrammar = R"G(grammar:
  index   := "[" nat* "]"
  term    := ident index   (e.g. x[1 0]) | "(lam " ident index term ")" | "(app " term term ")"
  type    := ident | "(w " index ")" | "(-> " type " " type ")" | "(^ " type " " type ")" | "(e " nat " " type ")"
  env     := "(" ("(" ident index type ")")* ")"
  judg    := "(judg " term env type ")"
  deriv   := "(ax " ident type ")" | "(w " term ")" | "(arrI " ident index type deriv ")"
           | "(arrIW " ident index deriv ")" | "(arrE " deriv deriv ")" | "(interI " deriv deriv ")"
           | "(exp " nat deriv ")" | "(sub " deriv env type ")" | "(interI' " deriv deriv ")" | "(ax' " ident type ")"
arguments naming an existing file are read from it; anything else is parsed inline.
)G";

enum Exit { kOk = 0, kNegative = 1, kInput = 2 };

std::string load(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t default_fuel() {
  if (const char* s = std::getenv("IKC_FUEL")) {
    try {
      return std::stoul(s);
    } catch (const std::exception&) {
      throw SyntaxError(std::string("IKC_FUEL is not a number: ") + s);
    }
  }
  return 10000;
}

void row(const std::string& a, const std::string& b, const std::string& c) {
  std::cout << a << '\t' << b << '\t' << c << '\n';
}

struct Options {
  std::string rel = "beta";
  std::size_t fuel = 0;
  std::size_t size = 7;
  std::size_t depth = 3;
  std::uint64_t seed = 1;
  std::string env = "()";
  std::string type;
  std::vector<std::string> args;
};

Relation relation(const Options& o) { return parse_relation(o.rel); }

int check_term(const Options& o) {
  Term m = parse_term(load(o.args.at(0)));
  std::string fv;
  for (const auto& k : m.free_vars()) fv += (fv.empty() ? "" : " ") + to_string(k);
  row(to_string(m), "well-formed", "degree " + to_string(m.degree()) + ", fv {" + fv + "}");
  return kOk;
}

int reduce(const Options& o) {
  Term m = parse_term(load(o.args.at(0)));
  auto ss = steps(m, relation(o));
  if (ss.empty()) row(to_string(m), "normal", to_string(relation(o)) + "-normal form");
  for (const auto& s : ss)
    row(to_string(s.result), s.kind == StepKind::Beta ? "beta" : "eta", "at " + to_string(s.path));
  return kOk;
}

int nf(const Options& o) {
  Term m = parse_term(load(o.args.at(0)));
  ReductionOutcome r = normalize(m, relation(o), o.fuel);
  if (auto* n = std::get_if<NormalForm>(&r)) {
    row(to_string(n->term), "NormalForm", std::to_string(n->steps) + " steps");
    return kOk;
  }
  auto& f = std::get<FuelExhausted>(r);
  row(to_string(f.last), "FuelExhausted", std::to_string(f.steps) + " steps");
  return kNegative;
}

int equiv_cmd(const Options& o) {
  Term m = parse_term(load(o.args.at(0)));
  Term n = parse_term(load(o.args.at(1)));
  Equivalence e = equiv(m, n, relation(o), o.fuel);
  row(to_string(m) + " ~ " + to_string(n), to_string(e), to_string(relation(o)));
  return e == Equivalence::Equivalent ? kOk : kNegative;
}

int confluence(const Options& o) {
  Term m = parse_term(load(o.args.at(0)));
  ConfluenceReport r = check_local_confluence(m, relation(o), o.depth);
  row(to_string(m), r.ok() ? "confluent" : "UNJOINED",
      std::to_string(r.sources) + " sources, " + std::to_string(r.peaks) + " peaks, " +
          std::to_string(r.unjoined.size()) + " unjoined");
  for (const auto& p : r.unjoined) row(to_string(p.source), "unjoined", to_string(p.left) + " | " + to_string(p.right));
  return r.ok() ? kOk : kNegative;
}

int subtype_cmd(const Options& o) {
  CanonType u = parse_type(load(o.args.at(0)));
  CanonType v = parse_type(load(o.args.at(1)));
  bool r = subtype(u, v);
  row(to_string(u) + " <= " + to_string(v), r ? "true" : "false", "");
  return r ? kOk : kNegative;
}

int check_deriv(const Options& o) {
  Derivation d = parse_derivation(load(o.args.at(0)));
  try {
    Judgment j = check_derivation(d);
    std::cout << pretty(j) << '\n';
    return kOk;
  } catch (const RuleError& e) {
    std::cout << e.what() << '\n';
    return kNegative;
  }
}

CheckedJudgment certified(const std::string& arg) {
  Derivation d = parse_derivation(load(arg));
  try {
    return certify(d);
  } catch (const RuleError& e) {
    throw SyntaxError(std::string("input derivation does not check: ") + e.what());
  }
}

int sr(const Options& o) {
  CheckedJudgment cj = certified(o.args.at(0));
  Term n = parse_term(load(o.args.at(1)));
  try {
    Derivation d = subject_reduce(cj, n, relation(o), o.fuel);
    std::cout << to_string(d) << '\n' << pretty(check_derivation(d)) << '\n';
    return kOk;
  } catch (const NotAReductError& e) {
    std::cout << e.what() << '\n';
    return kNegative;
  }
}

int expand(const Options& o) {
  CheckedJudgment cj = certified(o.args.at(0));
  Term m = parse_term(load(o.args.at(1)));
  try {
    Derivation d = subject_expand_beta(cj, m, o.fuel);
    std::cout << to_string(d) << '\n' << pretty(check_derivation(d)) << '\n';
    return kOk;
  } catch (const NotAnExpansionError& e) {
    std::cout << e.what() << '\n';
    return kNegative;
  }
}

int typecheck(const Options& o) {
  Term m = parse_term(load(o.args.at(0)));
  Env g = parse_env(load(o.env));
  if (o.type.empty()) throw SyntaxError("typecheck needs --type");
  CanonType u = parse_type(load(o.type));
  TypecheckResult r = bounded_typecheck(m, g, u, o.fuel);
  row(to_string(m), to_string(r.verdict),
      (r.reason.empty() ? "" : r.reason + "; ") + "fuel used " + std::to_string(r.fuel_used));
  if (r.derivation) std::cout << to_string(*r.derivation) << '\n';
  return r.verdict == Verdict::Found ? kOk : kNegative;
}

int oracle(const Options& o) {
  ExampleType t = parse_example_type(o.args.at(0));
  if (o.args.size() < 2) throw SyntaxError("oracle needs at least one term");
  bool all = true;
  for (std::size_t i = 1; i < o.args.size(); ++i) {
    Term m = parse_term(load(o.args[i]));
    OracleVerdict v = oracle_membership(t, m, o.fuel);
    row(to_string(m), v.member ? "member" : v.undecided ? "undecided" : "non-member", v.witness);
    all &= v.member;
  }
  return all ? kOk : kNegative;
}

int soundness(const Options& o) {
  ExampleType t = parse_example_type(o.args.at(0));
  bool all = true;
  for (std::size_t i = 1; i < o.args.size(); ++i) {
    CheckedJudgment cj = certified(o.args[i]);
    bool ok = soundness_check(cj, t, o.fuel);
    row(to_string(cj.judgment.subject), ok ? "sound" : "UNSOUND", to_string(t));
    all &= ok;
  }
  return all ? kOk : kNegative;
}

int completeness(const Options& o) {
  ExampleType t = parse_example_type(o.args.at(0));
  CompletenessReport r = completeness_sample(t, o.size, o.fuel, true);
  for (const auto& m : r.unknown) row(to_string(m), "Unknown", "member, no derivation within fuel");
  for (const auto& m : r.refuted) row(to_string(m), "RefutedByGeneration", "COMPLETENESS VIOLATION");
  for (const auto& m : r.typable_non_members) row(to_string(m), "Found", "SOUNDNESS VIOLATION: typable non-member");
  row(to_string(t), r.ok() ? "complete" : "VIOLATED",
      std::to_string(r.enumerated) + " enumerated, " + std::to_string(r.members) + " members, " +
          std::to_string(r.found) + " found, " + std::to_string(r.unknown.size()) + " unknown, " +
          std::to_string(r.refuted.size()) + " refuted, " + std::to_string(r.undecided) + " undecided");
  return r.ok() ? kOk : kNegative;
}

int saturation(const Options& o) {
  ExampleType t = parse_example_type(o.args.at(0));
  std::vector<Term> universe = enumerate_closed(o.size, {Index(), Index{1}}, example_degree(t));
  std::vector<Term> members;
  for (const auto& m : universe)
    if (oracle_membership(t, m, o.fuel).member) members.push_back(m);
  std::vector<Term> smaller = enumerate_closed(o.size > 2 ? o.size - 2 : 1, {Index(), Index{1}}, example_degree(t));
  SaturationReport r = saturation_check(members, universe, relation(o), o.depth);
  for (const auto& [m, n] : r.violations) row(to_string(m), "VIOLATION", "reduces to member " + to_string(n));
  bool lifted = lift_distributes(members, smaller, 1);
  row(to_string(t), r.ok() ? "saturated" : "NOT SATURATED",
      std::to_string(members.size()) + " members, " + std::to_string(r.checked) + " terms checked, depth " +
          std::to_string(o.depth));
  row(to_string(t), lifted ? "lift-distributes" : "LIFT MISMATCH", "(X ∩ Y)^{+1} = X^{+1} ∩ Y^{+1}");
  return r.ok() && lifted ? kOk : kNegative;
}

int props(const Options& o) {
  std::vector<Index> idxs{Index(), Index{1}};
  std::vector<std::string> names{"x", "y", "z"};
  std::vector<Term> terms = enumerate_open(o.size, names, idxs);
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < 1000; ++i) terms.push_back(random_term(rng, o.size + 2 + i % 8, names, idxs));
  std::vector<PropertyResult> rs;
  rs.push_back(degree_preservation(terms));
  for (Relation r : {Relation::Beta, Relation::Eta, Relation::BetaEta, Relation::Head})
    rs.push_back(local_confluence(terms, r, o.depth));
  rs.push_back(subtype_laws(o.seed, 10000));
  bool all = true;
  for (const auto& r : rs) {
    row(r.name, r.ok() ? "PASS" : "FAIL",
        std::to_string(r.cases) + " cases, " + std::to_string(r.failure_count) + " failures");
    for (const auto& f : r.failures) row(r.name, "failure", f);
    all &= r.ok();
  }
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel for the degree-indexed λ-calculus with expansion variables"};
  app.require_subcommand(1);
  app.footer(kGrammar);
  Options o;
  std::size_t fuel_flag = 0;

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    std::size_t min_args;
    std::size_t max_args;
  };
  const Verb verbs[] = {
      {"check-term", "parse and validate a term", check_term, 1, 1},
      {"reduce", "list all one-step reducts", reduce, 1, 1},
      {"nf", "leftmost-outermost normal form", nf, 1, 1},
      {"equiv", "search for a common reduct", equiv_cmd, 2, 2},
      {"confluence", "check local confluence up to --depth", confluence, 1, 1},
      {"subtype", "decide U ⊑ V", subtype_cmd, 2, 2},
      {"check-deriv", "check a derivation and print its judgment", check_deriv, 1, 1},
      {"sr", "subject reduction: DERIV TERM", sr, 2, 2},
      {"expand", "subject β-expansion: DERIV TERM", expand, 2, 2},
      {"typecheck", "bounded search for TERM : <--env |- --type>", typecheck, 1, 1},
      {"oracle", "semantic membership: TAG TERM...", oracle, 2, 0},
      {"soundness", "TAG DERIV...: subjects of derivations at TAG are members", soundness, 2, 0},
      {"completeness", "TAG: every member up to --size is typable", completeness, 1, 1},
      {"saturation", "TAG: members up to --size are closed under expansion", saturation, 1, 1},
      {"props", "degree, confluence and subtyping property suites", props, 0, 0},
  };
  const Verb* chosen = nullptr;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("args", o.args, "terms, types, derivations or files");
    sub->add_option("--rel", o.rel, "beta|eta|betaeta|h")->capture_default_str();
    sub->add_option("--fuel", fuel_flag, "step/search budget (default 10000, or IKC_FUEL)");
    sub->add_option("--size", o.size, "enumeration size bound")->capture_default_str();
    sub->add_option("--depth", o.depth, "confluence/saturation depth")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for randomized suites")->capture_default_str();
    sub->add_option("--env", o.env, "environment for typecheck")->capture_default_str();
    sub->add_option("--type", o.type, "type for typecheck");
    sub->callback([&chosen, &v] { chosen = &v; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cout << kGrammar;
    return kInput;
  }

  try {
    o.fuel = fuel_flag ? fuel_flag : default_fuel();
    if (o.args.size() < chosen->min_args || (chosen->max_args && o.args.size() > chosen->max_args)) {
      std::cout << "error: " << chosen->name << " takes " << chosen->min_args
                << (chosen->max_args == chosen->min_args ? "" : " or more") << " argument(s)\n"
                << kGrammar;
      return kInput;
    }
    return chosen->run(o);
  } catch (const SyntaxError& e) {
    std::cout << "error: " << e.what() << '\n' << kGrammar;
    return kInput;
  } catch (const Error& e) {
    std::cout << "error: " << e.what() << '\n';
    return kInput;
  }
}
