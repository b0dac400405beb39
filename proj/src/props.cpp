#include "ikc/props.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "ikc/errors.hpp"
#include "ikc/transform.hpp"

namespace ikc {

void PropertyResult::fail(std::string what) {
  if (failures.size() < 20) failures.push_back(std::move(what));
  ++failure_count;
}

namespace {

const Relation kRelations[] = {Relation::Beta, Relation::Eta, Relation::BetaEta, Relation::Head};

bool subset(const VarSet& a, const VarSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

PropertyResult degree_preservation(const std::vector<Term>& terms) {
  PropertyResult res{"degree and fv preservation"};
  for (const auto& m : terms) {
    for (Relation r : kRelations) {
      auto ss = steps(m, r);
      for (const auto& s : ss) {
        ++res.cases;
        const Term& n = s.result;
        std::string at = to_string(m) + " -" + to_string(r) + "-> " + to_string(n);
        if (n.degree() != m.degree()) res.fail("degree changed: " + at);
        if (s.kind == StepKind::Eta && n.free_vars() != m.free_vars()) res.fail("η changed fv: " + at);
        if (s.kind == StepKind::Beta && !subset(n.free_vars(), m.free_vars())) res.fail("β grew fv: " + at);
      }
      if (r == Relation::Head) {
        if (ss.size() > 1) res.fail("more than one h-step from " + to_string(m));
        if (ss.size() == 1) {
          bool also_beta = false;
          for (const auto& b : step(m, Relation::Beta)) also_beta |= alpha_eq(b, ss[0].result);
          if (!also_beta) res.fail("h-step is not a β-step from " + to_string(m));
        }
      }
    }
  }
  return res;
}

PropertyResult local_confluence(const std::vector<Term>& terms, Relation r, std::size_t depth, unsigned threads) {
  PropertyResult res{"local confluence (" + to_string(r) + ")"};
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::vector<std::pair<std::size_t, std::string>> bad;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < terms.size();) {
      ConfluenceReport rep = check_local_confluence(terms[i], r, depth);
      if (rep.ok()) continue;
      std::lock_guard<std::mutex> lock(mu);
      for (const auto& p : rep.unjoined)
        bad.emplace_back(i, "unjoined peak from " + to_string(p.source) + ": " + to_string(p.left) + " vs " +
                                to_string(p.right));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  std::sort(bad.begin(), bad.end());
  res.cases = terms.size();
  for (auto& [i, what] : bad) res.fail(std::move(what));
  return res;
}

// ---------------------------------------------------------------- types

namespace {

class TypeGen {
 public:
  TypeGen(std::mt19937_64& rng, const std::vector<std::string>& atoms, const std::vector<Index::value_type>& exps)
      : rng_(rng), atoms_(atoms), exps_(exps) {}

  int roll() { return std::uniform_int_distribution<int>(0, 99)(rng_); }

  CanonT simple(std::size_t depth) {
    if (depth == 0 || roll() < 35) return CanonT::atom(atoms_[pick(atoms_.size())]);
    return CanonT::arrow(any(depth - 1), simple(depth - 1));
  }

  // Random degree of length 0..2 over exps.
  CanonType any(std::size_t depth) {
    std::vector<Index::value_type> p;
    int r = roll();
    if (!exps_.empty() && r < 30) p.push_back(exps_[pick(exps_.size())]);
    if (!exps_.empty() && r < 8) p.push_back(exps_[pick(exps_.size())]);
    return at(Index(std::move(p)), depth);
  }

  CanonType at(const Index& degree, std::size_t depth) {
    if (roll() < 12) return CanonType::omega(degree);
    std::vector<CanonT> cs{simple(depth)};
    if (roll() < 30) cs.push_back(simple(depth));
    return CanonType(degree, std::move(cs));
  }

  // A random supertype of u.
  CanonType weaken(const CanonType& u) {
    if (u.is_omega() || roll() < 10) return CanonType::omega(u.prefix());
    std::vector<CanonT> cs;
    for (const auto& c : u.components())
      if (roll() < 70) cs.push_back(weaken(c));
    if (cs.empty()) cs.push_back(weaken(u.components()[pick(u.components().size())]));
    return CanonType(u.prefix(), std::move(cs));
  }

  // A random subtype of u.
  CanonType strengthen(const CanonType& u) {
    std::vector<CanonT> cs;
    for (const auto& c : u.components()) cs.push_back(strengthen(c));
    if (cs.empty() || roll() < 30) cs.push_back(simple(1));
    return CanonType(u.prefix(), std::move(cs));
  }

  CanonT weaken(const CanonT& t) {
    if (t.is_atom()) return t;
    return CanonT::arrow(strengthen(t.arg()), weaken(t.res()));
  }

  CanonT strengthen(const CanonT& t) {
    if (t.is_atom()) return t;
    return CanonT::arrow(weaken(t.arg()), strengthen(t.res()));
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937_64& rng_;
  const std::vector<std::string>& atoms_;
  const std::vector<Index::value_type>& exps_;
};

}  // namespace

CanonType random_type(std::mt19937_64& rng, std::size_t depth, const std::vector<std::string>& atoms,
                      const std::vector<Index::value_type>& exps, const Index& degree) {
  TypeGen g(rng, atoms, exps);
  return g.at(degree, depth);
}

PropertyResult subtype_laws(std::uint64_t seed, std::size_t count) {
  PropertyResult res{"subtype laws"};
  std::mt19937_64 rng(seed);
  std::vector<std::string> atoms{"a", "b"};
  std::vector<Index::value_type> exps{0, 1};
  TypeGen g(rng, atoms, exps);
  std::vector<CanonType> pool;
  for (std::size_t i = 0; i < count; ++i) {
    CanonType u = g.any(3);
    CanonType v = g.weaken(u);
    CanonType w = g.weaken(v);
    res.cases += 4;
    if (!subtype(u, u)) res.fail("not reflexive: " + to_string(u));
    if (!subtype(u, CanonType::omega(u.degree()))) res.fail("not below ω: " + to_string(u));
    if (!subtype(u, v)) res.fail("weakening not a supertype: " + to_string(u) + " vs " + to_string(v));
    if (subtype(u, v) && subtype(v, w) && !subtype(u, w))
      res.fail("not transitive: " + to_string(u) + " ⊑ " + to_string(v) + " ⊑ " + to_string(w));
    pool.push_back(u);
  }
  // Transitivity over random triples drawn from the same pool.
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const CanonType &a = pool[pick(rng)], &b = pool[pick(rng)], &c = pool[pick(rng)];
    ++res.cases;
    if (subtype(a, b) && subtype(b, c) && !subtype(a, c))
      res.fail("not transitive: " + to_string(a) + " ⊑ " + to_string(b) + " ⊑ " + to_string(c));
  }
  return res;
}

// ---------------------------------------------------------------- derivations

PropertyResult subject_reduction_transport(const std::vector<CheckedJudgment>& corpus, std::size_t max_len,
                                           std::size_t fuel) {
  PropertyResult res{"subject reduction transport"};
  for (const auto& cj : corpus) {
    const Judgment& j0 = cj.judgment;
    auto expect = [&](const Term& n) { return Judgment{n, env_restrict(j0.env, n.free_vars()), j0.type}; };
    std::unordered_set<std::string> seen{alpha_key(j0.subject)};
    std::vector<std::pair<Term, Derivation>> frontier{{j0.subject, cj.derivation}};
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
      std::vector<std::pair<Term, Derivation>> next;
      for (const auto& [m, d] : frontier) {
        for (const auto& s : steps(m, Relation::BetaEta)) {
          ++res.cases;
          std::string at = to_string(m) + " at " + to_string(s.path);
          try {
            Derivation dn = subject_reduce_step(d, s.path, s.kind);
            Judgment got = check_derivation(dn);
            if (!same_judgment(got, expect(s.result))) {
              res.fail("step " + at + " gave " + pretty(got));
              continue;
            }
            if (seen.insert(alpha_key(s.result)).second) next.emplace_back(s.result, dn);
          } catch (const std::exception& e) {
            res.fail("step " + at + ": " + e.what());
          }
        }
      }
      for (const auto& [n, d] : next) {
        ++res.cases;
        try {
          Judgment got = check_derivation(subject_reduce(cj, n, Relation::BetaEta, fuel));
          if (!same_judgment(got, expect(n))) res.fail("reduct " + to_string(n) + " gave " + pretty(got));
        } catch (const std::exception& e) {
          res.fail("reduct " + to_string(n) + ": " + e.what());
        }
      }
      frontier = std::move(next);
    }
  }
  return res;
}

namespace {

void all_paths(const Term& m, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  if (m.is_abs()) {
    cur.push_back(0);
    all_paths(m.body(), cur, out);
    cur.pop_back();
  } else if (m.is_app()) {
    cur.push_back(0);
    all_paths(m.fun(), cur, out);
    cur.back() = 1;
    all_paths(m.arg(), cur, out);
    cur.pop_back();
  }
}

std::vector<Path> all_paths(const Term& m) {
  std::vector<Path> out;
  Path cur;
  all_paths(m, cur, out);
  return out;
}

// Does some binder on the way from s down to q bind a free variable of the
// subterm at q?
bool bound_on_path(const Term& s, const Path& q) {
  const Term& target = subterm_at(s, q);
  const Term* t = &s;
  for (auto dir : q) {
    if (t->is_abs()) {
      if (target.has_free(t->key())) return true;
      t = &t->body();
    } else {
      t = dir == 0 ? &t->fun() : &t->arg();
    }
  }
  return false;
}

}  // namespace

std::vector<Term> single_beta_expansions(const Term& n) {
  std::set<std::string> names;
  collect_names(n, names);
  std::string z = fresh_name(names);
  names.insert(z);
  std::string w = fresh_name(names);

  std::vector<Term> out;
  std::unordered_set<std::string> seen;
  auto emit = [&](const Path& p, const Term& redex) {
    try {
      Term m = replace_at(n, p, redex);
      if (seen.insert(alpha_key(m)).second) out.push_back(std::move(m));
    } catch (const Error&) {
      // the surrounding term rejects the new subterm
    }
  };
  for (const Path& p : all_paths(n)) {
    const Term& s = subterm_at(n, p);
    const Index& l = s.degree();
    emit(p, Term::app(Term::abs(z, l, Term::var(z, l)), s));
    emit(p, Term::app(Term::abs(z, l, s), Term::var(w, l)));
    for (const Path& q : all_paths(s)) {
      if (q.empty() || bound_on_path(s, q)) continue;
      const Term& sub = subterm_at(s, q);
      try {
        Term body = replace_at(s, q, Term::var(z, sub.degree()));
        emit(p, Term::app(Term::abs(z, sub.degree(), body), sub));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

PropertyResult subject_expansion_roundtrip(const std::vector<CheckedJudgment>& corpus, std::size_t fuel) {
  PropertyResult res{"subject β-expansion round trip"};
  for (const auto& cj : corpus) {
    const Judgment& j0 = cj.judgment;
    for (const Term& m : single_beta_expansions(j0.subject)) {
      ++res.cases;
      std::string at = to_string(m);
      try {
        Derivation e = subject_expand_beta(cj, m, fuel);
        Judgment got = check_derivation(e);
        Judgment want{m, env_enlarge(j0.env, m.free_vars()), j0.type};
        if (!same_judgment(got, want)) {
          res.fail("expansion to " + at + " gave " + pretty(got));
          continue;
        }
        Judgment back = check_derivation(subject_reduce(CheckedJudgment{got, e}, j0.subject, Relation::Beta, fuel));
        if (!same_judgment(back, j0)) res.fail("round trip through " + at + " gave " + pretty(back));
      } catch (const std::exception& ex) {
        res.fail("expansion to " + at + ": " + ex.what());
      }
    }
  }
  return res;
}

}  // namespace ikc
