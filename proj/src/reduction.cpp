#include "ikc/reduction.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "ikc/errors.hpp"

namespace ikc {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Beta:
      return "beta";
    case Relation::Eta:
      return "eta";
    case Relation::BetaEta:
      return "betaeta";
    case Relation::Head:
      return "h";
  }
  return "?";
}

Relation parse_relation(std::string_view s) {
  if (s == "beta") return Relation::Beta;
  if (s == "eta") return Relation::Eta;
  if (s == "betaeta") return Relation::BetaEta;
  if (s == "h") return Relation::Head;
  throw SyntaxError("unknown relation '" + std::string(s) + "' (beta|eta|betaeta|h)");
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent:
      return "Equivalent";
    case Equivalence::Distinct:
      return "Distinct";
    case Equivalence::Unknown:
      return "Unknown";
  }
  return "?";
}

bool is_beta_redex(const Term& m) {
  return m.is_app() && m.fun().is_abs() && m.arg().degree() == m.fun().idx();
}

bool is_eta_redex(const Term& m) {
  if (!m.is_abs()) return false;
  const Term& b = m.body();
  if (!b.is_app()) return false;
  const Term& x = b.arg();
  return x.is_var() && x.name() == m.name() && x.idx() == m.idx() && !b.fun().has_free(m.key());
}

Term contract_beta(const Term& redex) {
  const Term& lam = redex.fun();
  const Term& n = redex.arg();
  if (joinable(lam.body(), n)) return substitute(lam.body(), lam.key(), n);
  // The binder name is free in n at another index; rename it first (BC).
  std::set<std::string> avoid;
  collect_names(lam, avoid);
  collect_names(n, avoid);
  std::string z = fresh_name(avoid);
  Term body = substitute(lam.body(), lam.key(), Term::var(z, lam.idx()));
  return substitute(body, VarKey{z, lam.idx()}, n);
}

Term contract_eta(const Term& redex) { return redex.body().fun(); }

namespace {

void collect(const Term& m, Relation r, Path& path, std::vector<Redex>& out, bool first_only) {
  if (first_only && !out.empty()) return;
  bool beta = r == Relation::Beta || r == Relation::BetaEta;
  bool eta = r == Relation::Eta || r == Relation::BetaEta;
  switch (m.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Abs:
      if (eta && is_eta_redex(m)) {
        out.push_back({path, StepKind::Eta});
        if (first_only) return;
      }
      path.push_back(0);
      collect(m.body(), r, path, out, first_only);
      path.pop_back();
      return;
    case Term::Kind::App:
      if (beta && is_beta_redex(m)) {
        out.push_back({path, StepKind::Beta});
        if (first_only) return;
      }
      path.push_back(0);
      collect(m.fun(), r, path, out, first_only);
      path.back() = 1;
      collect(m.arg(), r, path, out, first_only);
      path.pop_back();
      return;
  }
}

std::optional<Redex> head_redex(const Term& m) {
  Path p;
  const Term* cur = &m;
  while (cur->is_app()) {
    if (is_beta_redex(*cur)) {
      // the redex must be the innermost application of the spine
      if (!cur->fun().is_app()) return Redex{p, StepKind::Beta};
    }
    p.push_back(0);
    cur = &cur->fun();
  }
  return std::nullopt;
}

}  // namespace

std::vector<Redex> redexes(const Term& m, Relation r) {
  std::vector<Redex> out;
  if (r == Relation::Head) {
    if (auto h = head_redex(m)) out.push_back(*h);
    return out;
  }
  Path p;
  collect(m, r, p, out, false);
  return out;
}

std::optional<Redex> first_redex(const Term& m, Relation r) {
  if (r == Relation::Head) return head_redex(m);
  std::vector<Redex> out;
  Path p;
  collect(m, r, p, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

Term contract(const Term& m, const Redex& rx) {
  const Term& sub = subterm_at(m, rx.path);
  Term red = rx.kind == StepKind::Beta ? contract_beta(sub) : contract_eta(sub);
  return replace_at(m, rx.path, red);
}

std::vector<Step> steps(const Term& m, Relation r) {
  std::vector<Step> out;
  for (auto& rx : redexes(m, r)) out.push_back({rx.path, rx.kind, contract(m, rx)});
  return out;
}

std::vector<Term> step(const Term& m, Relation r) {
  std::vector<Term> out;
  std::unordered_set<std::string> seen;
  for (auto& s : steps(m, r))
    if (seen.insert(alpha_key(s.result)).second) out.push_back(s.result);
  return out;
}

ReductionOutcome normalize(const Term& m, Relation r, std::size_t fuel) {
  Term cur = m;
  std::size_t n = 0;
  for (;;) {
    auto rx = first_redex(cur, r);
    if (!rx) return NormalForm{cur, n};
    if (n >= fuel) return FuelExhausted{cur, n};
    cur = contract(cur, *rx);
    ++n;
  }
}

namespace {

// Breadth-first exploration with α-deduplication and a visit budget.
class Explorer {
 public:
  Explorer(Relation r, std::size_t cap) : r_(r), cap_(cap) {}

  const std::vector<Term>& succ(const Term& t, const std::string& key) {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, step(t, r_)).first->second;
  }

  Relation relation() const { return r_; }
  std::size_t cap() const { return cap_; }

 private:
  Relation r_;
  std::size_t cap_;
  std::unordered_map<std::string, std::vector<Term>> memo_;
};

// Joint search: grows both reduct sets level by level and stops as soon as
// they meet.
bool meet(Explorer& ex, const Term& a, const Term& b, std::size_t levels) {
  std::unordered_set<std::string> seen_a, seen_b;
  std::vector<std::pair<Term, std::string>> fa, fb;
  std::string ka = alpha_key(a), kb = alpha_key(b);
  if (ka == kb) return true;
  seen_a.insert(ka);
  seen_b.insert(kb);
  fa.emplace_back(a, ka);
  fb.emplace_back(b, kb);
  auto grow = [&](std::vector<std::pair<Term, std::string>>& frontier, std::unordered_set<std::string>& seen,
                  const std::unordered_set<std::string>& other) {
    std::vector<std::pair<Term, std::string>> next;
    for (auto& [t, k] : frontier) {
      for (const auto& s : ex.succ(t, k)) {
        std::string sk = alpha_key(s);
        if (other.count(sk)) return true;
        if (seen.size() < ex.cap() && seen.insert(sk).second) next.emplace_back(s, std::move(sk));
      }
    }
    frontier = std::move(next);
    return false;
  };
  for (std::size_t l = 0; l < levels; ++l) {
    if (fa.empty() && fb.empty()) return false;
    if (grow(fa, seen_a, seen_b)) return true;
    if (grow(fb, seen_b, seen_a)) return true;
  }
  return false;
}

}  // namespace

Equivalence equiv(const Term& m, const Term& n, Relation r, std::size_t fuel) {
  if (alpha_eq(m, n)) return Equivalence::Equivalent;
  auto a = normalize(m, r, fuel);
  auto b = normalize(n, r, fuel);
  auto* na = std::get_if<NormalForm>(&a);
  auto* nb = std::get_if<NormalForm>(&b);
  if (na && nb) return alpha_eq(na->term, nb->term) ? Equivalence::Equivalent : Equivalence::Distinct;
  Explorer ex(r, fuel);
  return meet(ex, m, n, fuel) ? Equivalence::Equivalent : Equivalence::Unknown;
}

std::optional<std::vector<Step>> find_reduction(const Term& m, const Term& n, Relation r, std::size_t fuel) {
  std::string target = alpha_key(n);
  struct Node {
    Term term;
    std::size_t parent;
    Step via;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  std::string k0 = alpha_key(m);
  if (k0 == target) return std::vector<Step>{};
  seen.insert(k0);
  nodes.push_back({m, 0, {}});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (auto& s : steps(nodes[i].term, r)) {
      std::string k = alpha_key(s.result);
      if (!seen.insert(k).second) continue;
      nodes.push_back({s.result, i, s});
      if (k == target) {
        std::vector<Step> path;
        for (std::size_t j = nodes.size() - 1; j != 0; j = nodes[j].parent) path.push_back(nodes[j].via);
        return std::vector<Step>(path.rbegin(), path.rend());
      }
      if (nodes.size() >= fuel) return std::nullopt;
    }
  }
  return std::nullopt;
}

ConfluenceReport check_local_confluence(const Term& m, Relation r, std::size_t depth, std::size_t margin,
                                        std::size_t node_cap) {
  ConfluenceReport rep;
  Explorer ex(r, node_cap);
  std::unordered_set<std::string> seen;
  std::vector<std::pair<Term, std::string>> frontier;
  std::string k = alpha_key(m);
  seen.insert(k);
  frontier.emplace_back(m, k);
  for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<std::pair<Term, std::string>> next;
    for (auto& [t, tk] : frontier) {
      ++rep.sources;
      const auto succ = ex.succ(t, tk);
      for (std::size_t i = 0; i < succ.size(); ++i)
        for (std::size_t j = i + 1; j < succ.size(); ++j) {
          ++rep.peaks;
          if (!meet(ex, succ[i], succ[j], depth + margin)) rep.unjoined.push_back({t, succ[i], succ[j]});
        }
      for (const auto& s : succ) {
        std::string sk = alpha_key(s);
        if (seen.insert(sk).second) next.emplace_back(s, std::move(sk));
      }
    }
    frontier = std::move(next);
  }
  return rep;
}

}  // namespace ikc
