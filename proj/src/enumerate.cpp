#include "ikc/enumerate.hpp"

#include <map>
#include <unordered_set>

namespace ikc {

namespace {

class ClosedGen {
 public:
  explicit ClosedGen(const std::vector<Index>& idxs) : idxs_(idxs) {}

  const std::vector<Term>& get(std::size_t n, const std::vector<Index>& ctx) {
    auto key = std::make_pair(n, ctx);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Term> out;
    if (n == 1) {
      for (std::size_t k = 0; k < ctx.size(); ++k) out.push_back(Term::var("v" + std::to_string(k), ctx[k]));
    } else {
      for (const auto& l : idxs_) {
        std::vector<Index> inner = ctx;
        inner.push_back(l);
        std::string name = "v" + std::to_string(ctx.size());
        for (const auto& b : get(n - 1, inner))
          if (prefix_leq(b.degree(), l)) out.push_back(Term::abs(name, l, b));
      }
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto& fs = get(i, ctx);
        const auto& as = get(n - 1 - i, ctx);
        for (const auto& f : fs)
          for (const auto& a : as)
            if (prefix_leq(f.degree(), a.degree())) out.push_back(Term::app(f, a));
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const std::vector<Index>& idxs_;
  std::map<std::pair<std::size_t, std::vector<Index>>, std::vector<Term>> memo_;
};

}  // namespace

std::vector<Term> enumerate_closed(std::size_t max_size, const std::vector<Index>& idxs,
                                   const std::optional<Index>& degree) {
  ClosedGen gen(idxs);
  std::vector<Term> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& t : gen.get(n, {}))
      if (!degree || t.degree() == *degree) out.push_back(t);
  return out;
}

std::vector<Term> enumerate_open(std::size_t max_size, const std::vector<std::string>& names,
                                 const std::vector<Index>& idxs) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::unordered_set<std::string> seen;
    auto keep = [&](Term t) {
      if (seen.insert(alpha_key(t)).second) by_size[n].push_back(std::move(t));
    };
    if (n == 1) {
      for (const auto& x : names)
        for (const auto& l : idxs) keep(Term::var(x, l));
      continue;
    }
    for (const auto& x : names)
      for (const auto& l : idxs)
        for (const auto& b : by_size[n - 1])
          if (prefix_leq(b.degree(), l)) keep(Term::abs(x, l, b));
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (const auto& f : by_size[i])
        for (const auto& a : by_size[n - 1 - i])
          if (prefix_leq(f.degree(), a.degree()) && joinable(f, a)) keep(Term::app(f, a));
  }
  std::vector<Term> out;
  for (auto& v : by_size)
    for (auto& t : v) out.push_back(std::move(t));
  return out;
}

namespace {

// Longest common prefix; nullopt stands for "no bound".
std::optional<Index> meet(const std::optional<Index>& a, const Index& b) {
  if (!a) return b;
  std::vector<Index::value_type> out;
  for (std::size_t i = 0; i < a->size() && i < b.size() && (*a)[i] == b[i]; ++i) out.push_back(b[i]);
  return Index(std::move(out));
}

bool below(const Index& l, const std::optional<Index>& upper) { return !upper || prefix_leq(l, *upper); }

class RandomGen {
 public:
  RandomGen(std::mt19937_64& rng, const std::vector<std::string>& names, const std::vector<Index>& idxs)
      : rng_(rng), names_(names), idxs_(idxs) {
    for (const auto& x : names_) free_[x] = pick(idxs_);
  }

  // A term of degree ⪯ upper, or nullopt when the constraints cannot be met.
  std::optional<Term> gen(std::size_t size, const std::optional<Index>& upper,
                          const std::map<std::string, Index>& ctx) {
    if (size <= 1) return var(upper, ctx);
    std::uniform_int_distribution<int> pct(0, 99);
    int roll = pct(rng_);
    if (roll < 25 && size >= 4) {
      if (auto t = beta(size, upper, ctx)) return t;
    } else if (roll < 35 && size >= 4) {
      if (auto t = eta(size, upper, ctx)) return t;
    }
    if (size == 2 || roll % 2 == 0) return lam(size, upper, ctx);
    return app(size, upper, ctx);
  }

 private:
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng_)];
  }

  const Index& idx_of(const std::string& x, const std::map<std::string, Index>& ctx) {
    auto it = ctx.find(x);
    return it != ctx.end() ? it->second : free_.at(x);
  }

  std::optional<Term> var(const std::optional<Index>& upper, const std::map<std::string, Index>& ctx) {
    std::vector<std::string> ok;
    for (const auto& x : names_)
      if (below(idx_of(x, ctx), upper)) ok.push_back(x);
    if (ok.empty()) return std::nullopt;
    const std::string& x = pick(ok);
    return Term::var(x, idx_of(x, ctx));
  }

  std::optional<Term> lam(std::size_t size, const std::optional<Index>& upper,
                          const std::map<std::string, Index>& ctx) {
    const std::string& x = pick(names_);
    const Index& l = pick(idxs_);
    auto inner = ctx;
    inner[x] = l;
    auto body = gen(size - 1, meet(upper, l), inner);
    if (!body) return std::nullopt;
    return Term::abs(x, l, *body);
  }

  std::optional<Term> app(std::size_t size, const std::optional<Index>& upper,
                          const std::map<std::string, Index>& ctx) {
    std::size_t left = std::uniform_int_distribution<std::size_t>(1, size - 2)(rng_);
    auto a = gen(size - 1 - left, std::nullopt, ctx);
    if (!a) return std::nullopt;
    auto f = gen(left, meet(upper, a->degree()), ctx);
    if (!f) return std::nullopt;
    return Term::app(*f, *a);
  }

  std::optional<Term> beta(std::size_t size, const std::optional<Index>& upper,
                           const std::map<std::string, Index>& ctx) {
    std::size_t argn = std::uniform_int_distribution<std::size_t>(1, (size - 2) / 2)(rng_);
    auto a = gen(argn, std::nullopt, ctx);
    if (!a) return std::nullopt;
    const std::string& x = pick(names_);
    auto inner = ctx;
    inner[x] = a->degree();
    auto body = gen(size - 2 - argn, meet(upper, a->degree()), inner);
    if (!body) return std::nullopt;
    return Term::app(Term::abs(x, a->degree(), *body), *a);
  }

  std::optional<Term> eta(std::size_t size, const std::optional<Index>& upper,
                          const std::map<std::string, Index>& ctx) {
    const std::string& x = pick(names_);
    const Index& l = pick(idxs_);
    auto m = gen(size - 3, meet(upper, l), ctx);
    if (!m || m->has_free(VarKey{x, l})) return std::nullopt;
    for (const auto& k : m->free_vars())
      if (k.name == x) return std::nullopt;
    return Term::abs(x, l, Term::app(*m, Term::var(x, l)));
  }

  std::mt19937_64& rng_;
  const std::vector<std::string>& names_;
  const std::vector<Index>& idxs_;
  std::map<std::string, Index> free_;
};

}  // namespace

Term random_term(std::mt19937_64& rng, std::size_t size, const std::vector<std::string>& names,
                 const std::vector<Index>& idxs) {
  for (;;) {
    RandomGen g(rng, names, idxs);
    if (auto t = g.gen(size, std::nullopt, {})) return *t;
  }
}

}  // namespace ikc
