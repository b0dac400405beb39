#include <gtest/gtest.h>

#include <random>

#include "ikc/errors.hpp"
#include "ikc/props.hpp"
#include "subtype_oracle.hpp"
#include "support.hpp"

using namespace ikc;
using ikc::test::Ty;

namespace {

TypeRaw A(const char* n) { return TypeRaw::atom(n); }

std::vector<CanonType> random_types(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::vector<CanonType> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_type(rng, 3, {"a", "b"}, {0, 1}));
  return out;
}

}  // namespace

TEST(Types, Canonicalize) {
  CanonType u = canonicalize(TypeRaw::inter(TypeRaw::exp(1, A("a")), TypeRaw::exp(1, A("b"))));
  EXPECT_EQ(u.prefix(), Index{1});
  EXPECT_EQ(u.components().size(), 2u);
  EXPECT_EQ(u, Ty("(e 1 (^ a b))"));

  CanonType w = canonicalize(TypeRaw::inter(TypeRaw::omega({2}), TypeRaw::exp(2, A("a"))));
  EXPECT_EQ(w, Ty("(e 2 a)"));

  CanonType o = canonicalize(TypeRaw::exp(3, TypeRaw::omega({4})));
  EXPECT_EQ(o.prefix(), (Index{3, 4}));
  EXPECT_TRUE(o.is_omega());

  EXPECT_THROW(canonicalize(TypeRaw::inter(A("a"), TypeRaw::exp(1, A("b")))), DegreeError);
  EXPECT_THROW(canonicalize(TypeRaw::arrow(A("a"), TypeRaw::exp(1, A("b")))), ShapeError);
  EXPECT_THROW(Ty("(-> a (^ a b))"), ShapeError);
  EXPECT_THROW(Ty("(-> a (w []))"), ShapeError);
  EXPECT_THROW(Ty("(e x a)"), SyntaxError);
}

TEST(Types, QuotientLaws) {
  EXPECT_EQ(Ty("(^ a b)"), Ty("(^ b a)"));
  EXPECT_EQ(Ty("(^ a (^ b c))"), Ty("(^ (^ a b) c)"));
  EXPECT_EQ(Ty("(^ a a)"), Ty("a"));
  EXPECT_EQ(Ty("(^ a (w []))"), Ty("a"));
  EXPECT_EQ(Ty("(e 0 (w [1]))"), Ty("(w [0 1])"));
  EXPECT_EQ(Ty("(e 1 (^ a (-> b b)))"), Ty("(^ (e 1 a) (e 1 (-> b b)))"));
  // atoms sort before arrows
  EXPECT_EQ(to_string(Ty("(^ (-> a a) b)")), "(^ b (-> a a))");
}

TEST(Types, Degree) {
  EXPECT_EQ(degree_type(Ty("(w [5])")), Index{5});
  EXPECT_EQ(degree_type(Ty("(-> a b)")), Index());
  EXPECT_EQ(degree_type(Ty("(e 1 (e 2 a))")), (Index{1, 2}));
}

TEST(Types, ExpandAndLower) {
  EXPECT_EQ(expand_type(1, Ty("a")), Ty("(e 1 a)"));
  EXPECT_EQ(expand_type(0, Ty("(w [])")), Ty("(w [0])"));
  CanonType u = Ty("(e 4 (-> a a))");
  EXPECT_EQ(expand_type(3, expand_type(2, u)).prefix(), (Index{3, 2, 4}));
  EXPECT_EQ(expand_prefix(Index{3, 2}, u), expand_type(3, expand_type(2, u)));
  EXPECT_EQ(lower_type(Ty("(e 1 (e 2 a))"), Index{1}), Ty("(e 2 a)"));
  EXPECT_EQ(lower_type(u, Index()), u);
  EXPECT_THROW(lower_type(Ty("(w [])"), Index{1}), DegreeError);
  EXPECT_THROW(lower_type(Ty("(e 2 a)"), Index{1}), DegreeError);
}

TEST(Types, InterAndArrow) {
  EXPECT_EQ(inter(Ty("a"), Ty("b")), Ty("(^ a b)"));
  EXPECT_THROW(inter(Ty("a"), Ty("(e 1 b)")), DegreeError);
  EXPECT_EQ(arrow_type(Ty("(e 1 a)"), Ty("b")), Ty("(-> (e 1 a) b)"));
  EXPECT_THROW(arrow_type(Ty("a"), Ty("(^ a b)")), ShapeError);
}

TEST(Types, Subtype) {
  EXPECT_TRUE(subtype(Ty("(^ a b)"), Ty("a")));
  EXPECT_FALSE(subtype(Ty("a"), Ty("(^ a b)")));
  EXPECT_TRUE(subtype(Ty("(-> a c)"), Ty("(-> (^ a b) c)")));
  EXPECT_FALSE(subtype(Ty("(-> (^ a b) c)"), Ty("(-> a c)")));
  EXPECT_TRUE(subtype(Ty("(e 1 (^ a b))"), Ty("(e 1 b)")));
  EXPECT_TRUE(subtype(Ty("(-> a a)"), Ty("(w [])")));
  EXPECT_FALSE(subtype(Ty("(w [])"), Ty("a")));
  // mixed degrees are never related
  EXPECT_FALSE(subtype(Ty("(e 1 a)"), Ty("(w [])")));
  EXPECT_FALSE(subtype(Ty("a"), Ty("(e 1 a)")));
}

TEST(TypesProperty, CanonicalFormsRoundTrip) {
  for (const auto& u : random_types(11, 3000)) {
    EXPECT_EQ(canonicalize(embed(u)), u);
    EXPECT_EQ(Ty(to_string(u)), u);
    EXPECT_EQ(inter(u, u), u);
    EXPECT_EQ(inter(u, CanonType::omega(u.degree())), u);
  }
}

TEST(TypesProperty, QuotientAxiomsOnRandomTypes) {
  auto us = random_types(12, 600);
  for (std::size_t i = 0; i + 2 < us.size(); i += 3) {
    CanonType u = us[i], v = us[i + 1], w = us[i + 2];
    // bring all three to the same degree
    v = CanonType(u.prefix(), v.components());
    w = CanonType(u.prefix(), w.components());
    EXPECT_EQ(inter(u, v), inter(v, u));
    EXPECT_EQ(inter(inter(u, v), w), inter(u, inter(v, w)));
    EXPECT_EQ(expand_type(1, inter(u, v)), inter(expand_type(1, u), expand_type(1, v)));
  }
}

TEST(TypesProperty, SubtypeLaws) {
  PropertyResult r = subtype_laws(5, 2000);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures[0]);
}

TEST(TypesProperty, SubtypeCongruences) {
  auto us = random_types(13, 300);
  std::size_t related = 0;
  for (const auto& u : us)
    for (const auto& v : us) {
      if (!subtype(u, v)) continue;
      ++related;
      EXPECT_EQ(u.degree(), v.degree());
      EXPECT_TRUE(subtype(expand_type(0, u), expand_type(0, v)));
      if (!u.prefix().empty()) {
        Index k = u.prefix().take(1);
        EXPECT_TRUE(subtype(lower_type(u, k), lower_type(v, k)));
      }
      if (u.is_omega()) EXPECT_TRUE(v.is_omega());
    }
  EXPECT_GT(related, us.size());
}

TEST(SubtypeOracle, DerivesTheRules) {
  std::vector<CanonType> seeds{Ty("(-> a a)"), Ty("(-> (^ a b) a)"), Ty("(e 1 (^ a (-> a b)))"), Ty("(e 1 a)"),
                               Ty("(e 1 (-> (^ a b) b))")};
  test::SubtypeOracle o(seeds);
  EXPECT_TRUE(o.derivable(Ty("(-> a a)"), Ty("(-> (^ a b) a)")));
  EXPECT_FALSE(o.derivable(Ty("(-> (^ a b) a)"), Ty("(-> a a)")));
  EXPECT_TRUE(o.derivable(Ty("(e 1 (^ a (-> a b)))"), Ty("(e 1 a)")));
  EXPECT_TRUE(o.derivable(Ty("(e 1 (^ a (-> a b)))"), Ty("(e 1 (-> (^ a b) b))")));
  EXPECT_TRUE(o.derivable(Ty("(e 1 a)"), Ty("(w [1])")));
  EXPECT_FALSE(o.derivable(Ty("(e 1 a)"), Ty("(w [])")));
}

TEST(SubtypeOracle, AgreesOnAllTypesOfTwoLevels) {
  auto us = test::types_by_levels(2);
  ASSERT_EQ(us.size(), 197u);
  test::SubtypeOracle o(us);
  std::size_t positive = 0;
  for (const auto& u : us)
    for (const auto& v : us) {
      bool s = subtype(u, v);
      positive += s;
      ASSERT_EQ(s, o.derivable(u, v)) << to_string(u) << " ⊑ " << to_string(v);
    }
  EXPECT_GT(positive, us.size());
}
