#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "ikc/enumerate.hpp"
#include "support.hpp"

using namespace ikc;

TEST(Enumerate, ClosedSmallSizes) {
  auto ts = enumerate_closed(3, {Index()});
  // λx.x, λx.λy.x, λx.λy.y
  ASSERT_EQ(ts.size(), 3u);
  // size 4 adds λx.λy.λz.v for v ∈ {x, y, z} and λx.x x
  EXPECT_EQ(enumerate_closed(4, {Index()}).size(), 3u + 4u);
  for (const auto& t : ts) {
    EXPECT_TRUE(t.free_vars().empty());
    EXPECT_LE(t.size(), 3u);
  }
}

TEST(Enumerate, ClosedAreDistinctAlphaClasses) {
  auto ts = enumerate_closed(7, {Index(), Index{1}});
  std::unordered_set<std::string> keys;
  for (const auto& t : ts) {
    EXPECT_TRUE(keys.insert(alpha_key(t)).second) << to_string(t);
    EXPECT_TRUE(t.free_vars().empty());
  }
  auto deg1 = enumerate_closed(7, {Index(), Index{1}}, Index{1});
  for (const auto& t : deg1) EXPECT_EQ(t.degree(), Index{1});
  EXPECT_FALSE(deg1.empty());
}

TEST(Enumerate, OpenTermsUseOnlyGivenVocabulary) {
  auto ts = enumerate_open(4, {"x", "y"}, {Index(), Index{1}});
  std::unordered_set<std::string> keys;
  for (const auto& t : ts) {
    EXPECT_TRUE(keys.insert(alpha_key(t)).second);
    std::set<std::string> names;
    collect_names(t, names);
    for (const auto& n : names) EXPECT_TRUE(n == "x" || n == "y") << to_string(t);
  }
  // the four variables x[], x[1], y[], y[1] are among them
  EXPECT_EQ(std::count_if(ts.begin(), ts.end(), [](const Term& t) { return t.is_var(); }), 4);
}

TEST(Enumerate, RandomTermsAreReproducible) {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 200; ++i) {
    Term s = random_term(a, 12, {"x", "y", "z"}, {Index(), Index{1}});
    Term t = random_term(b, 12, {"x", "y", "z"}, {Index(), Index{1}});
    EXPECT_EQ(to_string(s), to_string(t));
    EXPECT_EQ(to_string(test::T(to_string(s))), to_string(s));
  }
}
