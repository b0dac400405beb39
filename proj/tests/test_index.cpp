#include <gtest/gtest.h>

#include "ikc/index.hpp"

using ikc::Index;

namespace {

std::vector<Index> small_indexes() {
  std::vector<Index> out{Index()};
  for (std::size_t k = 0; k < out.size(); ++k)
    if (out[k].size() < 3)
      for (Index::value_type i : {0u, 1u, 2u}) out.push_back(out[k].cons(i));
  return out;
}

}  // namespace

TEST(Index, Concat) {
  EXPECT_EQ(concat(Index{1}, Index{2, 3}), (Index{1, 2, 3}));
  EXPECT_EQ(concat(Index(), Index{5}), Index{5});
  EXPECT_EQ(concat(Index{3, 2}, Index()), (Index{3, 2}));
}

TEST(Index, PrefixLeq) {
  EXPECT_TRUE(prefix_leq(Index{3}, Index{3, 2}));
  EXPECT_TRUE(prefix_leq(Index(), Index{7, 7}));
  EXPECT_FALSE(prefix_leq(Index{1, 2}, Index{2, 1}));
  EXPECT_FALSE(prefix_leq(Index{3, 2}, Index{3}));
}

TEST(Index, ConsDropTake) {
  Index l{4, 5, 6};
  EXPECT_EQ(l.cons(1), (Index{1, 4, 5, 6}));
  EXPECT_EQ(l.drop(1), (Index{5, 6}));
  EXPECT_EQ(l.drop(3), Index());
  EXPECT_EQ(l.take(2), (Index{4, 5}));
  EXPECT_EQ(to_string(l), "[4 5 6]");
  EXPECT_EQ(to_string(Index()), "[]");
}

TEST(Index, PrefixOrderIsAPartialOrder) {
  auto xs = small_indexes();
  ASSERT_EQ(xs.size(), 40u);
  for (const auto& a : xs) {
    EXPECT_TRUE(prefix_leq(a, a));
    for (const auto& b : xs) {
      if (prefix_leq(a, b) && prefix_leq(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : xs)
        if (prefix_leq(a, b) && prefix_leq(b, c)) EXPECT_TRUE(prefix_leq(a, c));
    }
  }
}

TEST(Index, ConcatMonoid) {
  auto xs = small_indexes();
  for (const auto& a : xs) {
    EXPECT_EQ(concat(Index(), a), a);
    EXPECT_EQ(concat(a, Index()), a);
    for (const auto& b : xs) {
      EXPECT_TRUE(prefix_leq(a, concat(a, b)));
      for (const auto& c : xs) EXPECT_EQ(concat(concat(a, b), c), concat(a, concat(b, c)));
    }
  }
}
