#include <gtest/gtest.h>

#include "ikc/typecheck.hpp"
#include "support.hpp"

using namespace ikc;
using ikc::test::E;
using ikc::test::T;
using ikc::test::Ty;

namespace {

TypecheckResult tc(const std::string& m, const char* g, const std::string& u, std::size_t fuel = 1000) {
  return bounded_typecheck(T(m), E(g), Ty(u), fuel);
}

}  // namespace

TEST(Typecheck, EtaCounterexample) {
  TypecheckResult id = tc("(lam y [] y[])", "()", "(-> a a)", 50);
  ASSERT_EQ(id.verdict, Verdict::Found);
  EXPECT_TRUE(same_judgment(check_derivation(*id.derivation), {T("(lam y [] y[])"), E("()"), Ty("(-> a a)")}));
  TypecheckResult eta = tc("(lam y [] (lam x [] (app y[] x[])))", "()", "(-> a a)", 50);
  EXPECT_EQ(eta.verdict, Verdict::RefutedByGeneration);
  EXPECT_FALSE(eta.derivation.has_value());
  EXPECT_FALSE(eta.reason.empty());
}

TEST(Typecheck, ExampleThree) {
  std::string m = test::slurp(test::corpus_dir() / "example3.trm");
  std::string u = test::slurp(test::corpus_dir() / "example3.typ");
  TypecheckResult r = tc(m, "()", u, 100000);
  ASSERT_EQ(r.verdict, Verdict::Found);
  EXPECT_LE(r.fuel_used, 100000u);
  std::string printed = test::slurp(test::corpus_dir() / "example3-printed.trm");
  EXPECT_EQ(tc(printed, "()", u, 100000).verdict, Verdict::RefutedByGeneration);
}

TEST(Typecheck, StructuralRefutations) {
  // dom(Γ) ≠ fv(M)
  EXPECT_EQ(tc("x[]", "()", "a").verdict, Verdict::RefutedByGeneration);
  // d(U) ≠ d(M)
  EXPECT_EQ(tc("(lam y [] y[])", "()", "(e 1 (-> a a))").verdict, Verdict::RefutedByGeneration);
  // no type of x fits
  EXPECT_EQ(tc("x[]", "((x [] a))", "b").verdict, Verdict::RefutedByGeneration);
  EXPECT_EQ(tc("(app x[] y[])", "((x [] (-> a b)) (y [] b))", "b").verdict, Verdict::RefutedByGeneration);
  // λ-head whose argument has the wrong degree is never a redex
  EXPECT_EQ(tc("(app (lam x [1] y[]) z[])", "((y [] a) (z [] a))", "a").verdict, Verdict::RefutedByGeneration);
}

TEST(Typecheck, FoundThroughSubtyping) {
  EXPECT_EQ(tc("x[]", "((x [] (^ a b)))", "a").verdict, Verdict::Found);
  EXPECT_EQ(tc("(lam x [] x[])", "()", "(-> (^ a b) a)").verdict, Verdict::Found);
  EXPECT_EQ(tc("(lam x [] (lam y [] x[]))", "()", "(-> a (-> b a))").verdict, Verdict::Found);
  EXPECT_EQ(tc("(lam x [1] x[1])", "()", "(e 1 (-> a a))").verdict, Verdict::Found);
  EXPECT_EQ(tc("(app (lam x [] (app x[] x[])) (lam x [] (app x[] x[])))", "()", "(w [])").verdict, Verdict::Found);
}

TEST(Typecheck, DivergentHeadIsUnknownOrRefuted) {
  TypecheckResult r = tc("(app (lam x [] (app x[] x[])) (lam x [] (app x[] x[])))", "()", "a", 200);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
}

TEST(Typecheck, FuelIsRespected) {
  std::string m = test::slurp(test::corpus_dir() / "example3.trm");
  std::string u = test::slurp(test::corpus_dir() / "example3.typ");
  TypecheckResult r = tc(m, "()", u, 3);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_LE(r.fuel_used, 3u);
}

TEST(TypecheckProperty, CorpusJudgmentsAreFound) {
  for (const auto& e : test::load_corpus()) {
    const Judgment& j = e.cj.judgment;
    TypecheckResult r = bounded_typecheck(j.subject, j.env, j.type, 100000);
    EXPECT_NE(r.verdict, Verdict::RefutedByGeneration) << e.name << ": " << r.reason;
    if (r.verdict == Verdict::Found) EXPECT_TRUE(same_judgment(check_derivation(*r.derivation), j)) << e.name;
  }
}
