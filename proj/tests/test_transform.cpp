#include <gtest/gtest.h>

#include "ikc/errors.hpp"
#include "ikc/props.hpp"
#include "ikc/transform.hpp"
#include "support.hpp"

using namespace ikc;
using ikc::test::D;
using ikc::test::E;
using ikc::test::T;
using ikc::test::Ty;

namespace {

Judgment J(const char* term, const char* env, const char* type) { return {T(term), E(env), Ty(type)}; }

::testing::AssertionResult concludes(const Derivation& d, const Judgment& want) {
  Judgment got = check_derivation(d);
  if (same_judgment(got, want)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << pretty(got) << ", want " << pretty(want);
}

}  // namespace

TEST(InvertAbs, Components) {
  AbsShape s = invert_abs(J("(lam y [] y[])", "()", "(-> a a)"));
  auto* cs = std::get_if<std::vector<InvertedComponent>>(&s);
  ASSERT_NE(cs, nullptr);
  ASSERT_EQ(cs->size(), 1u);
  EXPECT_EQ((*cs)[0].arg, Ty("a"));
  EXPECT_EQ(CanonType::of((*cs)[0].res), Ty("a"));
  EXPECT_TRUE(same_judgment((*cs)[0].premise, J("y[]", "((y [] a))", "a")));

  AbsShape two = invert_abs(J("(lam y [] y[])", "()", "(^ (-> a a) (-> b b))"));
  EXPECT_EQ(std::get<std::vector<InvertedComponent>>(two).size(), 2u);
}

TEST(InvertAbs, OmegaAndRefutation) {
  AbsShape s = invert_abs(J("(lam x [1] y[1])", "((y [1] (w [1])))", "(w [1])"));
  ASSERT_TRUE(std::holds_alternative<OmegaShape>(s));
  EXPECT_EQ(std::get<OmegaShape>(s).degree, Index{1});
  EXPECT_THROW(invert_abs(J("(lam x [] (app y[] x[]))", "((y [] a))", "a")), ShapeRefutation);
  // the argument type must have the binder's degree
  EXPECT_THROW(invert_abs(J("(lam x [] x[])", "()", "(-> (e 1 a) a)")), ShapeRefutation);
}

TEST(InvertAbs, DerivationLevel) {
  Derivation d = D("(exp 1 (interI (arrI x [] a (ax x a)) (arrI x [] b (ax x b))))");
  AbsInversion inv = invert_abs_derivation(d);
  EXPECT_EQ(inv.prefix, Index{1});
  ASSERT_EQ(inv.components.size(), 2u);
  EXPECT_TRUE(concludes(inv.components[0].premise, J("x[1]", "((x [1] (e 1 a)))", "(e 1 a)")));
}

TEST(SubstDerivation, Examples) {
  Derivation id = D("(arrI z [] a (ax z a))");
  EXPECT_TRUE(concludes(subst_derivation(D("(ax x (-> a a))"), {"x", {}}, id), J("(lam z [] z[])", "()", "(-> a a)")));

  Derivation dm = D("(arrE (ax y (-> (-> a a) b)) (ax x (-> a a)))");
  EXPECT_TRUE(concludes(subst_derivation(dm, {"x", {}}, id),
                        J("(app y[] (lam z [] z[]))", "((y [] (-> (-> a a) b)))", "b")));

  Derivation om = D("(w (app y[] x[]))");
  Derivation dn = D("(sub (arrI z [] a (ax z a)) () (w []))");
  EXPECT_TRUE(concludes(subst_derivation(om, {"x", {}}, dn), J("(app y[] (lam z [] z[]))", "((y [] (w [])))", "(w [])")));

  // N's type must be x's type
  EXPECT_THROW(subst_derivation(D("(ax x (-> b b))"), {"x", {}}, id), PreconditionError);
  EXPECT_THROW(subst_derivation(D("(ax x a)"), {"q", {}}, id), PreconditionError);
}

TEST(SubjectReduce, Examples) {
  CheckedJudgment redex = certify(D("(arrE (arrI y [] (-> a a) (ax y (-> a a))) (arrI z [] a (ax z a)))"));
  ASSERT_TRUE(alpha_eq(redex.judgment.subject, T("(app (lam y [] y[]) (lam z [] z[]))")));
  EXPECT_TRUE(concludes(subject_reduce(redex, T("(lam z [] z[])"), Relation::Beta), J("(lam z [] z[])", "()", "(-> a a)")));

  CheckedJudgment eta = certify(D(test::slurp(test::corpus_dir() / "eta-redex.drv")));
  ASSERT_TRUE(alpha_eq(eta.judgment.subject, T("(lam x [] (app (lam y [] y[]) x[]))")));
  EXPECT_TRUE(concludes(subject_reduce(eta, T("(lam y [] y[])"), Relation::BetaEta), J("(lam y [] y[])", "()", "(-> a a)")));
  EXPECT_TRUE(concludes(subject_reduce(eta, T("(lam y [] y[])"), Relation::Eta), J("(lam y [] y[])", "()", "(-> a a)")));

  EXPECT_TRUE(subject_reduce(redex, redex.judgment.subject, Relation::Beta).same(redex.derivation));
  EXPECT_THROW(subject_reduce(redex, T("(lam z [] (app z[] z[]))"), Relation::Beta), NotAReductError);
}

TEST(SubjectReduce, RestrictsTheEnvironment) {
  CheckedJudgment d = certify(D(test::slurp(test::corpus_dir() / "beta-drop.drv")));
  ASSERT_TRUE(same_judgment(d.judgment, J("(app (lam x [] y[]) w[])", "((w [] (w [])) (y [] a))", "a")));
  EXPECT_TRUE(concludes(subject_reduce(d, T("y[]"), Relation::Beta), J("y[]", "((y [] a))", "a")));
}

TEST(SubjectExpand, Examples) {
  CheckedJudgment id = certify(D("(arrI z [] a (ax z a))"));
  EXPECT_TRUE(concludes(subject_expand_beta(id, T("(app (lam y [] y[]) (lam z [] z[]))")),
                        J("(app (lam y [] y[]) (lam z [] z[]))", "()", "(-> a a)")));

  CheckedJudgment y = certify(D("(ax y a)"));
  EXPECT_TRUE(concludes(subject_expand_beta(y, T("(app (lam x [] y[]) w[])")),
                        J("(app (lam x [] y[]) w[])", "((w [] (w [])) (y [] a))", "a")));
  // lost variable at a lifted index
  EXPECT_TRUE(concludes(subject_expand_beta(y, T("(app (lam x [1] y[]) w[1])")),
                        J("(app (lam x [1] y[]) w[1])", "((w [1] (w [1])) (y [] a))", "a")));

  EXPECT_TRUE(subject_expand_beta(id, T("(lam z [] z[])")).same(id.derivation));
  EXPECT_THROW(subject_expand_beta(id, T("(lam z [] (app z[] z[]))")), NotAnExpansionError);
}

TEST(SubjectExpand, DuplicatingRedex) {
  // (λf.λy.f (f y)) (λz.z) reduces to λy.(λz.z)((λz.z) y); the argument is
  // needed at two types once expanded
  CheckedJudgment n = certify(D("(arrI y [] a (ax y a))"));
  Term m = T("(app (lam f [] (lam y [] (app f[] (app f[] y[])))) (lam z [] z[]))");
  Derivation d = subject_expand_beta(n, m);
  EXPECT_TRUE(concludes(d, J("(app (lam f [] (lam y [] (app f[] (app f[] y[])))) (lam z [] z[]))", "()", "(-> a a)")));
}

TEST(LowerDerivation, Examples) {
  Derivation d = D("(exp 1 (ax x a))");
  EXPECT_TRUE(concludes(lower_derivation(d, Index{1}), J("x[]", "((x [] a))", "a")));
  EXPECT_TRUE(lower_derivation(d, Index()).same(d));
  EXPECT_THROW(lower_derivation(d, Index{2}), DegreeError);
  EXPECT_THROW(lower_derivation(D("(ax x a)"), Index{1}), DegreeError);
}

TEST(TransformProperty, ExpThenLowerOnCorpus) {
  for (const auto& e : test::load_corpus())
    for (Index::value_type j : {0u, 1u, 3u}) {
      Derivation up = Derivation::exp(j, e.cj.derivation);
      EXPECT_TRUE(concludes(lower_derivation(up, Index{j}), e.cj.judgment)) << e.name;
      if (!e.cj.judgment.type.degree().empty()) {
        Index k = e.cj.judgment.type.degree().take(1);
        Derivation low = lower_derivation(e.cj.derivation, k);
        const Judgment& j0 = e.cj.judgment;
        EXPECT_TRUE(concludes(low, {lower_seq(j0.subject, k), env_lower(j0.env, k), lower_type(j0.type, k)})) << e.name;
      }
    }
}

TEST(TransformProperty, EtaReductionKeepsTheDomain) {
  for (const auto& e : test::load_corpus())
    for (const auto& s : steps(e.cj.judgment.subject, Relation::Eta)) {
      Judgment got = check_derivation(subject_reduce_step(e.cj.derivation, s.path, s.kind));
      EXPECT_EQ(got.env.domain(), e.cj.judgment.env.domain()) << e.name;
    }
}

TEST(TransformProperty, EtaInvert) {
  // from y x : ⟨y : a → b, x : a ⊢ b⟩ recover y : ⟨y : a → b ⊢ a → b⟩
  Derivation d = D("(arrE (ax y (-> a b)) (ax x a))");
  auto out = eta_invert(d, {"x", {}});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(concludes(out[0].second, J("y[]", "((y [] (-> a b)))", "(-> a b)")));
}

TEST(TransformProperty, RenameFree) {
  Derivation d = D("(arrI y [] a (arrE (ax x (-> a b)) (ax y a)))");
  Derivation r = rename_free_in_derivation(d, {"x", {}}, "y");
  EXPECT_TRUE(concludes(r, J("(lam z [] (app y[] z[]))", "((y [] (-> a b)))", "(-> a b)")));
}

TEST(TransformProperty, SplitSubstitution) {
  CheckedJudgment d = certify(D("(arrE (ax y (-> (-> a a) b)) (arrI z [] a (ax z a)))"));
  SplitSubstitution s = split_substitution(d.derivation, T("(app y[] x[])"), {"x", {}}, T("(lam z [] z[])"));
  EXPECT_EQ(s.v, Ty("(-> a a)"));
  EXPECT_TRUE(concludes(s.left, J("(app y[] x[])", "((x [] (-> a a)) (y [] (-> (-> a a) b)))", "b")));
  EXPECT_TRUE(concludes(s.right, J("(lam z [] z[])", "()", "(-> a a)")));
}

TEST(TransformProperty, TransportAndRoundTripOnCorpus) {
  auto corpus = test::corpus_judgments();
  PropertyResult sr = subject_reduction_transport(corpus, 3);
  EXPECT_TRUE(sr.ok()) << (sr.failures.empty() ? "" : sr.failures[0]);
  EXPECT_GT(sr.cases, 50u);
  PropertyResult ex = subject_expansion_roundtrip(corpus);
  EXPECT_TRUE(ex.ok()) << (ex.failures.empty() ? "" : ex.failures[0]);
  EXPECT_GT(ex.cases, 500u);
}
