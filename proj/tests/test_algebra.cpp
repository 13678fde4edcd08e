#include <gtest/gtest.h>

#include "support/print.hpp"

using namespace zbeta;

namespace {

RationalFn E(const char* s) { return parse_expr(s); }
LaurentPoly P(const char* s) {
  RationalFn f = parse_expr(s);
  EXPECT_TRUE(f.is_polynomial()) << s;
  return f.num();
}

}  // namespace

TEST(LaurentPoly, AddMergesTerms) {
  EXPECT_EQ(P("T - 1") + P("T^-1 - 1"), P("T + T^-1 - 2"));
}

TEST(LaurentPoly, MulCancelsCrossTerms) {
  EXPECT_EQ(P("T - 1") * P("T^-1 - 1"), P("2 - T - T^-1"));
}

TEST(LaurentPoly, AdditiveInverse) {
  LaurentPoly p = P("3*T1^2*x - T2^-1 + 7");
  EXPECT_TRUE((p + (-p)).is_zero());
}

TEST(LaurentPoly, NoZeroTermsStored) {
  LaurentPoly p = P("T1 + T2 - T1");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].mono, Monomial::of(VarId::strand(2)));
}

TEST(LaurentPoly, ExactDivision) {
  auto q = exact_divide(P("T^3 - 1"), P("T - 1"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("T^2 + T + 1"));
  EXPECT_FALSE(exact_divide(P("T^3 - 1"), P("T + 1")));
  EXPECT_THROW((void)exact_divide(P("T"), LaurentPoly()), DivisionByZero);
}

TEST(LaurentPoly, GcdMultivariate) {
  LaurentPoly g = P("T1*T2 - 1");
  LaurentPoly a = g * P("T1 + 3*x");
  LaurentPoly b = g * P("T2^2 - x") * P("T1^-4");
  EXPECT_EQ(gcd(a, b), g);
  EXPECT_TRUE(gcd(P("T1 + 1"), P("T1 - 1")).is_one());
  EXPECT_EQ(gcd(P("4*T - 4"), P("6*T^2 - 6")), P("2*T - 2"));
}

TEST(RationalFn, DivisionKeepsIrreducibleFraction) {
  RationalFn f = E("T - 1") / E("T");
  EXPECT_EQ(f, E("(T - 1)/T"));
  EXPECT_EQ(f, E("1 - T^-1"));
  EXPECT_TRUE(f.is_polynomial());  // a monomial denominator is absorbed
}

TEST(RationalFn, AddFractions) {
  RationalFn a = E("1/(T - 1)");
  RationalFn b = E("1/(T + 1)");
  EXPECT_EQ(a + b, E("2*T/(T^2 - 1)"));
  EXPECT_EQ(a - b, E("2/(T^2 - 1)"));
}

TEST(RationalFn, CrossCancellation) {
  EXPECT_TRUE((E("(T - 1)/T") * E("T/(T - 1)")).is_one());
}

TEST(RationalFn, DivisionByZeroThrows) {
  EXPECT_THROW((void)(E("T") / RationalFn()), DivisionByZero);
  EXPECT_THROW((void)RationalFn::fraction(LaurentPoly(1), LaurentPoly()), DivisionByZero);
}

TEST(RationalFn, SemanticEquality) {
  EXPECT_EQ(E("(T^2 - 1)/(T - 1)"), E("T + 1"));
  EXPECT_EQ(RationalFn(), RationalFn::fraction(LaurentPoly(), P("T - 1")));
  EXPECT_NE(E("T"), E("T^-1"));
}

TEST(RationalFn, Normalization) {
  RationalFn f = RationalFn::fraction(P("2*T^3 - 2*T^2"), P("-4*T^5 - 4*T^4"));
  EXPECT_EQ(f.den(), P("2*T + 2"));
  EXPECT_EQ(f.num(), P("T^-2 - T^-1"));
  EXPECT_EQ(f, E("(T^-1 - T^-2)/(-2*T - 2)"));
  EXPECT_TRUE(f.den().leading().coeff > 0);
  EXPECT_TRUE(f.den().monomial_content().is_one());
}

TEST(Substitute, RenameSingleVariable) {
  VarId x = VarId::symbol("Tx"), y = VarId::symbol("Ty"), z = VarId::symbol("Tz");
  VarMap m{{x, z}, {y, z}};
  EXPECT_EQ(substitute(E("Tx - 1"), m), E("Tz - 1"));
}

TEST(Substitute, CollidingExponentsCollapse) {
  VarMap m{{VarId::strand(1), VarId::strand(3)}, {VarId::strand(2), VarId::strand(3)}};
  EXPECT_TRUE(substitute(E("T1*T2^-1"), m).is_one());
  EXPECT_EQ(substitute(E("T1 + T2"), m), E("2*T3"));
}

TEST(Substitute, ToOneAndRenormalize) {
  VarMap m{{VarId::strand(1), std::nullopt}};
  EXPECT_TRUE(substitute(E("T1 - 1"), m).is_zero());
  EXPECT_EQ(substitute(E("T2/(T1 + T2)"), m), E("T2/(1 + T2)"));
  EXPECT_THROW((void)substitute(E("1/(T1 - 1)"), m), DivisionByZero);
}

TEST(Expr, ParseLaurent) {
  RationalFn f = E("T1^-1 - 1");
  EXPECT_EQ(f, RationalFn::var(VarId::strand(1), -1) - RationalFn(1));
}

TEST(Expr, ParseProductOfParens) {
  RationalFn f = E("(T2^-1)*(T3-1)");
  EXPECT_EQ(f, E("T2^-1*T3 - T2^-1"));
}

TEST(Expr, SyntaxErrors) {
  EXPECT_THROW((void)E("1/(1"), SyntaxError);
  EXPECT_THROW((void)E(""), SyntaxError);
  EXPECT_THROW((void)E("T1^"), SyntaxError);
  EXPECT_THROW((void)E("2 3"), SyntaxError);
  EXPECT_THROW((void)E("T1 +"), SyntaxError);
  EXPECT_THROW((void)E("x $ y"), SyntaxError);
  try {
    (void)E("1/(1");
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position, 4u);
  }
}

TEST(Expr, WhitespaceInsignificant) {
  EXPECT_EQ(E("  T1 ^ -2*3 -\t4 "), E("3*T1^-2-4"));
}

TEST(Expr, SymbolsAndStrands) {
  RationalFn f = E("T*abc + T12");
  auto vars = f.num().variables();
  ASSERT_EQ(vars.size(), 3u);
  EXPECT_TRUE(vars[0].is_strand());
  EXPECT_EQ(vars[0].index(), 12u);
  EXPECT_EQ(vars[1].name(), "T");
  EXPECT_EQ(vars[2].name(), "abc");
}

TEST(Expr, Render) {
  EXPECT_EQ(render_expr(RationalFn()), "0");
  EXPECT_EQ(render_expr(E("T1 - 1")), "T1 - 1");
  EXPECT_EQ(render_expr(E("-1 + T1")), "T1 - 1");
  EXPECT_EQ(render_expr(E("-T1^3 + 4*T1^2 - 8*T1 + 11 - 8*T1^-1 + 4*T1^-2 - T1^-3")),
            "-T1^-3 + 4*T1^-2 - 8*T1^-1 + 11 - 8*T1 + 4*T1^2 - T1^3");
  EXPECT_EQ(render_expr(E("1/(T1 - 1)")), "1/(T1 - 1)");
  EXPECT_EQ(render_expr(E("-2*T1*T2/(T1 + 1)")), "-2*T1*T2/(T1 + 1)");
}

TEST(Expr, RenderParsesBack) {
  for (const char* s : {"0", "T1 - 1", "(T1*x - 3)/(T2^2 + 5*y)", "-7", "T1^-1*T3 + T2", "1/(2*T1 - 2)"}) {
    RationalFn f = E(s);
    EXPECT_EQ(E(render_expr(f).c_str()), f) << s << " -> " << render_expr(f);
  }
}
