#include <gtest/gtest.h>

#include "gz/euler/factors.hpp"
#include "gz/euler/relabel.hpp"
#include "gz/zeta/closed_forms.hpp"
#include "gz/zeta/identity.hpp"
#include "oracles.hpp"

namespace gz {
namespace {

RationalFunction v(Var x, int k = 1) { return RationalFunction::variable(x, k); }

const RationalFunction q = v(Var::q), alpha = v(Var::alpha), beta = v(Var::beta);
const RationalFunction prefactor = q.pow(4) / ((q * q - 1) * (q * q - 1));

// The 32-term sum evaluated term by term in plain rationals.
Rational gejimaOracle(int m, int n, int x1, int x2, const testing::Point& s) {
  Rational sum(0);
  for (const auto& w0 : testing::weylOrbit(s))
    for (bool sw1 : {false, true})
      for (bool sw2 : {false, true}) {
        testing::Point t = w0;
        if (sw1) std::swap(t.a1, t.b1);
        if (sw2) std::swap(t.a2, t.b2);
        Rational mono = 1;
        for (int i = 0; i < m; ++i) mono *= t.alpha / (t.q * t.q * t.q);
        for (int i = 0; i < n; ++i) mono *= t.alpha * t.beta / (t.q * t.q * t.q * t.q * t.q);
        for (int i = 0; i < x1; ++i) mono *= t.a1 / t.q;
        for (int i = 0; i < x2; ++i) mono *= t.a2 / t.q;
        const Rational d1 = 1 - t.b1 / t.a1, d2 = 1 - t.b2 / t.a2;
        sum += mono * testing::calE(t) / (testing::delta0(t) * d1 * d2);
      }
  const Rational q2m1 = s.q * s.q - 1;
  return s.q * s.q * s.q * s.q / (q2m1 * q2m1) * sum;
}

TEST(Gejima, Normalization) { EXPECT_EQ(gejimaValue(0, 0, 0, 0), RationalFunction(1)); }

TEST(Gejima, AgreesWithTermwiseSum) {
  for (const auto& [m, n, x1, x2] : {std::array{1, 0, 0, 0}, std::array{0, 1, 1, 0}, std::array{1, 1, 0, 2}}) {
    const RationalFunction g = gejimaValue(m, n, x1, x2);
    for (int k = 0; k < 5; ++k) {
      const auto s = testing::samplePoint(k);
      EXPECT_EQ(evaluate(g, s.asMap()), gejimaOracle(m, n, x1, x2, s));
    }
  }
}

TEST(Gejima, LaurentAndSymmetric) {
  for (int m = 0; m <= 1; ++m)
    for (int x2 = 0; x2 <= 1; ++x2) {
      const RationalFunction g = gejimaValue(m, 1, 0, x2);
      EXPECT_TRUE((g * (q * q - 1) * (q * q - 1)).isLaurentPolynomial());
      for (const auto& t : weylTriples()) EXPECT_EQ(applyWeyl(t, g), g) << t.label();
    }
}

TEST(Pstab, BaseAndOrbitSum) {
  EXPECT_EQ(pstabValue(0, 0, 0, 0), prefactor * factor("E"));
  const RationalFunction dd = factor("Delta0") * factor("Delta1") * factor("Delta2");
  EXPECT_EQ(weylSum(weylTriples(), pstabValue(0, 1, 1, 0) / dd), gejimaValue(0, 1, 1, 0));
}

TEST(Pstab, ScalingLaws) {
  const RationalFunction base = pstabValue(1, 1, 1, 1);
  EXPECT_EQ(pstabValue(2, 1, 1, 1), alpha / q.pow(3) * base);
  EXPECT_EQ(pstabValue(1, 2, 1, 1), alpha * beta / q.pow(5) * base);
  EXPECT_EQ(pstabValue(1, 1, 2, 1), v(Var::a1) / q * base);
  EXPECT_EQ(pstabValue(1, 1, 1, 2), v(Var::a2) / q * base);
}

TEST(Variant, DisplayedCases) {
  const RationalFunction e = factor("E"), a1 = v(Var::a1), a2 = v(Var::a2), d = (q * q - 1) * (q * q - 1);
  EXPECT_EQ(variantValue(3, 1, 1, 1, 1), alpha * alpha * beta * a1 * a2 * e / (q.pow(6) * d));
  EXPECT_EQ(variantValue(2, 1, 1, 0, 0), alpha * alpha * beta * e / (q.pow(4) * d));
  EXPECT_EQ(variantValue(4, 1, 1, 0, 1), alpha * alpha * beta * a2 * e / (q.pow(5) * d));
  EXPECT_THROW(variantValue(3, 0, 1, 1, 1), std::domain_error);
}

TEST(SpecialCase, Siegel) {
  const RationalFunction e = factor("E");
  const RationalFunction gamma = paramExpr(Param::gamma);
  const RationalFunction swapped = applyWeyl(weylFromLabel("ag"), e);
  EXPECT_EQ(specialCase("siegel").value,
            prefactor * alpha / q.pow(3) * (e / (1 - gamma / beta) + swapped / (1 - beta / gamma)));
}

TEST(SpecialCase, TameNorm) {
  const RationalFunction b1b2 = v(Var::b1) * v(Var::b2);
  const RationalFunction summand = factor("E") / factor("Delta0") * (1 - alpha * b1b2 / q.pow(3));
  EXPECT_EQ(specialCase("tameNorm").value, prefactor * weylSum(weylGroupGSp4(), summand));
}

TEST(SpecialCase, DepletedFromKlingen) {
  EXPECT_EQ(specialCase("depleted").value, specialCase("klingenEigen", 0, 0, 0).value * factor("BKl") / factor("EKl"));
}

TEST(SpecialCase, KlingenScaling) {
  const RationalFunction base = specialCase("klingenEigen", 0, 0, 0).value;
  EXPECT_EQ(specialCase("klingenEigen", 1, 2, 1).value,
            base * alpha * beta / q.pow(5) * (v(Var::a1) / q).pow(2) * v(Var::a2) / q);
  EXPECT_THROW(specialCase("nonsense"), std::invalid_argument);
}

TEST(Verify, RegistryRecordsByMethod) {
  const FormulaContext ctx;
  for (const auto& r : defaultRegistry()) {
    if (r.suite != "symbolic") continue;
    const auto rep = verifyIdentity(r, ctx);
    EXPECT_EQ(rep.status, Status::verified) << r.id << ": " << rep.witness;
  }
}

TEST(Verify, FalseIdentityFails) {
  const FormulaContext ctx;
  const IdentityRecord r{"bogus", "symbolic", "weyl0(1/Delta0)", "2", Method::exactEquality, "", false};
  EXPECT_EQ(verifyIdentity(r, ctx).status, Status::failed);
}

// Substituting the reported relation must kill the difference.
TEST(Verify, ConditionalEngineSound) {
  const FormulaContext ctx;
  int conditional = 0;
  for (const auto& r : defaultRegistry()) {
    if (r.method != Method::conditionalEquality) continue;
    const RationalFunction lhs = ctx.evaluate(r.lhs), rhs = ctx.evaluate(r.rhs);
    if (lhs == rhs) continue;
    const auto rel = findMonomialRelation(lhs, rhs);
    ASSERT_TRUE(rel.has_value()) << r.id;
    const Substitution impose{{rel->solvedFor, rel->image}};
    EXPECT_EQ(substitute(lhs, impose), substitute(rhs, impose)) << r.id;
    EXPECT_TRUE(r.expectConditional) << r.id;
    ++conditional;
  }
  EXPECT_GT(conditional, 0);
}

TEST(Verify, JsonRoundTrip) {
  const auto& r = defaultRegistry().front();
  const IdentityRecord back = identityFromJson(toJson(r));
  EXPECT_EQ(back.id, r.id);
  EXPECT_EQ(back.lhs, r.lhs);
  EXPECT_EQ(back.method, r.method);
}

}  // namespace
}  // namespace gz
