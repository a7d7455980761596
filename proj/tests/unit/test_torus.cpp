#include <gtest/gtest.h>

#include "gz/euler/factors.hpp"
#include "gz/params/context.hpp"
#include "gz/torus/sequence.hpp"
#include "gz/zeta/closed_forms.hpp"

namespace gz {
namespace {

RationalFunction v(Var x, int k = 1) { return RationalFunction::variable(x, k); }

const RationalFunction q = v(Var::q), alpha = v(Var::alpha), beta = v(Var::beta), a1 = v(Var::a1),
                       b1 = v(Var::b1), a2 = v(Var::a2), b2 = v(Var::b2);

TorusSequence seq(Gl2Kind kind, int n = 0, int factor = 1) { return gl2Sequence({kind, n, factor}); }

TEST(Gl2Sequence, SphericalClosedForm) {
  const TorusSequence s = seq(Gl2Kind::sph);
  EXPECT_EQ(s.value(0), RationalFunction(1));
  EXPECT_EQ(s.value(-1), RationalFunction(0));
  for (int k = 0; k <= 5; ++k)
    EXPECT_EQ(s.value(k), (a1.pow(k + 1) - b1.pow(k + 1)) / (q.pow(k) * (a1 - b1))) << "k=" << k;
}

// W_a = (1 - s1/a) W^sph with (s1 W)(k) = (a b / q) W(k - 1).
TEST(Gl2Sequence, StabilizedFromSpherical) {
  const TorusSequence s = seq(Gl2Kind::sph), st = seq(Gl2Kind::aStab);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(s.value(k) - b1 / q * s.value(k - 1), st.value(k)) << "k=" << k;
}

TEST(Gl2Sequence, Depleted) {
  const TorusSequence d = seq(Gl2Kind::depleted);
  EXPECT_EQ(d.value(0), RationalFunction(1));
  EXPECT_EQ(d.value(1), RationalFunction(0));
  EXPECT_EQ(d.value(-1), RationalFunction(0));
}

TEST(Gl2Sequence, AlphaPrimeSupport) {
  const TorusSequence r = seq(Gl2Kind::rhoAlphaPrime, 2);
  EXPECT_EQ(r.value(-2), (alpha / q).pow(-2));
  EXPECT_EQ(r.value(-3), RationalFunction(0));
  EXPECT_EQ(r.value(4), (alpha / q).pow(4));
}

TEST(Shift, TShiftOnStabilized) {
  const TorusSequence s = shiftSequence(seq(Gl2Kind::aStab), ShiftKind::t, 2);
  EXPECT_EQ(s.supportStart(), -2);
  for (int k = -2; k <= 3; ++k) EXPECT_EQ(s.value(k), (a1 / q).pow(2) * (a1 / q).pow(k));
  const TorusSequence base = seq(Gl2Kind::sph);
  const TorusSequence same = shiftSequence(base, ShiftKind::t, 0);
  for (int k = -1; k <= 4; ++k) EXPECT_EQ(same.value(k), base.value(k));
}

TEST(Shift, SThenTMultipliesByCentral) {
  const RationalFunction central = a1 * b1 / q;
  const TorusSequence base = seq(Gl2Kind::sph);
  const TorusSequence both = shiftSequence(shiftSequence(base, ShiftKind::sWithCentral, 3, central), ShiftKind::t, 3);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(both.value(k), central.pow(3) * base.value(k));
}

TEST(Sequence, ProductIsPointwise) {
  const TorusSequence a = seq(Gl2Kind::sph), b = shiftSequence(seq(Gl2Kind::aStab, 0, 2), ShiftKind::t, 1);
  const TorusSequence ab = a * b;
  for (int k = -1; k <= 4; ++k) EXPECT_EQ(ab.value(k), a.value(k) * b.value(k));
}

TEST(Sequence, JsonDump) {
  const auto j = seq(Gl2Kind::sph).toJson();
  EXPECT_TRUE(j.contains("supportStart"));
  EXPECT_EQ(j.at("terms").size(), 2u);
}

TEST(TorusIntegral, KlingenSecondProof) {
  for (int x1 = 0; x1 <= 2; ++x1)
    for (int x2 = 0; x2 <= 2; ++x2) {
      const RationalFunction value =
          torusIntegral(seq(Gl2Kind::rhoSph), shiftSequence(seq(Gl2Kind::aStab, 0, 1), ShiftKind::t, x1),
                        shiftSequence(seq(Gl2Kind::aStab, 0, 2), ShiftKind::t, x2));
      const RationalFunction expected = (a1 / q).pow(x1) * (a2 / q).pow(x2) /
                                        ((1 - q * q / (alpha * b1 * b2)) * (1 - q * q / (beta * b1 * b2)));
      EXPECT_EQ(value, expected) << x1 << "," << x2;
    }
}

TEST(TorusIntegral, DepletedIsOne) {
  const TorusSequence d = seq(Gl2Kind::depleted);
  EXPECT_EQ(torusIntegral(d, d, d), RationalFunction(1));
}

TEST(TorusIntegral, IwahoriEigen) {
  const RationalFunction value =
      torusIntegral(seq(Gl2Kind::rhoAlphaPrime, 2), seq(Gl2Kind::aStab, 0, 1), seq(Gl2Kind::aStab, 0, 2));
  EXPECT_EQ(value, 1 / (1 - q * q / (beta * b1 * b2)));
}

TEST(TorusIntegral, UnitBaseThrows) {
  const TorusSequence one = TorusSequence::geometric(1, 1, 0);
  const TorusSequence w = TorusSequence::geometric(1, paramExpr(Param::alpha) / paramExpr(Param::gamma), 0);
  EXPECT_THROW(torusIntegral(one, w, one), PoleError);
}

// Partial sums of the weighted series at a point inside the disc of convergence.
TEST(TorusIntegral, PartialSumsConverge) {
  const RationalPoint pt{{Var::q, 3}, {Var::alpha, 2}, {Var::beta, 1}, {Var::a1, 5},
                         {Var::b1, 6}, {Var::a2, 5},    {Var::b2, 4}};
  const TorusSequence rho = seq(Gl2Kind::rhoSph), w1 = seq(Gl2Kind::aStab, 0, 1),
                      w2 = shiftSequence(seq(Gl2Kind::aStab, 0, 2), ShiftKind::t, 1);
  const Rational gamma = evaluate(paramExpr(Param::gamma), pt);
  const Rational ratio = gamma / pt.at(Var::alpha);  // (q gamma / alpha) q^-1
  Rational partial(0), weight(1);
  for (int k = 0; k < 300; ++k, weight *= ratio)
    partial += evaluate(rho.value(k) * w1.value(k) * w2.value(k), pt) * weight;
  const Rational closed = evaluate(torusIntegral(rho, w1, w2), pt);
  EXPECT_LT(abs(closed - partial), Rational(1) / mpz_class("1000000000000000000000000000000"));
}

TEST(Pipeline, KlingenEigenAtZero) {
  for (int x1 = 0; x1 <= 2; ++x1) {
    const RationalFunction value =
        klingenPipelineValue(seq(Gl2Kind::rhoSph), shiftSequence(seq(Gl2Kind::aStab, 0, 1), ShiftKind::t, x1),
                             shiftSequence(seq(Gl2Kind::aStab, 0, 2), ShiftKind::t, 1));
    EXPECT_EQ(value, specialCase("klingenEigen", 0, x1, 1).value);
  }
}

TEST(Pipeline, IwahoriEigenAndDepleted) {
  EXPECT_EQ(klingenPipelineValue(seq(Gl2Kind::rhoAlphaPrime, 1), seq(Gl2Kind::aStab, 0, 1), seq(Gl2Kind::aStab, 0, 2)),
            specialCase("iwahoriEigen").value);
  const TorusSequence d = seq(Gl2Kind::depleted);
  EXPECT_EQ(klingenPipelineValue(seq(Gl2Kind::rhoSph), d, d), klingenVolume() * factor("BKl"));
}

}  // namespace
}  // namespace gz
