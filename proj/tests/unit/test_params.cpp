#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gz/algebra/io.hpp"
#include "gz/euler/factors.hpp"
#include "gz/params/weyl.hpp"
#include "oracles.hpp"

namespace gz {
namespace {

RationalFunction v(Var x) { return RationalFunction::variable(x); }

TEST(Context, Constraint) {
  const auto& ctx = ParameterContext::standard();
  const RationalFunction alpha = v(Var::alpha), beta = v(Var::beta);
  EXPECT_EQ(alpha * ctx.deltaExpr(), beta * ctx.gammaExpr());
  EXPECT_EQ(alpha * ctx.deltaExpr() * v(Var::a1) * v(Var::b1) * v(Var::a2) * v(Var::b2),
            RationalFunction::variable(Var::q, 5));
}

TEST(Weyl, IdentityFixesEverything) {
  const WeylElement e;
  for (Var x : ParameterContext::standard().freeVariables()) EXPECT_EQ(applyWeyl(e, v(x)), v(x));
}

// Orbit of the pair (alpha, beta): all ordered pairs (x, y) with y not in {x, partner(x)}.
TEST(Weyl, OrderingLabelsAreTheOrbit) {
  std::set<std::string> expected;
  for (Param x : kParams)
    for (Param y : kParams)
      if (y != x && y != partner(x)) expected.insert(std::string{letter(x), letter(y)});
  std::set<std::string> got;
  for (const auto& w : weylGroupGSp4()) got.insert(std::string{letter(w(Param::alpha)), letter(w(Param::beta))});
  EXPECT_EQ(got, expected);
  const auto labels = orderingLabels();
  EXPECT_EQ(std::set<std::string>(labels.begin(), labels.end()), expected);
}

TEST(Weyl, BetaGammaSwapIsInvolution) {
  const WeylElement w = weylFromLabel("ag");
  const RationalFunction img = applyWeyl(w, v(Var::beta));
  EXPECT_EQ(img, ParameterContext::standard().gammaExpr());
  EXPECT_EQ(applyWeyl(w, img), v(Var::beta));
  for (Var x : ParameterContext::standard().freeVariables()) EXPECT_EQ(applyWeyl(w, applyWeyl(w, v(x))), v(x));
}

TEST(Weyl, ActionIsHomomorphism) {
  const RationalFunction f = factor("E") / factor("Delta0");
  for (const auto& w : weylGroupGSp4())
    for (const auto& u : weylGroupGSp4()) EXPECT_EQ(applyWeyl(w * u, f), applyWeyl(w, applyWeyl(u, f)));
}

// Dihedral of order 8: exactly 5 involutions and 2 elements of order 4.
TEST(Weyl, DihedralStructure) {
  int involutions = 0, order4 = 0;
  for (const auto& w : weylGroupGSp4()) {
    if (w.isIdentity()) continue;
    if ((w * w).isIdentity()) ++involutions;
    else if ((w * w * w * w).isIdentity()) ++order4;
  }
  EXPECT_EQ(involutions, 5);
  EXPECT_EQ(order4, 2);
}

TEST(Weyl, PermutesParameterMultiset) {
  std::multiset<std::string> base;
  for (Param x : kParams) base.insert(toString(paramExpr(x)));
  for (const auto& w : weylGroupGSp4()) {
    std::multiset<std::string> image;
    for (Param x : kParams) image.insert(toString(applyWeyl(w, paramExpr(x))));
    EXPECT_EQ(image, base) << w.label();
  }
}

TEST(Weyl, Gl2SwapsCommuteAndFixDerived) {
  const auto& ctx = ParameterContext::standard();
  const GL2Swaps s{true, true};
  EXPECT_EQ(applyWeyl(s, ctx.gammaExpr()), ctx.gammaExpr());
  EXPECT_EQ(applyWeyl(s, ctx.deltaExpr()), ctx.deltaExpr());
  const RationalFunction f = factor("E");
  for (const auto& w : weylGroupGSp4()) EXPECT_EQ(applyWeyl(s, applyWeyl(w, f)), applyWeyl(w, applyWeyl(s, f)));
}

TEST(Weyl, Delta1Swap) {
  EXPECT_EQ(applyWeyl(GL2Swaps{true, false}, factor("Delta1")), 1 - v(Var::a1) / v(Var::b1));
}

TEST(Weyl, CentralProductInvariant) {
  const RationalFunction ad = paramExpr(Param::alpha) * paramExpr(Param::delta);
  for (const auto& w : weylGroupGSp4()) EXPECT_EQ(applyWeyl(w, ad), ad);
}

// Independent oracle: sum the 8 Weyl images of 1/Delta0 numerically.
TEST(Weyl, InverseDelta0SumsToOne) {
  EXPECT_EQ(weylSum(weylGroupGSp4(), 1 / factor("Delta0")), RationalFunction(1));
  for (int k = 0; k < 3; ++k) {
    Rational sum(0);
    for (const auto& s : testing::weylOrbit(testing::samplePoint(k))) sum += 1 / testing::delta0(s);
    EXPECT_EQ(sum, 1);
  }
}

TEST(Weyl, TriplesAreDistinct) {
  std::set<std::string> labels;
  for (const auto& t : weylTriples()) labels.insert(t.label());
  EXPECT_EQ(labels.size(), 32u);
}

TEST(ReduceAtQ1, Examples) {
  const RationalFunction q = v(Var::q), x = v(Var::X), alpha = v(Var::alpha), b1 = v(Var::b1), b2 = v(Var::b2);
  EXPECT_EQ(reduceAtQ1((q * q - 1) * (q * q - 1) * x / ((q * q - 1) * (q * q - 1))), x);
  EXPECT_EQ(reduceAtQ1(1 - q * q / (alpha * b1 * b2)), 1 - 1 / (alpha * b1 * b2));
  EXPECT_THROW(reduceAtQ1(1 / (q - 1)), PoleError);
}

TEST(ReduceAtQ1, RingHomomorphism) {
  const RationalFunction q = v(Var::q), a = factor("E") / q, b = factor("BKl") + q * v(Var::alpha);
  EXPECT_EQ(reduceAtQ1(a + b), reduceAtQ1(a) + reduceAtQ1(b));
  EXPECT_EQ(reduceAtQ1(a * b), reduceAtQ1(a) * reduceAtQ1(b));
}

TEST(RandomSpecialization, DeterministicAndAdmissible) {
  EXPECT_EQ(randomSpecialization(1), randomSpecialization(1));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RationalPoint pt = randomSpecialization(seed);
    const auto vals = paramValues(pt);
    EXPECT_EQ(vals[0] * vals[3], vals[1] * vals[2]);
    EXPECT_NE(evaluate(factor("Delta0"), pt), 0);
    for (const auto& w : weylGroupGSp4())
      for (const char* name : {"Delta0", "E", "BKl", "EKl"})
        EXPECT_NO_THROW((void)evaluate(1 / applyWeyl(w, factor(name)), pt)) << name << " at seed " << seed;
  }
}

}  // namespace
}  // namespace gz
