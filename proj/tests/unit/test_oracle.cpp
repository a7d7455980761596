#include <gtest/gtest.h>

#include <random>

#include "gz/oracle/cosets.hpp"
#include "gz/oracle/decompose.hpp"
#include "gz/oracle/eigen.hpp"
#include "gz/oracle/index.hpp"
#include "gz/oracle/verify.hpp"
#include "gz/oracle/whittaker.hpp"

namespace gz {

void PrintTo(const CycloFunction& f, std::ostream* os) { *os << f.toString(); }

namespace {

constexpr unsigned long kP = 2;

RationalFunction v(Var x, int k = 1) { return RationalFunction::variable(x, k); }

bool isSymplecticSimilitude(const Matrix& g) {
  const Matrix lhs = g.transpose() * formJ() * g;
  const Rational nu = lhs(0, 3) / formJ()(0, 3);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (lhs(r, c) != nu * formJ()(r, c)) return false;
  return nu != 0;
}

// Products of root elements with p-power denominators and torus elements.
PGroupElement randomElement(std::mt19937& rng, bool integral) {
  std::uniform_int_distribution<int> pick(0, 7), entry(-8, 8), expo(-2, 2);
  PGroupElement g = PGroupElement::identity(Group::GSp4, kP);
  const auto weyl = weylRepresentatives(Group::GSp4, kP);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = static_cast<std::size_t>(pick(rng) % 4), j = static_cast<std::size_t>(pick(rng) % 4);
    if (i == j) j = (j + 1) % 4;
    const Rational x = integral ? Rational(entry(rng)) : Rational(entry(rng)) / 4;
    g = g * rootElement(Group::GSp4, i, j, x, kP) * weyl[static_cast<std::size_t>(pick(rng))];
    if (!integral) g = g * tElement(expo(rng), expo(rng), kP);
  }
  return g;
}

TEST(Group, NamedElementsAreSimilitudes) {
  for (const auto& g : {etaElement(kP), uKlElement(kP), uIwElement(kP), w1Element(kP), jElement(Group::GSp4, kP),
                        sElement(1, 2, kP), tElement(2, 1, kP)})
    EXPECT_TRUE(isSymplecticSimilitude(g.matrix())) << g.matrix().toString();
}

TEST(Group, UIwIsUKlTimesW1) { EXPECT_TRUE(uIwElement(kP) == uKlElement(kP) * w1Element(kP)); }

TEST(Iwasawa, CompactElementIsItsOwnK) {
  const PGroupElement k = rootElement(Group::GSp4, 2, 0, 3, kP) * weylRepresentatives(Group::GSp4, kP)[3];
  const auto d = iwasawaDecompose(k);
  EXPECT_TRUE(d.n.isIntegral());
  EXPECT_TRUE(d.t == PGroupElement::identity(Group::GSp4, kP));
  EXPECT_TRUE(d.n * d.t * d.k == k);
}

TEST(Iwasawa, TorusElement) {
  const PGroupElement t = tElement(1, 2, kP);
  const auto d = iwasawaDecompose(t);
  EXPECT_TRUE(d.t == t);
  EXPECT_TRUE(d.k == PGroupElement::identity(Group::GSp4, kP));
}

TEST(Iwasawa, RandomElementsReassemble) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const PGroupElement g = randomElement(rng, false);
    const auto d = iwasawaDecompose(g);
    EXPECT_TRUE(d.n * d.t * d.k == g) << g.matrix().toString();
    EXPECT_TRUE(d.k.isIntegral());
    for (std::size_t i = 0; i < 4; ++i) {
      const Rational x = d.t.matrix()(i, i);
      EXPECT_EQ(x, powRational(Rational(2), valuation(x, kP)));
      EXPECT_EQ(d.n.matrix()(i, i), 1);
    }
  }
}

TEST(Character, Examples) {
  EXPECT_EQ(additiveCharacter(3, kP), CyclotomicNumber(1));
  const CyclotomicNumber e = additiveCharacter(Rational(1) / 3, 3);
  EXPECT_FALSE(e == CyclotomicNumber(1));
  EXPECT_EQ(e.pow(3), CyclotomicNumber(1));
  CyclotomicNumber sum;
  for (long a = 0; a < 5; ++a) sum += additiveCharacter(Rational(a) / 5, 5);
  EXPECT_TRUE(sum.isZero());
  EXPECT_THROW(additiveCharacter(Rational(1) / 3, kP), std::invalid_argument);
}

TEST(Spherical, IdentityAndGl2) {
  EXPECT_EQ(sphericalWhittakerValue(PGroupElement::identity(Group::GSp4, kP)), CycloFunction(1));
  EXPECT_EQ(sphericalWhittakerValue(PGroupElement::identity(Group::GL2, kP)), CycloFunction(1));
  const RationalFunction a = v(Var::a1), b = v(Var::b1);
  EXPECT_EQ(sphericalWhittakerValue(tGL2(1, kP)), CycloFunction((a * a - b * b) / (2 * (a - b))));
}

// The t10 value is the sum of the four weights of the standard representation.
TEST(Spherical, MinusculeValue) {
  RationalFunction sum;
  for (Param x : kParams) sum += oracleParam(x, kP);
  EXPECT_EQ(sphericalWhittakerValue(tElement(1, 0, kP)), CycloFunction(sum / 8));
}

TEST(Spherical, OffSupportVanishes) {
  EXPECT_TRUE(sphericalWhittakerValue(torusElement({0, 1, 1, 2}, kP)).isZero());
}

TEST(Spherical, CharacterTransformation) {
  const PGroupElement n = rootElement(Group::GSp4, 0, 1, Rational(1) / 2, kP);
  const PGroupElement t = tElement(1, 1, kP);
  const CycloFunction base = sphericalWhittakerValue(t);
  EXPECT_EQ(sphericalWhittakerValue(n * t), CycloFunction(additiveCharacter(Rational(1) / 2, kP)) * base);
}

TEST(Spherical, RightKInvariance) {
  std::mt19937 rng(17);
  const Whittaker w = sphericalWhittaker(Group::GSp4, kP);
  const std::vector<PGroupElement> points{tElement(1, 0, kP), tElement(0, 1, kP) * etaElement(kP),
                                          rootElement(Group::GSp4, 1, 2, Rational(1) / 4, kP) * tElement(1, 1, kP)};
  for (int trial = 0; trial < 10; ++trial) {
    const PGroupElement k = randomElement(rng, true);
    ASSERT_TRUE(k.isIntegral());
    for (const auto& g : points) EXPECT_EQ(evaluate(w, g * k), evaluate(w, g));
  }
}

TEST(Cosets, Cardinalities) {
  EXPECT_EQ(enumerateCosets("U", iwahoriLevel(Group::GL2, 1), kP).representatives.size(), 2u);
  EXPECT_EQ(enumerateCosets("U2'", iwahoriLevel(Group::GSp4, 1), kP).representatives.size(), 16u);
  EXPECT_EQ(enumerateCosets("U1", siegelLevel(1), kP).representatives.size(), 8u);
  EXPECT_EQ(enumerateCosets("KmodKl", klingenLevel(1), kP).representatives.size(), 15u);
}

TEST(Cosets, PairwiseInequivalent) {
  const Level level = iwahoriLevel(Group::GSp4, 1);
  const CosetSystem sys = enumerateCosets("U1", level, kP);
  const auto& reps = sys.representatives;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      EXPECT_FALSE(inLevel(reps[i].inverse() * reps[j], level)) << i << "," << j;
}

TEST(Cosets, JsonRoundTrip) {
  const CosetSystem sys = enumerateCosets("U", iwahoriLevel(Group::GL2, 1), kP);
  const auto j = sys.toJson();
  ASSERT_EQ(j.at("representatives").size(), 2u);
  EXPECT_EQ(Matrix::fromJson(j.at("representatives")[0]), sys.representatives[0].matrix());
}

// Eigenvector property checked pointwise: the ratio U w / w is the same at every sample point.
void expectEigen(const Whittaker& w, const CosetSystem& op, const std::vector<PGroupElement>& points) {
  const Whittaker uw = heckeTranslate(op, w);
  const RationalFunction lambda = evaluate(uw, points[0]).rationalValue() / evaluate(w, points[0]).rationalValue();
  for (const auto& g : points) EXPECT_EQ(evaluate(uw, g), lambda * evaluate(w, g));
}

TEST(Eigen, Gl2Stabilized) {
  const Whittaker w = buildEigenvector({EigenKind::gl2}, kP);
  EXPECT_EQ(evaluate(w, PGroupElement::identity(Group::GL2, kP)), CycloFunction(1));
  EXPECT_EQ(evaluate(buildEigenvector({EigenKind::gl2Dual}, kP), PGroupElement::identity(Group::GL2, kP)),
            CycloFunction(-v(Var::b1) / v(Var::a1)));
  expectEigen(w, enumerateCosets("U", iwahoriLevel(Group::GL2, 1), kP),
              {PGroupElement::identity(Group::GL2, kP), tGL2(1, kP), tGL2(2, kP)});
}

TEST(Eigen, Gsp4Normalizations) {
  const PGroupElement one = PGroupElement::identity(Group::GSp4, kP);
  for (EigenKind k : {EigenKind::iwahori, EigenKind::siegel, EigenKind::klingen})
    EXPECT_EQ(evaluate(buildEigenvector({k}, kP), one), CycloFunction(1));
}

TEST(Eigen, Siegel) {
  const Whittaker w = buildEigenvector({EigenKind::siegel}, kP);
  expectEigen(w, enumerateCosets("U1", siegelLevel(1), kP),
              {PGroupElement::identity(Group::GSp4, kP), tElement(1, 0, kP), tElement(0, 1, kP)});
}

TEST(Eigen, SolveLinear) {
  const RationalFunction x = v(Var::x);
  const auto sol = solveLinear({{1, x, 1 + x}, {x, 1, 1 + x}}, 2);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ((*sol)[0], RationalFunction(1));
  EXPECT_EQ((*sol)[1], RationalFunction(1));
  EXPECT_FALSE(solveLinear({{1, 1, 1}, {2, 2, 3}, {1, 0, 0}}, 2).has_value());
  EXPECT_THROW(solveLinear({{1, 1, 1}, {2, 2, 2}}, 2), std::domain_error);
}

TEST(OpenOrbit, SmallPrimes) {
  for (unsigned long p : {2UL, 3UL}) {
    const auto r = openOrbitCount(p);
    EXPECT_EQ(r.status, Status::verified) << r.witness;
  }
}

TEST(OpenOrbit, EtaTopRow) {
  const Matrix eta = etaElement(kP).matrix();
  EXPECT_EQ(eta(0, 0), 1);
  EXPECT_EQ(eta(0, 1), 1);
  EXPECT_EQ(eta(0, 2), 1);
}

TEST(Index, IdentityAndSiegel) {
  const PGroupElement one = PGroupElement::identity(Group::GSp4, kP);
  const IndexResult trivial = subgroupIndex(one, maximalLevel(Group::GSp4), HSubgroup::mirabolic, 1);
  EXPECT_TRUE(trivial.stabilized());
  EXPECT_EQ(trivial.index, 1u);
  const PGroupElement g = etaElement(kP) * tElement(1, 0, kP);
  EXPECT_EQ(orbitIndex(g, siegelLevel(1), HSubgroup::mirabolic), kP * kP * (kP - 1));
}

}  // namespace
}  // namespace gz
