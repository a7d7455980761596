#include <gtest/gtest.h>

#include <map>
#include <random>

#include "gz/algebra/cyclotomic.hpp"
#include "gz/algebra/evaluate.hpp"
#include "gz/algebra/io.hpp"
#include "gz/check/properties.hpp"
#include "gz/euler/factors.hpp"
#include "oracles.hpp"

namespace gz {
namespace {

RationalFunction v(Var x, int k = 1) { return RationalFunction::variable(x, k); }

const RationalFunction alpha = v(Var::alpha), beta = v(Var::beta), q = v(Var::q);

TEST(Rational, CanonicalSign) {
  const Rational r = parseRational("6/-4");
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(toString(r), "-3/2");
}

TEST(Arith, Telescoping) { EXPECT_EQ((1 - beta / alpha) + beta / alpha, RationalFunction(1)); }

TEST(Arith, FactorCancellation) {
  const RationalFunction f = (alpha * alpha - beta * beta) / (alpha - beta);
  EXPECT_EQ(f, alpha + beta);
  EXPECT_TRUE(f.isLaurentPolynomial());
}

TEST(Arith, SelfDifferenceIsZero) {
  const RationalFunction f = factor("E") / factor("Delta0");
  EXPECT_TRUE((f - f).isZero());
}

TEST(Arith, DivisionByZeroThrows) { EXPECT_THROW(alpha / (beta - beta), DivisionByZero); }

// Brute-force expansion of Delta0 * alpha^3 beta with gamma and delta
// eliminated, over exponent vectors in (q, alpha, beta, a1 b1 a2 b2).
TEST(Arith, Delta0ExpandsToEightTerms) {
  using Key = std::array<int, 4>;
  using Expansion = std::map<Key, Rational>;
  const auto times = [](const Expansion& x, const Expansion& y) {
    Expansion out;
    for (const auto& [ex, cx] : x)
      for (const auto& [ey, cy] : y) {
        Key k;
        for (int i = 0; i < 4; ++i) k[i] = ex[i] + ey[i];
        out[k] += cx * cy;
      }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
  };
  // gamma = q^5 beta^-1 P^-1, delta = q^5 alpha^-1 P^-1 with P = a1 b1 a2 b2
  const Expansion f1{{{0, 0, 0, 0}, 1}, {{0, -1, 1, 0}, -1}};
  const Expansion f2{{{0, 0, 0, 0}, 1}, {{5, -1, -1, -1}, -1}};
  const Expansion f3{{{0, 0, 0, 0}, 1}, {{5, 0, -2, -1}, -1}};
  const Expansion f4{{{0, 0, 0, 0}, 1}, {{5, -2, 0, -1}, -1}};
  const Expansion scale{{{0, 3, 1, 0}, 1}};
  const Expansion expected = times(times(times(times(f1, f2), f3), f4), scale);

  const RationalFunction product = factor("Delta0") * alpha.pow(3) * beta;
  ASSERT_TRUE(product.isLaurentPolynomial());
  EXPECT_EQ(expected.size(), 8u);
  RationalFunction rebuilt;
  const RationalFunction pp = v(Var::a1) * v(Var::b1) * v(Var::a2) * v(Var::b2);
  for (const auto& [k, c] : expected) rebuilt += c * q.pow(k[0]) * alpha.pow(k[1]) * beta.pow(k[2]) * pp.pow(k[3]);
  EXPECT_EQ(product, rebuilt);
  EXPECT_TRUE(product.denominator().isConstant());
  EXPECT_EQ(product.numerator().size(), expected.size());
}

TEST(Substitute, Swap) {
  const RationalFunction f = alpha / beta;
  EXPECT_EQ(substitute(f, {{Var::alpha, beta}, {Var::beta, alpha}}), beta / alpha);
}

TEST(Substitute, Delta1Swap) {
  const RationalFunction a1 = v(Var::a1), b1 = v(Var::b1);
  EXPECT_EQ(substitute(factor("Delta1"), {{Var::a1, b1}, {Var::b1, a1}}), 1 - a1 / b1);
}

TEST(Substitute, GammaInvolution) {
  const RationalFunction gamma = q.pow(5) / (beta * v(Var::a1) * v(Var::b1) * v(Var::a2) * v(Var::b2));
  EXPECT_EQ(substitute(gamma, {{Var::beta, gamma}}), beta);
}

TEST(Substitute, CompositionLaw) {
  const RationalFunction f = factor("E") / (1 - alpha * beta / q);
  const Substitution sigma{{Var::alpha, beta * q}, {Var::beta, alpha / q}};
  const Substitution tau{{Var::q, q * q}, {Var::alpha, alpha + 1}};
  Substitution composed;  // tau after sigma
  for (const auto& [x, img] : sigma) composed[x] = substitute(img, tau);
  for (const auto& [x, img] : tau)
    if (!composed.contains(x)) composed[x] = img;
  EXPECT_EQ(substitute(substitute(f, sigma), tau), substitute(f, composed));
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(1 - beta / alpha, RationalPoint{{Var::alpha, Rational(3)}, {Var::beta, Rational(2)}}), Rational(1) / 3);
  EXPECT_EQ(evaluate(q * q - 1, RationalPoint{{Var::q, Rational(1)}}), Rational(0));
  EXPECT_THROW(evaluate(1 / (q - 1), RationalPoint{{Var::q, Rational(1)}}), PoleError);
  EXPECT_THROW(evaluate(alpha, RationalPoint{{Var::q, Rational(1)}}), std::invalid_argument);
}

TEST(Evaluate, Delta0MatchesDirectProduct) {
  for (int k = 0; k < 5; ++k) {
    const auto s = testing::samplePoint(k);
    EXPECT_EQ(evaluate(factor("Delta0"), s.asMap()), testing::delta0(s));
  }
}

TEST(Evaluate, CommutesWithArith) {
  const RationalFunction f = factor("E") / factor("Delta0"), g = factor("BKl") - alpha / q;
  for (int k = 0; k < 5; ++k) {
    const auto pt = testing::samplePoint(k).asMap();
    const Rational a = evaluate(f, pt), b = evaluate(g, pt);
    EXPECT_EQ(evaluate(f + g, pt), a + b);
    EXPECT_EQ(evaluate(f - g, pt), a - b);
    EXPECT_EQ(evaluate(f * g, pt), a * b);
    EXPECT_EQ(evaluate(f / g, pt), a / b);
  }
}

TEST(Evaluate, CyclotomicPoint) {
  const CyclotomicNumber z = CyclotomicNumber::rootOfUnity(3, 1, 1);
  const CyclotomicNumber value = evaluate(alpha * alpha + alpha + 1, CyclotomicPoint{{Var::alpha, z}});
  EXPECT_TRUE(value.isZero());
}

TEST(PowerSeries, Geometric) {
  EXPECT_EQ(sumPowerSeries(1, 0, beta / alpha), alpha / (alpha - beta));
  const RationalFunction x = v(Var::x);
  EXPECT_EQ(sumPowerSeries(1, 1, x), x / ((1 - x) * (1 - x)));
  EXPECT_THROW(sumPowerSeries(1, 0, 1), PoleError);
}

TEST(PowerSeries, PartialSumsConverge) {
  const Rational x = Rational(1) / 7;
  for (unsigned e = 0; e <= 3; ++e) {
    Rational partial(0), xk(1);
    for (int k = 0; k <= 50; ++k, xk *= x) {
      Rational ke(1);
      for (unsigned i = 0; i < e; ++i) ke *= k;
      partial += ke * xk;
    }
    const Rational closed = evaluate(sumPowerSeries(1, e, v(Var::x)), RationalPoint{{Var::x, x}});
    EXPECT_LT(abs(closed - partial), Rational(1) / mpz_class("1000000000000000000000000000000000000"));
  }
}

// S(x) - x * sum_k c (k+1)^e x^k = c 0^e
TEST(PowerSeries, ShiftConsistency) {
  const RationalFunction x = v(Var::x), c = v(Var::u);
  for (unsigned e = 0; e <= 3; ++e) {
    RationalFunction shifted;
    // (k+1)^e expanded binomially
    for (unsigned j = 0; j <= e; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), e, j);
      shifted += Rational(binom) * sumPowerSeries(c, j, x);
    }
    EXPECT_EQ(sumPowerSeries(c, e, x) - x * shifted, e == 0 ? c : RationalFunction(0)) << "e=" << e;
  }
}

TEST(Cyclotomic, RootsSumToZero) {
  for (unsigned long p : {2UL, 3UL, 5UL})
    for (unsigned n = 1; n <= 3; ++n) {
      unsigned long order = 1;
      for (unsigned i = 0; i < n; ++i) order *= p;
      CyclotomicNumber sum;
      for (unsigned long k = 0; k < order; ++k) sum += CyclotomicNumber::rootOfUnity(p, n, static_cast<long>(k));
      EXPECT_TRUE(sum.isZero()) << p << "^" << n;
    }
}

TEST(Cyclotomic, FieldOperations) {
  const CyclotomicNumber z = CyclotomicNumber::rootOfUnity(5, 1, 1);
  EXPECT_EQ(z.pow(5), CyclotomicNumber(1));
  EXPECT_FALSE(z == CyclotomicNumber(1));
  const CyclotomicNumber w = z + 2;
  EXPECT_EQ(w * w.inverse(), CyclotomicNumber(1));
  EXPECT_EQ(z.liftedTo(5, 2), CyclotomicNumber::rootOfUnity(5, 2, 5));
}

TEST(Serialization, TextRoundTrip) {
  const RationalFunction f = factor("E") * alpha / (q * q - 1) + RationalFunction(Rational(3, 2));
  EXPECT_EQ(parseExpression(toString(f)), f);
  EXPECT_EQ(parseExpression("(alpha^2-beta^2)/(alpha-beta)"), alpha + beta);
  EXPECT_THROW(parseExpression("alpha +* beta"), ParseError);
}

TEST(Serialization, JsonRoundTrip) {
  const RationalFunction f = factor("BKl") / factor("Delta2") - q.pow(-3);
  EXPECT_EQ(rationalFunctionFromJson(toJson(f)), f);
}

TEST(Properties, CanonicalFormSoundness) {
  const auto report = canonicalFormCheck(2024, 100);
  EXPECT_EQ(report.status, Status::verified) << report.witness;
}

TEST(Properties, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  const auto randomElement = [&] {
    RationalFunction f(d(rng));
    for (Var x : {Var::q, Var::alpha, Var::beta}) f += d(rng) * v(x, d(rng));
    return f.isZero() ? RationalFunction(1) : f;
  };
  for (int t = 0; t < 20; ++t) {
    const RationalFunction a = randomElement(), b = randomElement(), c = randomElement();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * a.inverse(), RationalFunction(1));
  }
}

}  // namespace
}  // namespace gz
