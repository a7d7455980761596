#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gz/algebra/io.hpp"
#include "gz/euler/factors.hpp"
#include "gz/euler/relabel.hpp"
#include "gz/params/weyl.hpp"
#include "oracles.hpp"

namespace gz {
namespace {

RationalFunction v(Var x, int k = 1) { return RationalFunction::variable(x, k); }

const RationalFunction q = v(Var::q), alpha = v(Var::alpha), beta = v(Var::beta), a1 = v(Var::a1),
                       b1 = v(Var::b1), a2 = v(Var::a2), b2 = v(Var::b2);

TEST(Factors, Delta1) { EXPECT_EQ(factor("Delta1"), 1 - b1 / a1); }

TEST(Factors, UnknownName) { EXPECT_THROW(factor("Delta7"), UnknownName); }

TEST(Factors, CalEMatchesDirectProduct) {
  for (int k = 0; k < 5; ++k) {
    const auto s = testing::samplePoint(k);
    EXPECT_EQ(evaluate(factor("E"), s.asMap()), testing::calE(s));
  }
}

TEST(Factors, KlingenRatios) {
  const RationalFunction q2 = q * q, gamma = paramExpr(Param::gamma);
  EXPECT_EQ(factor("EKl") / factor("BKl"), 1 / ((1 - q2 / (alpha * b1 * b2)) * (1 - q2 / (beta * b1 * b2))));
  EXPECT_EQ(factor("EKl") / factor("E"), 1 / ((1 - q2 / (alpha * b1 * b2)) * (1 - q2 / (gamma * a1 * a2))));
}

// B_Kl written out over {alpha, beta} x {a1, b1} x {a2, b2}.
TEST(Factors, BKlDefinition) {
  RationalFunction expected(1);
  for (const auto& l : {alpha, beta})
    for (const auto& m : {a1, b1})
      for (const auto& n : {a2, b2}) expected *= 1 - q * q / (l * m * n);
  EXPECT_EQ(factor("BKl"), expected);
}

TEST(Factors, BKlSymmetry) {
  const RationalFunction b = factor("BKl");
  EXPECT_EQ(applyWeyl(weylFromLabel("ba"), b), b);
  EXPECT_EQ(applyWeyl(GL2Swaps{true, false}, b), b);
  EXPECT_EQ(applyWeyl(GL2Swaps{false, true}, b), b);
}

TEST(Factors, ExpansionRoundTrip) {
  for (const auto& name : factorNames()) {
    const RationalFunction f = factor(name);
    EXPECT_EQ(RationalFunction(f.numerator(), f.denominator()), f) << name;
    EXPECT_EQ(parseExpression(toString(f)), f) << name;
  }
}

TEST(LPolynomial, Examples) {
  EXPECT_EQ(lPolynomial("Ppi", 0), RationalFunction(1));
  const RationalFunction x = v(Var::X);
  RationalFunction expected(1);
  for (Param p : kParams) expected *= 1 - paramExpr(p) * b1 * b2 / q.pow(3);
  EXPECT_EQ(lPolynomial("Ppi", b1 * b2 / q.pow(3)), expected);
  const RationalFunction pp = lPolynomial("Ppi", x);
  for (const auto& w : weylGroupGSp4()) EXPECT_EQ(applyWeyl(w, pp), pp);
}

TEST(LPolynomial, PiSigma2) {
  const RationalFunction x = v(Var::X);
  RationalFunction expected(1);
  for (Param p : kParams)
    for (const auto& mu : {a2, b2}) expected *= 1 - paramExpr(p) * mu * x / q.pow(3);
  EXPECT_EQ(lPolynomial("PpiSigma2", x), expected);
}

TEST(Relabel, Gsp4Examples) {
  const RationalFunction pq = v(Var::pq), p = v(Var::p);
  EXPECT_EQ(relabel(TableId::gsp4, q * q / (alpha * a1 * a2)), pq / alpha);
  EXPECT_EQ(relabel(TableId::gsp4, q * q / (alpha * a1 * b2)), p * v(Var::pr2) * v(Var::pr) * v(Var::chi2) / alpha);
}

TEST(Relabel, TripleExample) { EXPECT_EQ(relabel(TableId::triple, alpha), alpha / v(Var::phr)); }

TEST(Relabel, QMapsToP) {
  for (TableId t : {TableId::gsp4, TableId::gsp4xgl2, TableId::triple})
    EXPECT_EQ(relabel(t, q), v(Var::p)) << tableName(t);
}

std::vector<std::string> sortOracle(const std::map<std::string, Rational>& vals, const Rational& threshold) {
  std::vector<std::string> small;
  for (const char* l : {"alpha", "beta", "gamma", "delta"})
    for (const char* m : {"a2", "b2"})
      if (vals.at(l) + vals.at(m) <= threshold) small.push_back(std::string(l) + "*" + m);
  std::sort(small.begin(), small.end());
  return small;
}

TEST(ValuationSplit, Ordinary) {
  const std::map<std::string, Rational> vals{{"alpha", 0}, {"beta", 1}, {"gamma", 2},
                                             {"delta", 3}, {"a2", 0},   {"b2", 1}};
  const auto split = valuationSplit(vals, 1);
  EXPECT_EQ(split.small.size(), 3u);
  EXPECT_EQ(split.large.size(), 5u);
  EXPECT_TRUE(split.between.empty());
}

TEST(ValuationSplit, ThresholdBelowAll) {
  const std::map<std::string, Rational> vals{{"alpha", 0}, {"beta", 1}, {"gamma", 2},
                                             {"delta", 3}, {"a2", 0},   {"b2", 1}};
  const auto split = valuationSplit(vals, -1);
  EXPECT_TRUE(split.small.empty());
  EXPECT_EQ(split.large.size(), 8u);
}

TEST(ValuationSplit, RandomMatchesSort) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 6);
  for (int t = 0; t < 50; ++t) {
    std::map<std::string, Rational> vals{{"alpha", d(rng)}, {"beta", d(rng)}, {"gamma", d(rng)},
                                         {"a2", d(rng)},    {"b2", d(rng)}};
    vals["delta"] = vals["beta"] + vals["gamma"] - vals["alpha"];
    const Rational threshold = d(rng);
    auto split = valuationSplit(vals, threshold);
    std::sort(split.small.begin(), split.small.end());
    EXPECT_EQ(split.small, sortOracle(vals, threshold));
    EXPECT_EQ(split.small.size() + split.large.size() + split.between.size(), 8u);
  }
}

}  // namespace
}  // namespace gz
