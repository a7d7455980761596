#include "gz/params/context.hpp"

#include <random>

namespace gz {

ParameterContext::ParameterContext()
    : free_{Var::q, Var::alpha, Var::beta, Var::a1, Var::b1, Var::a2, Var::b2} {
  Exponent g = Exponent::unit(Var::q, 5);
  for (Var v : {Var::a1, Var::b1, Var::a2, Var::b2}) g = g - Exponent::unit(v);
  gamma_ = RationalFunction::monomial(g - Exponent::unit(Var::beta));
  delta_ = RationalFunction::monomial(g - Exponent::unit(Var::alpha));
  params_ = {RationalFunction::variable(Var::alpha), RationalFunction::variable(Var::beta), gamma_, delta_};
}

const ParameterContext& ParameterContext::standard() {
  static const ParameterContext ctx;
  return ctx;
}

RationalFunction reduceAtQ1(const RationalFunction& f) { return substitute(f, {{Var::q, RationalFunction(1)}}); }

std::array<Rational, 4> paramValues(const RationalPoint& point) {
  std::array<Rational, 4> out;
  for (Param p : kParams) out[static_cast<int>(p)] = evaluate(paramExpr(p), point);
  return out;
}

namespace {

// Exponents of alpha..delta and of the GL2 parameters over the free variables
// (q, alpha, beta, a1, b1, a2, b2).
using FreeExp = std::array<int, 7>;

constexpr std::array<FreeExp, 4> kParamExp{{
    {0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0},
    {5, 0, -1, -1, -1, -1, -1},
    {5, -1, 0, -1, -1, -1, -1},
}};

bool admissible(const std::array<Rational, 7>& v) {
  std::array<std::array<Rational, 5>, 7> powers;
  for (std::size_t i = 0; i < 7; ++i)
    for (int e = -2; e <= 2; ++e)
      powers[i][static_cast<std::size_t>(e + 2)] = powRational(v[i], e);
  auto value = [&](const FreeExp& e, int k, Rational& out) {
    out = powRational(v[0], e[0] + k);
    for (std::size_t i = 1; i < 7; ++i) {
      if (e[i] < -2 || e[i] > 2) {
        out *= powRational(v[i], e[i]);
      } else {
        out *= powers[i][static_cast<std::size_t>(e[i] + 2)];
      }
    }
  };
  const FreeExp zero{};
  std::vector<FreeExp> big;
  big.push_back(zero);
  for (const auto& pe : kParamExp) {
    for (int s : {1, -1}) {
      FreeExp e{};
      for (std::size_t i = 0; i < 7; ++i) e[i] = s * pe[i];
      big.push_back(e);
    }
  }
  std::vector<FreeExp> gl2{zero};
  for (std::size_t idx : {3u, 4u, 5u, 6u}) {
    for (int s : {1, -1}) {
      FreeExp e{};
      e[idx] = s;
      gl2.push_back(e);
    }
  }
  Rational val;
  for (std::size_t i = 0; i < big.size(); ++i) {
    for (std::size_t j = i; j < big.size(); ++j) {
      for (const auto& a : gl2) {
        for (const auto& b : gl2) {
          FreeExp e{};
          for (std::size_t t = 0; t < 7; ++t) e[t] = big[i][t] + big[j][t] + a[t] + b[t];
          for (int k = -6; k <= 6; ++k) {
            FreeExp ek = e;
            ek[0] += k;
            if (ek == zero) continue;
            value(e, k, val);
            if (val == 1 || val == -1) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

RationalPoint randomSpecialization(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(2, 40);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_int_distribution<int> qdist(2, 9);
  std::bernoulli_distribution negative(0.25);
  const auto& vars = ParameterContext::standard().freeVariables();
  for (;;) {
    std::array<Rational, 7> v;
    v[0] = qdist(rng);
    for (std::size_t i = 1; i < 7; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      v[i] = negative(rng) ? Rational(-r) : r;
    }
    if (!admissible(v)) continue;
    RationalPoint point;
    for (std::size_t i = 0; i < 7; ++i) point[vars[i]] = v[i];
    return point;
  }
}

}  // namespace gz
