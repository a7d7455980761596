#pragma once

// Independent reference computations for the tests: plain Rational
// arithmetic on explicitly written products and sums, with no use of the
// library's rational-function canonical form.

#include <array>
#include <map>
#include <vector>

#include "gz/algebra/evaluate.hpp"

namespace gz::testing {

struct Point {
  Rational q, alpha, beta, a1, b1, a2, b2;

  Rational gamma() const { return q * q * q * q * q / (beta * a1 * b1 * a2 * b2); }
  Rational delta() const { return q * q * q * q * q / (alpha * a1 * b1 * a2 * b2); }

  RationalPoint asMap() const {
    return {{Var::q, q}, {Var::alpha, alpha}, {Var::beta, beta}, {Var::a1, a1},
            {Var::b1, b1}, {Var::a2, a2},       {Var::b2, b2}};
  }
};

inline Point samplePoint(int k) {
  const Rational r(k);
  return {Rational(3) + r, Rational(2) / (5 + k), Rational(7) + r * 2, Rational(11) / 3 + r,
          Rational(-2) - r, Rational(5) / (2 + k), Rational(13) / 7 - r};
}

inline Rational oneMinus(const Rational& x) { return Rational(1) - x; }

// The three Euler factors written out from their definitions.
inline Rational delta0(const Point& s) {
  return oneMinus(s.beta / s.alpha) * oneMinus(s.gamma() / s.alpha) * oneMinus(s.gamma() / s.beta) *
         oneMinus(s.delta() / s.alpha);
}

inline Rational calE(const Point& s) {
  const Rational q2 = s.q * s.q;
  const std::array<std::pair<Rational, std::vector<Rational>>, 3> index{{
      {s.alpha, {s.a1 * s.a2, s.b1 * s.a2, s.a1 * s.b2, s.b1 * s.b2}},
      {s.beta, {s.a1 * s.a2, s.a1 * s.b2, s.b1 * s.a2}},
      {s.gamma(), {s.a1 * s.a2}},
  }};
  Rational out(1);
  for (const auto& [lambda, mus] : index)
    for (const auto& mu : mus) out *= oneMinus(q2 / (lambda * mu));
  return out;
}

// The eight GSp4 Weyl images of (alpha, beta): permutations of
// (alpha, beta, gamma, delta) commuting with alpha<->delta, beta<->gamma.
// Each entry is the new (alpha, beta); gamma and delta follow from the point.
inline std::vector<Point> weylOrbit(const Point& s) {
  const std::array<Rational, 4> v{s.alpha, s.beta, s.gamma(), s.delta()};
  std::vector<Point> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (b == a || b == 3 - a) continue;
      Point t = s;
      t.alpha = v[a];
      t.beta = v[b];
      out.push_back(t);
    }
  return out;
}

}  // namespace gz::testing
