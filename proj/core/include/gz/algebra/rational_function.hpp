#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gz/algebra/factorization.hpp"

namespace gz {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quotient of Laurent polynomials over the rationals in canonical form:
// numerator and denominator coprime, the denominator a polynomial with no
// monomial factor whose lexicographically first coefficient is 1. Two values
// are equal exactly when their canonical forms coincide.
//
// Factored forms of both sides are carried along so that products and
// quotients of Euler-factor style expressions cancel without a general gcd.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c);             // NOLINT(google-explicit-constructor)
  RationalFunction(const Poly& p);      // NOLINT(google-explicit-constructor)
  RationalFunction(const Poly& num, const Poly& den);

  static RationalFunction variable(Var v, int power = 1);
  static RationalFunction monomial(const Exponent& e, const Rational& c = Rational(1));
  static RationalFunction fromFactorizations(Factorization num, Factorization den);

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  const Factorization& numeratorFactors() const noexcept { return numFac_; }
  const Factorization& denominatorFactors() const noexcept { return denFac_; }

  bool isZero() const noexcept { return num_.isZero(); }
  bool isConstant() const noexcept { return den_.isConstant() && num_.isConstant(); }
  bool isLaurentPolynomial() const noexcept { return den_.isConstant(); }
  Rational constantValue() const;
  // (c, e) when the value is c * x^e.
  std::optional<std::pair<Rational, Exponent>> asMonomial() const;
  std::vector<Var> variables() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }
  RationalFunction pow(long n) const;
  RationalFunction inverse() const;

  // Sum over a common denominator with a single cancellation pass.
  static RationalFunction sum(std::span<const RationalFunction> terms);
  static RationalFunction product(std::span<const RationalFunction> terms);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void finish();

  Factorization numFac_;
  Factorization denFac_;  // scalar 1, no shift
  Poly num_;
  Poly den_;
};

enum class ArithKind { add, sub, mul, div };
RationalFunction arith(const RationalFunction& a, const RationalFunction& b, ArithKind kind);

using RF = RationalFunction;
using Substitution = std::map<Var, RationalFunction>;

// Simultaneous substitution; variables without an image are left unchanged.
RationalFunction substitute(const RationalFunction& f, const Substitution& images);

}  // namespace gz
