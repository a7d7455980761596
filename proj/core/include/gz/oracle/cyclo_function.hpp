#pragma once

#include <string>
#include <vector>

#include "gz/algebra/cyclotomic.hpp"
#include "gz/algebra/rational_function.hpp"

namespace gz {

// Element of Q(zeta_{p^N})(variables): sum_k f_k zeta^k with rational
// function coefficients. Stored in the redundant basis zeta^0..zeta^(p^N - 1);
// comparisons go through the power basis modulo the cyclotomic polynomial.
class CycloFunction {
 public:
  CycloFunction() : coeffs_{RationalFunction(0)} {}
  CycloFunction(const RationalFunction& f) : coeffs_{f} {}  // NOLINT(google-explicit-constructor)
  CycloFunction(long c) : coeffs_{RationalFunction(c)} {}   // NOLINT(google-explicit-constructor)
  CycloFunction(const CyclotomicNumber& c);                 // NOLINT(google-explicit-constructor)

  unsigned long prime() const noexcept { return prime_; }
  unsigned level() const noexcept { return level_; }

  // Power-basis coordinates at level n >= level(), phi(p^n) entries.
  std::vector<RationalFunction> coordinates(unsigned long p, unsigned n) const;

  bool isZero() const;
  bool isRational() const;
  RationalFunction rationalValue() const;  // throws std::domain_error if not rational

  CycloFunction operator-() const;
  friend CycloFunction operator+(const CycloFunction& a, const CycloFunction& b);
  friend CycloFunction operator-(const CycloFunction& a, const CycloFunction& b);
  friend CycloFunction operator*(const CycloFunction& a, const CycloFunction& b);
  friend CycloFunction operator*(const RationalFunction& a, const CycloFunction& b);
  CycloFunction& operator+=(const CycloFunction& b) { return *this = *this + b; }
  CycloFunction& operator-=(const CycloFunction& b) { return *this = *this - b; }

  friend bool operator==(const CycloFunction& a, const CycloFunction& b) { return (a - b).isZero(); }

  CycloFunction substituted(const Substitution& s) const;

  static CycloFunction sum(std::span<const CycloFunction> terms);

  std::string toString() const;

 private:
  CycloFunction(unsigned long p, unsigned level, std::vector<RationalFunction> coeffs);
  CycloFunction liftedTo(unsigned long p, unsigned n) const;
  static unsigned long commonPrime(const CycloFunction& a, const CycloFunction& b);

  unsigned long prime_ = 1;
  unsigned level_ = 0;
  std::vector<RationalFunction> coeffs_;
};

}  // namespace gz
