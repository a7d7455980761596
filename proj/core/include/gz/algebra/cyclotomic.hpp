#pragma once

#include <string>
#include <vector>

#include "gz/algebra/rational.hpp"

namespace gz {

// Element of Q(zeta) for zeta a primitive p^N-th root of unity, stored in the
// power basis 1, zeta, ..., zeta^(phi-1) reduced modulo the cyclotomic
// polynomial. Order 1 is the rational field.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(Rational(0)) {}
  CyclotomicNumber(const Rational& r);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(long r) : CyclotomicNumber(Rational(r)) {}  // NOLINT(google-explicit-constructor)

  // zeta^k with zeta = exp(2 pi i / p^n).
  static CyclotomicNumber rootOfUnity(unsigned long p, unsigned n, long k);

  unsigned long prime() const noexcept { return prime_; }
  unsigned level() const noexcept { return level_; }
  unsigned long order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool isZero() const;
  bool isRational() const;
  Rational rationalValue() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }
  CyclotomicNumber& operator/=(const CyclotomicNumber& b) { return *this = *this / b; }
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long n) const;

  // Same value viewed in the field of p^n-th roots (n >= level()).
  CyclotomicNumber liftedTo(unsigned long p, unsigned n) const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  std::string toString() const;

 private:
  CyclotomicNumber(unsigned long p, unsigned n, std::vector<Rational> full);
  void shrink();

  unsigned long prime_ = 1;
  unsigned level_ = 0;
  unsigned long order_ = 1;
  std::vector<Rational> coeffs_;
};

inline bool isZero(const CyclotomicNumber& c) { return c.isZero(); }

}  // namespace gz
