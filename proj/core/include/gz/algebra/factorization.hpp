#pragma once

#include <vector>

#include "gz/algebra/poly_ops.hpp"

namespace gz {

// A primitive, monomial-free, nonconstant polynomial with a flag telling
// whether it is known to be irreducible over the rationals.
struct Factor {
  Poly poly;
  bool irreducible = false;
  friend bool operator==(const Factor& a, const Factor& b) { return a.poly == b.poly; }
};

struct FactorPower {
  Factor factor;
  int power = 1;
};

// scalar * x^shift * prod(parts[i].factor ^ parts[i].power)
struct Factorization {
  Rational scalar{1};
  Exponent shift;
  std::vector<FactorPower> parts;

  bool isZero() const { return sgn(scalar) == 0; }
  Poly expand() const;
  void absorb(const Factorization& other, int power = 1);
  void addPart(const Factor& f, int power);
};

// Splits off content and monomial factor; binomials are decomposed into
// irreducible pieces through cyclotomic factorization when the binomial is
// (up to scaling) of the form t^d - a^d or t^d + a^d.
Factorization classify(const Poly& p);

// Cyclotomic polynomial Phi_n as integer coefficients, constant term first.
std::vector<Integer> cyclotomicPolynomial(unsigned n);

}  // namespace gz
