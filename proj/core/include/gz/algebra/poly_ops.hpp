#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gz/algebra/laurent.hpp"

namespace gz {

// p = scalar * x^shift * prim, where prim has coprime integer coefficients,
// a positive leading coefficient and no monomial factor.
struct PrimitiveSplit {
  Rational scalar;
  Exponent shift;
  Poly prim;
};

PrimitiveSplit primitiveSplit(const Poly& p);

// Rational content: the positive rational c with p / c integral and primitive.
Rational rationalContent(const Poly& p);

int degreeIn(const Poly& p, Var v);
int minDegreeIn(const Poly& p, Var v);

// Coefficients of p viewed as a Laurent polynomial in v, keyed by power.
std::map<int, Poly> coefficientsIn(const Poly& p, Var v);

// Exact quotient a / b in the Laurent ring, or nullopt when b does not divide a.
std::optional<Poly> divideExact(const Poly& a, const Poly& b);

// Greatest common divisor up to units of the Laurent ring (nonzero scalars and
// monomials). Returns a primitive polynomial without monomial factor.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace gz
