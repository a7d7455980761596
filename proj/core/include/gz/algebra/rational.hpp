#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gz {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// once canonicalize() has run; every helper here returns canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parseRational(std::string_view text);
std::string toString(const Rational& r);

inline bool isZero(const Rational& r) { return sgn(r) == 0; }
inline bool isOne(const Rational& r) { return r == 1; }

Rational powRational(const Rational& base, long exponent);

}  // namespace gz
