#pragma once

#include <map>

#include "gz/algebra/cyclotomic.hpp"
#include "gz/algebra/rational_function.hpp"

namespace gz {

using RationalPoint = std::map<Var, Rational>;
using CyclotomicPoint = std::map<Var, CyclotomicNumber>;

// Exact value at a point assigning every variable of f. Throws PoleError when
// the denominator vanishes and std::invalid_argument for a missing variable.
Rational evaluate(const RationalFunction& f, const RationalPoint& point);
CyclotomicNumber evaluate(const RationalFunction& f, const CyclotomicPoint& point);

Rational evaluate(const Poly& f, const RationalPoint& point);
CyclotomicNumber evaluate(const Poly& f, const CyclotomicPoint& point);

// Closed form of sum_{k >= 0} c * k^e * x^k as a rational function.
RationalFunction sumPowerSeries(const RationalFunction& c, unsigned e, const RationalFunction& x);

}  // namespace gz
