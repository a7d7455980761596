#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gz/params/context.hpp"

namespace gz {

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Library names: Delta0, Delta1, Delta2, E, BKl, EKl, Ppi, PpiSigma2.
// The two L-polynomials are returned in the variable X.
RationalFunction factor(std::string_view name);
std::vector<std::string> factorNames();

// Substitutes arg for X in Ppi or PpiSigma2.
RationalFunction lPolynomial(std::string_view name, const RationalFunction& arg);

// 1 - num / den for monomial-valued expressions, kept as a single factor.
RationalFunction oneMinus(const RationalFunction& ratio);

}  // namespace gz
