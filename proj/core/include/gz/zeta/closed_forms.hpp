#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gz/params/weyl.hpp"

namespace gz {

// alpha^m (alpha beta)^n a1^x1 a2^x2 / q^(3m + 5n + x1 + x2)
RationalFunction shintaniMonomial(int m, int n, int x1, int x2);

// q^4/(q^2-1)^2 times the sum over the 32 Weyl triples of
// shintaniMonomial * E / (Delta0 Delta1 Delta2).
RationalFunction gejimaValue(int m, int n, int x1, int x2);

// q^4/(q^2-1)^2 * shintaniMonomial * E
RationalFunction pstabValue(int m, int n, int x1, int x2);

// The four equal quantities of the p-stabilized corollary; case in 1..4.
// Throws std::domain_error outside the case's range of validity.
RationalFunction variantValue(int variantCase, int m, int n, int x1, int x2);

struct ZetaClosedForm {
  std::string descriptor;
  RationalFunction value;
};

// ids: iwahori1, iwahori2, iwahori3, siegel, klingenEigen, tameNorm,
// iwahoriEigen, depleted. Only klingenEigen reads n, x1, x2.
ZetaClosedForm specialCase(std::string_view id, int n = 0, int x1 = 0, int x2 = 0);
std::vector<std::string> specialCaseIds();

// q^3 / ((q+1)^2 (q-1))
RationalFunction klingenVolume();

}  // namespace gz
