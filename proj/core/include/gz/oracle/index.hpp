#pragma once

#include <cstddef>
#include <string>

#include "gz/zeta/identity.hpp"

#include "gz/oracle/cosets.hpp"
#include "gz/oracle/group.hpp"

namespace gz {

// Embedding of GL2 x_{GL1} GL2 into GSp4 (outer and inner blocks).
PGroupElement embedH(const Matrix& h1, const Matrix& h2, unsigned long p);

// Subgroups V of H(Z_p):
//   mirabolic: pairs ([[a, b], [0, 1]], [[a, b'], [0, 1]]), a a unit;
//   borel:     pairs of upper triangular integral matrices with equal unit determinants.
enum class HSubgroup { mirabolic, borel };

// Zero marks a precision at which the count is not yet a group index.
struct IndexResult {
  std::size_t index = 0;      // at precision p^n
  std::size_t nextDigit = 0;  // at precision p^(n+1)
  bool stabilized() const noexcept { return index != 0 && index == nextDigit; }
};

// [V : V cap g U g^-1], from the elements of V mod p^n that g^-1 . g moves into U.
IndexResult subgroupIndex(const PGroupElement& g, const Level& level, HSubgroup v, int n);
// The count at a single precision (0 when not yet a group index).
std::size_t enumerationIndex(const PGroupElement& g, const Level& level, HSubgroup v, int n);

// The same index as the size of the orbit of g U under topological
// generators of V; exact, no precision bound. Throws if the orbit exceeds limit.
std::size_t orbitIndex(const PGroupElement& g, const Level& level, HSubgroup v, std::size_t limit = 100000);

// Image of B_H eta in the big cell, compared over F_p with the unipotent
// elements whose top row is (1, u, v, *) with u, v nonzero.
VerificationReport openOrbitCount(unsigned long p);

}  // namespace gz
