#pragma once

#include <vector>

#include "gz/oracle/group.hpp"

namespace gz {

struct IwasawaDecomposition {
  PGroupElement n;  // upper unipotent, in the group
  PGroupElement t;  // diagonal, entries exact powers of p
  PGroupElement k;  // in the maximal compact subgroup
};

IwasawaDecomposition iwasawaDecompose(const PGroupElement& g);

// g in N(F) t w Iw(p) with w a permutation matrix (rows r, columns perm[r]).
// psiArgument is the argument of the Whittaker character on the unipotent
// part: n01 + n12 for GSp4, -n01 for GL2.
struct IwahoriCell {
  std::vector<int> torus;
  std::vector<std::size_t> perm;
  Rational psiArgument;
};

IwahoriCell iwahoriCell(const Matrix& g, unsigned long p);

// Canonical basis (upper triangular, p-power diagonal, reduced entries) of
// the Z_p-lattice spanned by the columns of m.
Matrix latticeKey(const Matrix& m, unsigned long p);

// x mod p^k for x in Z_(p), as an integer in [0, p^k).
Integer residue(const Rational& x, unsigned long p, int k);

}  // namespace gz
