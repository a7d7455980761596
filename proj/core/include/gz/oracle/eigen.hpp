#pragma once

#include <string>
#include <vector>

#include "gz/oracle/cosets.hpp"
#include "gz/oracle/whittaker.hpp"

namespace gz {

// Points t w (t in a box of torus elements, w a Weyl representative); these
// determine any Iw(p)-invariant Whittaker function supported near the box.
std::vector<Matrix> iwahoriSamplePoints(Group g, unsigned long p, int low, int high);

// The span of T^j f, j < d, for an operator T given by a coset system. The
// relation T^d f = sum_j r_j T^j f is found from exact evaluations at the
// sample points and confirmed at a second, larger set of points.
class CyclicSpace {
 public:
  using Vector = std::vector<RationalFunction>;

  CyclicSpace(Whittaker f, CosetSystem op, std::size_t maxDimension = 8);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const Vector& relation() const noexcept { return relation_; }

  Vector generator() const;
  Vector applyT(const Vector& v) const;
  Vector applyTInverse(const Vector& v) const;  // throws std::domain_error when T is singular
  // v - c T^-1 v
  Vector applyFactor(const Vector& v, const RationalFunction& c) const;
  Whittaker realize(const Vector& v) const;

 private:
  CosetSystem op_;
  bool iwahoriInvariant_;
  std::vector<Whittaker> basis_;
  Vector relation_;
};

enum class EigenKind { iwahori, siegel, klingen, klingenDual, iwahoriDual, gl2, gl2Dual };

struct EigenRecipe {
  EigenKind kind = EigenKind::iwahori;
  std::string ordering = "ab";  // Weyl ordering label for GSp4
  int n = 1;                    // level depth for dual vectors
  int factor = 1;               // GL2 factor (a1, b1) or (a2, b2)
  bool swapGl2 = false;         // eigenvalue b instead of a
};

Whittaker buildEigenvector(const EigenRecipe& recipe, unsigned long p);

// Exact solution of A x = b over rational functions; rows are [A | b].
// Returns nullopt when inconsistent; throws std::domain_error when A has
// rank below its column count.
std::optional<std::vector<RationalFunction>> solveLinear(std::vector<std::vector<RationalFunction>> rows,
                                                         std::size_t unknowns);

}  // namespace gz
