#pragma once

#include <array>
#include <string>
#include <vector>

#include "gz/params/context.hpp"

namespace gz {

// Permutation of (alpha, beta, gamma, delta) commuting with the partner
// involution, realized as a substitution on the free variables.
class WeylElement {
 public:
  WeylElement();  // identity
  static WeylElement fromImages(Param imageOfAlpha, Param imageOfBeta);

  Param operator()(Param p) const noexcept { return perm_[static_cast<int>(p)]; }
  // Two letters: images of alpha and beta, e.g. "ab" for the identity.
  std::string label() const;
  const Substitution& substitution() const noexcept { return subst_; }
  bool isIdentity() const noexcept { return label() == "ab"; }

  // (w * v)(x) = w(v(x))
  friend WeylElement operator*(const WeylElement& w, const WeylElement& v);
  WeylElement inverse() const;
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }

 private:
  explicit WeylElement(std::array<Param, 4> perm);
  std::array<Param, 4> perm_;
  Substitution subst_;
};

// Element of the GL2 x GL2 Weyl group: swaps a_i <-> b_i where flagged.
struct GL2Swaps {
  bool first = false;
  bool second = false;
  Substitution substitution() const;
  std::string label() const;
};

struct WeylTriple {
  WeylElement w0;
  bool w1 = false;
  bool w2 = false;
  Substitution substitution() const;
  std::string label() const;
};

// The eight GSp4 elements in a fixed order starting with the identity.
const std::vector<WeylElement>& weylGroupGSp4();
// All 32 triples (w0, w1, w2).
const std::vector<WeylTriple>& weylTriples();

WeylElement weylFromLabel(std::string_view label);
// The eight ordering labels, one per group element.
std::vector<std::string> orderingLabels();

RationalFunction applyWeyl(const WeylElement& w, const RationalFunction& f);
RationalFunction applyWeyl(const GL2Swaps& s, const RationalFunction& f);
RationalFunction applyWeyl(const WeylTriple& t, const RationalFunction& f);

// Sum of applyWeyl over a family, with one common denominator.
RationalFunction weylSum(const std::vector<WeylElement>& group, const RationalFunction& f);
RationalFunction weylSum(const std::vector<WeylTriple>& group, const RationalFunction& f);

}  // namespace gz
