#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "gz/algebra/cyclotomic.hpp"
#include "gz/oracle/cyclo_function.hpp"
#include "gz/oracle/group.hpp"
#include "gz/params/weyl.hpp"

namespace gz {

// e(x) for x with p-power denominator; trivial on Z_p, nontrivial on p^-1 Z_p.
CyclotomicNumber additiveCharacter(const Rational& x, unsigned long p);
// Same character for any x in Q (prime-to-p denominators are units).
CyclotomicNumber padicCharacter(const Rational& x, unsigned long p);

// Oracle parameters: GSp4 values are rational functions of alpha, beta and
// c (the central character at a uniformizer) with q = p; GL2 values use
// (a_i, b_i) with q = p.
RationalFunction oracleGamma(unsigned long p);
RationalFunction oracleDelta(unsigned long p);
RationalFunction oracleParam(Param param, unsigned long p);
// Formal Weyl permutation of (alpha, beta, gamma, delta) in oracle variables.
Substitution oracleWeyl(const WeylElement& w, unsigned long p);

// Torus values: GL2 diag(p^k1, p^k2) and GSp4 diag(p^e0, ..., p^e3).
RationalFunction gl2TorusValue(int k1, int k2, unsigned long p, int factor = 1);
RationalFunction gsp4TorusValue(const std::array<int, 4>& e, unsigned long p);

CycloFunction sphericalWhittakerValue(const PGroupElement& g, int gl2Factor = 1);

class WhittakerExpression {
 public:
  WhittakerExpression(Group group, unsigned long p) : group_(group), p_(p) {}
  virtual ~WhittakerExpression() = default;
  virtual CycloFunction operator()(const Matrix& x) const = 0;
  Group group() const noexcept { return group_; }
  unsigned long prime() const noexcept { return p_; }

 private:
  Group group_;
  unsigned long p_;
};

using Whittaker = std::shared_ptr<const WhittakerExpression>;

Whittaker sphericalWhittaker(Group group, unsigned long p, int gl2Factor = 1);
// x -> f(x g)
Whittaker translate(Whittaker f, const PGroupElement& g);
// x -> sum_i scale * f(x r_i)
Whittaker heckeSum(Whittaker f, std::vector<PGroupElement> reps, RationalFunction scale = RationalFunction(1));
Whittaker linearCombination(std::vector<std::pair<RationalFunction, Whittaker>> terms);
// Formal substitution of parameters in every value.
Whittaker substituted(Whittaker f, Substitution s);
// Caches values on Iwahori double cosets; f must be Iw(p)-invariant.
Whittaker iwahoriCached(Whittaker f);

CycloFunction evaluate(const Whittaker& f, const PGroupElement& g);

}  // namespace gz
