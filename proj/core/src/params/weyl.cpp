#include "gz/params/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace gz {
namespace {

Param paramFromLetter(char c) {
  switch (c) {
    case 'a':
      return Param::alpha;
    case 'b':
      return Param::beta;
    case 'g':
      return Param::gamma;
    case 'd':
      return Param::delta;
    default:
      throw std::invalid_argument(std::string("unknown parameter letter '") + c + "'");
  }
}

Substitution swapSubstitution(bool first, bool second) {
  Substitution s;
  if (first) {
    s[Var::a1] = RationalFunction::variable(Var::b1);
    s[Var::b1] = RationalFunction::variable(Var::a1);
  }
  if (second) {
    s[Var::a2] = RationalFunction::variable(Var::b2);
    s[Var::b2] = RationalFunction::variable(Var::a2);
  }
  return s;
}

}  // namespace

WeylElement::WeylElement() : WeylElement({Param::alpha, Param::beta, Param::gamma, Param::delta}) {}

WeylElement::WeylElement(std::array<Param, 4> perm) : perm_(perm) {
  for (Param p : kParams)
    if (perm_[static_cast<int>(partner(p))] != partner(perm_[static_cast<int>(p)]))
      throw std::invalid_argument("permutation does not commute with the partner involution");
  if (perm_[0] != Param::alpha) subst_[Var::alpha] = paramExpr(perm_[0]);
  if (perm_[1] != Param::beta) subst_[Var::beta] = paramExpr(perm_[1]);
}

WeylElement WeylElement::fromImages(Param imageOfAlpha, Param imageOfBeta) {
  if (imageOfBeta == imageOfAlpha || imageOfBeta == partner(imageOfAlpha))
    throw std::invalid_argument("images of alpha and beta must not be equal or partners");
  return WeylElement({imageOfAlpha, imageOfBeta, partner(imageOfBeta), partner(imageOfAlpha)});
}

std::string WeylElement::label() const { return {letter(perm_[0]), letter(perm_[1])}; }

WeylElement operator*(const WeylElement& w, const WeylElement& v) {
  std::array<Param, 4> out{};
  for (Param p : kParams) out[static_cast<int>(p)] = w(v(p));
  return WeylElement(out);
}

WeylElement WeylElement::inverse() const {
  std::array<Param, 4> out{};
  for (Param p : kParams) out[static_cast<int>((*this)(p))] = p;
  return WeylElement(out);
}

Substitution GL2Swaps::substitution() const { return swapSubstitution(first, second); }

std::string GL2Swaps::label() const { return std::string(first ? "s" : "1") + (second ? "s" : "1"); }

Substitution WeylTriple::substitution() const {
  Substitution s = w0.substitution();
  for (auto& [v, img] : swapSubstitution(w1, w2)) s[v] = img;
  return s;
}

std::string WeylTriple::label() const { return w0.label() + "/" + GL2Swaps{w1, w2}.label(); }

const std::vector<WeylElement>& weylGroupGSp4() {
  static const std::vector<WeylElement> group = [] {
    std::vector<WeylElement> g;
    for (Param a : kParams)
      for (Param b : kParams)
        if (b != a && b != partner(a)) g.push_back(WeylElement::fromImages(a, b));
    return g;
  }();
  return group;
}

const std::vector<WeylTriple>& weylTriples() {
  static const std::vector<WeylTriple> triples = [] {
    std::vector<WeylTriple> t;
    for (const auto& w : weylGroupGSp4())
      for (bool s1 : {false, true})
        for (bool s2 : {false, true}) t.push_back({w, s1, s2});
    return t;
  }();
  return triples;
}

WeylElement weylFromLabel(std::string_view label) {
  if (label.size() != 2) throw std::invalid_argument("ordering label must have two letters");
  return WeylElement::fromImages(paramFromLetter(label[0]), paramFromLetter(label[1]));
}

std::vector<std::string> orderingLabels() {
  std::vector<std::string> out;
  for (const auto& w : weylGroupGSp4()) out.push_back(w.label());
  return out;
}

RationalFunction applyWeyl(const WeylElement& w, const RationalFunction& f) {
  return w.isIdentity() ? f : substitute(f, w.substitution());
}

RationalFunction applyWeyl(const GL2Swaps& s, const RationalFunction& f) {
  return (s.first || s.second) ? substitute(f, s.substitution()) : f;
}

RationalFunction applyWeyl(const WeylTriple& t, const RationalFunction& f) { return substitute(f, t.substitution()); }

RationalFunction weylSum(const std::vector<WeylElement>& group, const RationalFunction& f) {
  std::vector<RationalFunction> terms;
  terms.reserve(group.size());
  for (const auto& w : group) terms.push_back(applyWeyl(w, f));
  return RationalFunction::sum(terms);
}

RationalFunction weylSum(const std::vector<WeylTriple>& group, const RationalFunction& f) {
  std::vector<RationalFunction> terms;
  terms.reserve(group.size());
  for (const auto& t : group) terms.push_back(applyWeyl(t, f));
  return RationalFunction::sum(terms);
}

}  // namespace gz
