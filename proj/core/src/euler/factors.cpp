#include "gz/euler/factors.hpp"

#include <array>
#include <utility>

namespace gz {
namespace {

RationalFunction v(Var x) { return RationalFunction::variable(x); }

RationalFunction q2over(const RationalFunction& lambda, Var mu, Var nu) {
  return oneMinus(RationalFunction::variable(Var::q, 2) / (lambda * v(mu) * v(nu)));
}

RationalFunction product(std::initializer_list<RationalFunction> fs) {
  return RationalFunction::product(std::span<const RationalFunction>(fs.begin(), fs.size()));
}

RationalFunction delta0() {
  const auto a = paramExpr(Param::alpha), b = paramExpr(Param::beta);
  const auto g = paramExpr(Param::gamma), d = paramExpr(Param::delta);
  return product({oneMinus(b / a), oneMinus(g / a), oneMinus(g / b), oneMinus(d / a)});
}

RationalFunction eulerE() {
  const auto a = paramExpr(Param::alpha), b = paramExpr(Param::beta), g = paramExpr(Param::gamma);
  return product({q2over(a, Var::a1, Var::a2), q2over(a, Var::b1, Var::a2), q2over(a, Var::a1, Var::b2),
                  q2over(a, Var::b1, Var::b2), q2over(b, Var::a1, Var::a2), q2over(b, Var::a1, Var::b2),
                  q2over(b, Var::b1, Var::a2), q2over(g, Var::a1, Var::a2)});
}

RationalFunction eulerBKl() {
  std::vector<RationalFunction> fs;
  for (Param l : {Param::alpha, Param::beta})
    for (Var m : {Var::a1, Var::b1})
      for (Var n : {Var::a2, Var::b2}) fs.push_back(q2over(paramExpr(l), m, n));
  return RationalFunction::product(fs);
}

RationalFunction eulerEKl() {
  const auto a = paramExpr(Param::alpha), b = paramExpr(Param::beta);
  return product({q2over(a, Var::a1, Var::a2), q2over(a, Var::b1, Var::a2), q2over(a, Var::a1, Var::b2),
                  q2over(b, Var::a1, Var::a2), q2over(b, Var::a1, Var::b2), q2over(b, Var::b1, Var::a2)});
}

RationalFunction pPi() {
  std::vector<RationalFunction> fs;
  for (Param l : kParams) fs.push_back(oneMinus(paramExpr(l) * v(Var::X)));
  return RationalFunction::product(fs);
}

RationalFunction pPiSigma2() {
  std::vector<RationalFunction> fs;
  for (Param l : kParams)
    for (Var m : {Var::a2, Var::b2})
      fs.push_back(oneMinus(paramExpr(l) * v(m) * v(Var::X) * RationalFunction::variable(Var::q, -3)));
  return RationalFunction::product(fs);
}

using Builder = RationalFunction (*)();

constexpr std::array<std::pair<std::string_view, Builder>, 8> kLibrary{{
    {"Delta0", delta0},
    {"Delta1", [] { return oneMinus(v(Var::b1) / v(Var::a1)); }},
    {"Delta2", [] { return oneMinus(v(Var::b2) / v(Var::a2)); }},
    {"E", eulerE},
    {"BKl", eulerBKl},
    {"EKl", eulerEKl},
    {"Ppi", pPi},
    {"PpiSigma2", pPiSigma2},
}};

}  // namespace

RationalFunction oneMinus(const RationalFunction& ratio) { return RationalFunction(1) - ratio; }

RationalFunction factor(std::string_view name) {
  for (const auto& [n, build] : kLibrary)
    if (n == name) return build();
  throw UnknownName("unknown factor '" + std::string(name) + "'");
}

std::vector<std::string> factorNames() {
  std::vector<std::string> out;
  for (const auto& entry : kLibrary) out.emplace_back(entry.first);
  return out;
}

RationalFunction lPolynomial(std::string_view name, const RationalFunction& arg) {
  if (name != "Ppi" && name != "PpiSigma2") throw UnknownName("not an L-polynomial: '" + std::string(name) + "'");
  return substitute(factor(name), {{Var::X, arg}});
}

}  // namespace gz
