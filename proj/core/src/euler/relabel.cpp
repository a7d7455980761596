#include "gz/euler/relabel.hpp"

#include <stdexcept>

namespace gz {
namespace {

RationalFunction mono(std::initializer_list<std::pair<Var, int>> powers) {
  Exponent e;
  for (const auto& [v, k] : powers) e = e + Exponent::unit(v, k);
  return RationalFunction::monomial(e);
}

Substitution gsp4Table() {
  // t1 = r1 - q - r, t2 = r2 - q + r; the parameters of sigma_i are p and p^-t_i chi_i(p)^-1.
  return {
      {Var::q, mono({{Var::p, 1}})},
      {Var::alpha, mono({{Var::pq, -1}, {Var::alpha, 1}})},
      {Var::beta, mono({{Var::pq, -1}, {Var::beta, 1}})},
      {Var::a1, mono({{Var::p, 1}})},
      {Var::b1, mono({{Var::pr1, -1}, {Var::pq, 1}, {Var::pr, 1}, {Var::chi1, -1}})},
      {Var::a2, mono({{Var::p, 1}})},
      {Var::b2, mono({{Var::pr2, -1}, {Var::pq, 1}, {Var::pr, -1}, {Var::chi2, -1}})},
  };
}

Substitution gsp4xgl2Table() {
  return {
      {Var::q, mono({{Var::p, 1}})},
      {Var::alpha, mono({{Var::phr, -1}, {Var::alpha, 1}})},
      {Var::beta, mono({{Var::phr, -1}, {Var::beta, 1}})},
      {Var::a1, mono({{Var::ph1, -1}, {Var::kappa, -1}})},
      {Var::b1, mono({{Var::p, 1}, {Var::ph1, 1}})},
      {Var::a2, mono({{Var::ph2, -1}, {Var::a2, 1}})},
      {Var::b2, mono({{Var::ph2, -1}, {Var::b2, 1}})},
  };
}

Substitution tripleTable() {
  return {
      {Var::q, mono({{Var::p, 1}})},
      {Var::alpha, mono({{Var::phr, -1}, {Var::alpha, 1}})},
      {Var::beta, mono({{Var::phr, -1}, {Var::beta, 1}})},
      {Var::a1, mono({{Var::ph1, -1}, {Var::a1, 1}})},
      {Var::b1, mono({{Var::ph1, -1}, {Var::b1, 1}})},
      {Var::a2, mono({{Var::ph2, -1}, {Var::a2, 1}})},
      {Var::b2, mono({{Var::ph2, -1}, {Var::b2, 1}})},
  };
}

}  // namespace

TableId tableFromName(std::string_view name) {
  if (name == "gsp4") return TableId::gsp4;
  if (name == "gsp4xgl2") return TableId::gsp4xgl2;
  if (name == "triple") return TableId::triple;
  throw std::invalid_argument("unknown relabel table '" + std::string(name) + "'");
}

std::string_view tableName(TableId id) {
  switch (id) {
    case TableId::gsp4:
      return "gsp4";
    case TableId::gsp4xgl2:
      return "gsp4xgl2";
    case TableId::triple:
      return "triple";
  }
  return "";
}

const Substitution& relabelTable(TableId id) {
  static const Substitution g = gsp4Table();
  static const Substitution gg = gsp4xgl2Table();
  static const Substitution t = tripleTable();
  switch (id) {
    case TableId::gsp4:
      return g;
    case TableId::gsp4xgl2:
      return gg;
    case TableId::triple:
      return t;
  }
  throw std::invalid_argument("unknown relabel table");
}

RationalFunction relabel(TableId id, const RationalFunction& f) { return substitute(f, relabelTable(id)); }

RationalFunction relabeledParam(TableId id, Param p) {
  const RationalFunction scale = relabelTable(id).at(Var::alpha) / RationalFunction::variable(Var::alpha);
  return relabel(id, paramExpr(p)) / scale;
}

ValuationSplit valuationSplit(const std::map<std::string, Rational>& vals, const Rational& threshold,
                              const Rational& gap) {
  auto get = [&](const char* k) {
    const auto it = vals.find(k);
    if (it == vals.end()) throw std::invalid_argument(std::string("missing valuation for ") + k);
    return it->second;
  };
  if (get("alpha") + get("delta") != get("beta") + get("gamma"))
    throw std::invalid_argument("inconsistent valuations: v(alpha delta) != v(beta gamma)");
  ValuationSplit out;
  for (const char* l : {"alpha", "beta", "gamma", "delta"}) {
    for (const char* m : {"a2", "b2"}) {
      const Rational val = get(l) + get(m);
      std::string label = std::string(l) + "*" + m;
      if (val <= threshold) {
        out.small.push_back(std::move(label));
      } else if (val >= threshold + gap) {
        out.large.push_back(std::move(label));
      } else {
        out.between.push_back(std::move(label));
      }
    }
  }
  return out;
}

}  // namespace gz
