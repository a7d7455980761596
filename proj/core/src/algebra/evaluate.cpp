#include "gz/algebra/evaluate.hpp"

#include <string>

namespace gz {
namespace {

template <class V>
V powValue(const V& v, long k) {
  if constexpr (std::is_same_v<V, Rational>) {
    return powRational(v, k);
  } else {
    return v.pow(k);
  }
}

template <class V>
V evalPoly(const Poly& f, const std::map<Var, V>& point) {
  V total(0);
  for (const auto& [e, c] : f.terms()) {
    V t(c);
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      const auto it = point.find(static_cast<Var>(i));
      if (it == point.end())
        throw std::invalid_argument("no value for variable " + std::string(name(static_cast<Var>(i))));
      if (k < 0 && isZero(it->second)) throw PoleError("variable with negative exponent evaluated at 0");
      t *= powValue(it->second, k);
    }
    total += t;
  }
  return total;
}

template <class V>
V evalFunction(const RationalFunction& f, const std::map<Var, V>& point) {
  const V d = evalPoly(f.denominator(), point);
  if (isZero(d)) throw PoleError("denominator vanishes at the evaluation point");
  return evalPoly(f.numerator(), point) / d;
}

// Eulerian numbers A(e, m), m = 0..e-1.
std::vector<Integer> eulerian(unsigned e) {
  std::vector<Integer> row{1};
  for (unsigned n = 2; n <= e; ++n) {
    std::vector<Integer> next(n);
    for (unsigned m = 0; m < n; ++m) {
      Integer v = 0;
      if (m < row.size()) v += Integer(m + 1) * row[m];
      if (m >= 1 && m - 1 < row.size()) v += Integer(n - m) * row[m - 1];
      next[m] = v;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

Rational evaluate(const Poly& f, const RationalPoint& point) { return evalPoly(f, point); }
CyclotomicNumber evaluate(const Poly& f, const CyclotomicPoint& point) { return evalPoly(f, point); }
Rational evaluate(const RationalFunction& f, const RationalPoint& point) { return evalFunction(f, point); }
CyclotomicNumber evaluate(const RationalFunction& f, const CyclotomicPoint& point) { return evalFunction(f, point); }

RationalFunction sumPowerSeries(const RationalFunction& c, unsigned e, const RationalFunction& x) {
  const RationalFunction one(1);
  if (x == one) throw PoleError("geometric ratio is identically 1");
  const RationalFunction base = one - x;
  if (e == 0) return c / base;
  std::vector<RationalFunction> terms;
  const auto coeffs = eulerian(e);
  for (std::size_t m = 0; m < coeffs.size(); ++m) terms.push_back(RationalFunction(Rational(coeffs[m])) * x.pow(static_cast<long>(m) + 1));
  return c * RationalFunction::sum(terms) / base.pow(static_cast<long>(e) + 1);
}

}  // namespace gz
