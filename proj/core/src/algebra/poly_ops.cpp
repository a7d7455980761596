#include "gz/algebra/poly_ops.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gz {
namespace {

Poly prim(const Poly& p) { return primitiveSplit(p).prim; }

bool sameVars(const Poly& a, const Poly& b, std::vector<Var>& onlyA, std::vector<Var>& onlyB, std::vector<Var>& both) {
  auto va = a.variables();
  auto vb = b.variables();
  for (Var v : va) (std::find(vb.begin(), vb.end(), v) == vb.end() ? onlyA : both).push_back(v);
  for (Var v : vb)
    if (std::find(va.begin(), va.end(), v) == va.end()) onlyB.push_back(v);
  return onlyA.empty() && onlyB.empty();
}

Poly leadingCoefficientIn(const Poly& p, Var v, int d) {
  std::vector<Poly::Term> out;
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == d) {
      Exponent f = e;
      f.set(v, 0);
      out.emplace_back(f, c);
    }
  }
  return Poly::fromTerms(std::move(out));
}

Poly pseudoRemainder(const Poly& a, const Poly& b, Var v) {
  const int db = degreeIn(b, v);
  const Poly lcb = leadingCoefficientIn(b, v, db);
  Poly r = a;
  while (!r.isZero()) {
    const int dr = degreeIn(r, v);
    if (dr < db) break;
    const Poly lcr = leadingCoefficientIn(r, v, dr);
    r = lcb * r - (lcr * b).shifted(Exponent::unit(v, dr - db));
  }
  return r;
}

Poly gcdPrimitive(const Poly& a, const Poly& b);

Poly contentIn(const Poly& p, Var v) {
  Poly g;
  for (const auto& [d, coef] : coefficientsIn(p, v)) {
    Poly c = prim(coef);
    g = g.isZero() ? c : gcdPrimitive(g, c);
    if (g.isConstant()) return Poly(1);
  }
  return g;
}

// Both arguments primitive, nonzero, without monomial factor.
Poly gcdPrimitive(const Poly& a, const Poly& b) {
  if (a.isConstant() || b.isConstant()) return Poly(1);
  if (a == b) return a;

  std::vector<Var> onlyA, onlyB, both;
  sameVars(a, b, onlyA, onlyB, both);
  if (!onlyA.empty() || !onlyB.empty()) {
    const bool fromA = !onlyA.empty();
    const Poly& src = fromA ? a : b;
    const Var v = fromA ? onlyA.front() : onlyB.front();
    Poly g = fromA ? b : a;
    for (const auto& [d, coef] : coefficientsIn(src, v)) {
      g = gcdPrimitive(g, prim(coef));
      if (g.isConstant()) return Poly(1);
    }
    return g;
  }

  Var v = both.front();
  int best = -1;
  for (Var w : both) {
    int d = std::max(degreeIn(a, w), degreeIn(b, w));
    if (best < 0 || d < best) {
      best = d;
      v = w;
    }
  }

  const Poly ca = contentIn(a, v);
  const Poly cb = contentIn(b, v);
  const Poly gc = gcdPrimitive(ca, cb);
  Poly r0 = *divideExact(a, ca);
  Poly r1 = *divideExact(b, cb);
  if (degreeIn(r0, v) < degreeIn(r1, v)) std::swap(r0, r1);
  Poly g;
  for (;;) {
    Poly r = pseudoRemainder(r0, r1, v);
    if (r.isZero()) {
      g = r1;
      break;
    }
    if (degreeIn(r, v) == 0) {
      g = Poly(1);
      break;
    }
    r = prim(r);
    r = *divideExact(r, contentIn(r, v));
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  g = prim(g);
  return prim(gc * g);
}

struct HeapItem {
  Exponent e;
  std::size_t i;
  std::size_t j;
};
struct HeapLess {
  bool operator()(const HeapItem& x, const HeapItem& y) const { return x.e < y.e; }
};

std::optional<Poly> dividePolynomial(const Poly& a, const Poly& b) {
  const auto& at = a.terms();
  const auto& bt = b.terms();
  const Exponent amax = a.maxExponent();
  const Exponent bmax = b.maxExponent();
  if (!bmax.dividesInto(amax)) return std::nullopt;

  std::vector<Poly::Term> q;
  std::priority_queue<HeapItem, std::vector<HeapItem>, HeapLess> heap;
  std::size_t k = 0;
  const Exponent& blead = bt[0].first;
  const Rational& bc = bt[0].second;
  Rational c;
  while (k < at.size() || !heap.empty()) {
    Exponent m;
    if (k < at.size() && (heap.empty() || at[k].first >= heap.top().e)) {
      m = at[k].first;
    } else {
      m = heap.top().e;
    }
    c = 0;
    if (k < at.size() && at[k].first == m) c = at[k++].second;
    while (!heap.empty() && heap.top().e == m) {
      HeapItem it = heap.top();
      heap.pop();
      c -= q[it.i].second * bt[it.j].second;
      if (it.j + 1 < bt.size()) heap.push({q[it.i].first + bt[it.j + 1].first, it.i, it.j + 1});
    }
    if (sgn(c) == 0) continue;
    if (!blead.dividesInto(m)) return std::nullopt;
    q.emplace_back(m - blead, c / bc);
    if (bt.size() > 1) heap.push({q.back().first + bt[1].first, q.size() - 1, 1});
  }
  return Poly::fromSortedTerms(std::move(q));
}

}  // namespace

Rational rationalContent(const Poly& p) {
  if (p.isZero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

PrimitiveSplit primitiveSplit(const Poly& p) {
  if (p.isZero()) return {Rational(0), Exponent{}, Poly{}};
  PrimitiveSplit s;
  s.shift = p.minExponent();
  s.scalar = rationalContent(p);
  if (sgn(p.leading().second) < 0) s.scalar = -s.scalar;
  s.prim = p.timesMonomial(-s.shift, Rational(1) / s.scalar);
  return s;
}

int degreeIn(const Poly& p, Var v) {
  int d = 0;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first || t.first[v] > d) d = t.first[v];
    first = false;
  }
  return d;
}

int minDegreeIn(const Poly& p, Var v) {
  int d = 0;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first || t.first[v] < d) d = t.first[v];
    first = false;
  }
  return d;
}

std::map<int, Poly> coefficientsIn(const Poly& p, Var v) {
  std::map<int, std::vector<Poly::Term>> buckets;
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f.set(v, 0);
    buckets[e[v]].emplace_back(f, c);
  }
  std::map<int, Poly> out;
  for (auto& [d, ts] : buckets) out.emplace(d, Poly::fromSortedTerms(std::move(ts)));
  return out;
}

std::optional<Poly> divideExact(const Poly& a, const Poly& b) {
  if (b.isZero()) throw std::domain_error("division by the zero polynomial");
  if (a.isZero()) return Poly{};
  if (b.isMonomial()) return a.timesMonomial(-b.leading().first, Rational(1) / b.leading().second);
  const Exponent ma = a.minExponent();
  const Exponent mb = b.minExponent();
  auto q = dividePolynomial(a.shifted(-ma), b.shifted(-mb));
  if (!q) return std::nullopt;
  return q->shifted(ma - mb);
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.isZero() && b.isZero()) return Poly{};
  if (a.isZero()) return prim(b);
  if (b.isZero()) return prim(a);
  return gcdPrimitive(prim(a), prim(b));
}

}  // namespace gz
