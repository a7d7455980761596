#include "gz/algebra/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace gz {
namespace {

std::optional<Integer> exactRoot(const Integer& x, unsigned d) {
  if (sgn(x) < 0) {
    if (d % 2 == 0) return std::nullopt;
    auto r = exactRoot(-x, d);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), d) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> exactRoot(const Rational& x, unsigned d) {
  auto n = exactRoot(x.get_num(), d);
  auto m = exactRoot(x.get_den(), d);
  if (!n || !m) return std::nullopt;
  Rational r(*n, *m);
  r.canonicalize();
  return r;
}

std::vector<Integer> divideUnivariate(std::vector<Integer> num, const std::vector<Integer>& den) {
  std::vector<Integer> q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

// Factors of t^d - a^d (plus == false) or t^d + a^d (plus == true) as Laurent
// polynomials in the monomial t = x^step.
std::vector<Poly> binomialPieces(unsigned d, const Rational& a, bool plus, const Exponent& step) {
  std::vector<Poly> out;
  const unsigned range = plus ? 2 * d : d;
  for (unsigned k = 1; k <= range; ++k) {
    if (range % k != 0) continue;
    if (plus && d % k == 0) continue;
    auto phi = cyclotomicPolynomial(k);
    const long deg = static_cast<long>(phi.size()) - 1;
    std::vector<Poly::Term> terms;
    for (long j = 0; j <= deg; ++j) {
      if (phi[j] == 0) continue;
      terms.emplace_back(step.scaled(j), Rational(phi[j]) * powRational(a, deg - j));
    }
    out.push_back(Poly::fromTerms(std::move(terms)));
  }
  return out;
}

}  // namespace

std::vector<Integer> cyclotomicPolynomial(unsigned n) {
  std::vector<Integer> f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) f = divideUnivariate(std::move(f), cyclotomicPolynomial(d));
  }
  return f;
}

Poly Factorization::expand() const {
  if (isZero()) return {};
  Poly r = Poly::monomial(shift, scalar);
  for (const auto& fp : parts) r *= fp.factor.poly.pow(static_cast<unsigned>(fp.power));
  return r;
}

void Factorization::addPart(const Factor& f, int power) {
  if (power == 0) return;
  for (auto& fp : parts) {
    if (fp.factor == f) {
      fp.power += power;
      fp.factor.irreducible = fp.factor.irreducible || f.irreducible;
      return;
    }
  }
  parts.push_back({f, power});
}

void Factorization::absorb(const Factorization& other, int power) {
  scalar *= powRational(other.scalar, power);
  shift = shift + other.shift.scaled(power);
  for (const auto& fp : other.parts) addPart(fp.factor, fp.power * power);
}

Factorization classify(const Poly& p) {
  Factorization out;
  if (p.isZero()) {
    out.scalar = 0;
    return out;
  }
  PrimitiveSplit ps = primitiveSplit(p);
  out.scalar = ps.scalar;
  out.shift = ps.shift;
  if (ps.prim.isConstant()) return out;
  if (ps.prim.size() != 2) {
    out.parts.push_back({{ps.prim, false}, 1});
    return out;
  }
  const auto& [e1, c1] = ps.prim.terms()[0];
  const auto& [e2, c2] = ps.prim.terms()[1];
  const Exponent v = e1 - e2;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) d = std::gcd(d, std::abs(v[i]));
  if (d == 1) {
    out.parts.push_back({{ps.prim, true}, 1});
    return out;
  }
  const Rational r = c2 / c1;
  Exponent step;
  for (std::size_t i = 0; i < kMaxVars; ++i) step.set(i, v[i] / d);
  std::vector<Poly> pieces;
  if (auto a = exactRoot(Rational(-r), static_cast<unsigned>(d))) {
    pieces = binomialPieces(static_cast<unsigned>(d), *a, false, step);
  } else if (d % 2 == 0 && sgn(r) > 0) {
    if (auto b = exactRoot(r, static_cast<unsigned>(d))) pieces = binomialPieces(static_cast<unsigned>(d), *b, true, step);
  }
  if (pieces.empty()) {
    out.parts.push_back({{ps.prim, false}, 1});
    return out;
  }
  out.scalar *= c1;
  out.shift = out.shift + e2;
  for (const Poly& piece : pieces) {
    PrimitiveSplit s = primitiveSplit(piece);
    out.scalar *= s.scalar;
    out.shift = out.shift + s.shift;
    out.addPart({s.prim, true}, 1);
  }
  return out;
}

}  // namespace gz
