#include "gz/algebra/rational_function.hpp"

#include <algorithm>

namespace gz {
namespace {

struct Piece {
  Factor factor;
  int power;
  int origin;  // pieces sharing a nonnegative origin are already coprime
};

struct Work {
  Rational scalar{1};
  Exponent shift;
  std::vector<Piece> num;
  std::vector<Piece> den;

  void add(std::vector<Piece>& side, const Factor& f, int power, int origin) {
    if (power == 0) return;
    for (auto& p : side) {
      if (p.factor == f) {
        p.power += power;
        p.factor.irreducible = p.factor.irreducible || f.irreducible;
        if (p.origin != origin) p.origin = -1;
        return;
      }
    }
    side.push_back({f, power, origin});
  }

  void absorbNum(const Factorization& f, int power, int origin) {
    scalar *= powRational(f.scalar, power);
    shift = shift + f.shift.scaled(power);
    for (const auto& fp : f.parts) add(num, fp.factor, fp.power * power, origin);
  }
  void absorbDen(const Factorization& f, int power, int origin) {
    scalar /= powRational(f.scalar, power);
    shift = shift - f.shift.scaled(power);
    for (const auto& fp : f.parts) add(den, fp.factor, fp.power * power, origin);
  }

  void prune() {
    auto zero = [](const Piece& p) { return p.power == 0; };
    num.erase(std::remove_if(num.begin(), num.end(), zero), num.end());
    den.erase(std::remove_if(den.begin(), den.end(), zero), den.end());
  }

  bool matchIdentical() {
    bool changed = false;
    for (auto& d : den) {
      for (auto& n : num) {
        if (n.power > 0 && d.power > 0 && n.factor == d.factor) {
          int k = std::min(n.power, d.power);
          n.power -= k;
          d.power -= k;
          changed = true;
        }
      }
    }
    prune();
    return changed;
  }

  // One divisibility step between some numerator and denominator piece.
  bool splitOnce() {
    for (std::size_t i = 0; i < den.size(); ++i) {
      for (std::size_t j = 0; j < num.size(); ++j) {
        const Factor f = den[i].factor;
        const Factor g = num[j].factor;
        if (den[i].origin >= 0 && den[i].origin == num[j].origin) continue;
        if (f.irreducible && g.irreducible) continue;
        if (f.irreducible) {
          if (auto q = divideExact(g.poly, f.poly)) {
            num[j].power -= 1;
            den[i].power -= 1;
            absorbNum(classify(*q), 1, -1);
            prune();
            return true;
          }
          continue;
        }
        if (g.irreducible) {
          if (auto q = divideExact(f.poly, g.poly)) {
            const int e = den[i].power;
            den[i].power = 0;
            add(den, g, e, -1);
            absorbDen(classify(*q), e, -1);
            prune();
            return true;
          }
          continue;
        }
        Poly h;
        if (divideExact(g.poly, f.poly)) {
          h = f.poly;
        } else if (divideExact(f.poly, g.poly)) {
          h = g.poly;
        } else {
          h = gcd(g.poly, f.poly);
        }
        if (h.isConstant()) continue;
        const int eg = num[j].power;
        const int ef = den[i].power;
        num[j].power = 0;
        den[i].power = 0;
        const Factorization hf = classify(h);
        absorbNum(hf, eg, -1);
        absorbNum(classify(*divideExact(g.poly, h)), eg, -1);
        absorbDen(hf, ef, -1);
        absorbDen(classify(*divideExact(f.poly, h)), ef, -1);
        prune();
        return true;
      }
    }
    return false;
  }

  void cancel() {
    prune();
    for (;;) {
      matchIdentical();
      if (!splitOnce()) break;
    }
  }
};

Poly expandPieces(const std::vector<FactorPower>& parts) {
  Poly r(1);
  for (const auto& fp : parts) r *= fp.factor.poly.pow(static_cast<unsigned>(fp.power));
  return r;
}

// Least common multiple on the level of recorded factors.
std::vector<FactorPower> unionMax(std::span<const RationalFunction> terms) {
  std::vector<FactorPower> out;
  for (const auto& t : terms) {
    for (const auto& fp : t.denominatorFactors().parts) {
      auto it = std::find_if(out.begin(), out.end(), [&](const FactorPower& o) { return o.factor == fp.factor; });
      if (it == out.end()) {
        out.push_back(fp);
      } else {
        it->power = std::max(it->power, fp.power);
        it->factor.irreducible = it->factor.irreducible || fp.factor.irreducible;
      }
    }
  }
  return out;
}

std::vector<FactorPower> cofactor(const std::vector<FactorPower>& total, const std::vector<FactorPower>& part) {
  std::vector<FactorPower> out;
  for (const auto& fp : total) {
    int have = 0;
    for (const auto& pp : part)
      if (pp.factor == fp.factor) have = pp.power;
    if (fp.power > have) out.push_back({fp.factor, fp.power - have});
  }
  return out;
}

RationalFunction build(Work w) {
  w.cancel();
  Factorization num, den;
  num.scalar = w.scalar;
  num.shift = w.shift;
  for (auto& p : w.num) num.parts.push_back({std::move(p.factor), p.power});
  for (auto& p : w.den) den.parts.push_back({std::move(p.factor), p.power});
  auto byPoly = [](const FactorPower& a, const FactorPower& b) {
    const auto& ta = a.factor.poly.terms();
    const auto& tb = b.factor.poly.terms();
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      return x.second < y.second;
    });
  };
  std::sort(num.parts.begin(), num.parts.end(), byPoly);
  std::sort(den.parts.begin(), den.parts.end(), byPoly);
  return RationalFunction::fromFactorizations(std::move(num), std::move(den));
}

}  // namespace

RationalFunction::RationalFunction() : num_(), den_(Poly(1)) { numFac_.scalar = 0; }

RationalFunction::RationalFunction(const Rational& c) : RationalFunction(Poly(c)) {}

RationalFunction::RationalFunction(long c) : RationalFunction(Rational(c)) {}

RationalFunction::RationalFunction(const Poly& p) {
  numFac_ = classify(p);
  finish();
}

RationalFunction::RationalFunction(const Poly& num, const Poly& den) {
  if (den.isZero()) throw DivisionByZero("zero denominator");
  Work w;
  w.absorbNum(classify(num), 1, -1);
  if (sgn(w.scalar) == 0) {
    *this = RationalFunction();
    return;
  }
  w.absorbDen(classify(den), 1, -1);
  *this = build(std::move(w));
}

RationalFunction RationalFunction::variable(Var v, int power) { return monomial(Exponent::unit(v, power)); }

RationalFunction RationalFunction::monomial(const Exponent& e, const Rational& c) {
  return RationalFunction(Poly::monomial(e, c));
}

RationalFunction RationalFunction::fromFactorizations(Factorization num, Factorization den) {
  RationalFunction r;
  if (num.isZero()) return r;
  if (den.isZero()) throw DivisionByZero("zero denominator");
  num.scalar /= den.scalar;
  num.shift = num.shift - den.shift;
  den.scalar = 1;
  den.shift = Exponent{};
  r.numFac_ = std::move(num);
  r.denFac_ = std::move(den);
  r.finish();
  return r;
}

void RationalFunction::finish() {
  if (numFac_.isZero()) {
    numFac_ = Factorization{};
    numFac_.scalar = 0;
    denFac_ = Factorization{};
    num_ = Poly{};
    den_ = Poly(1);
    return;
  }
  Poly d = denFac_.expand();
  const Rational lead = d.leading().second;
  num_ = numFac_.expand().scaled(Rational(1) / lead);
  den_ = d.scaled(Rational(1) / lead);
}

Rational RationalFunction::constantValue() const {
  if (!isConstant()) throw std::logic_error("rational function is not constant");
  return num_.isZero() ? Rational(0) : Rational(num_.constantValue() / den_.constantValue());
}

std::optional<std::pair<Rational, Exponent>> RationalFunction::asMonomial() const {
  if (!den_.isConstant() || num_.size() != 1) return std::nullopt;
  return std::make_pair(Rational(num_.leading().second / den_.constantValue()), num_.leading().first);
}

std::vector<Var> RationalFunction::variables() const {
  auto a = num_.variables();
  for (Var v : den_.variables())
    if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
  std::sort(a.begin(), a.end());
  return a;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.numFac_.scalar = -r.numFac_.scalar;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero() || b.isZero()) return {};
  Work w;
  w.absorbNum(a.numFac_, 1, 0);
  w.absorbNum(b.numFac_, 1, 1);
  w.absorbDen(a.denFac_, 1, 0);
  w.absorbDen(b.denFac_, 1, 1);
  return build(std::move(w));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.isZero()) throw DivisionByZero("division by the zero function");
  if (a.isZero()) return {};
  Work w;
  w.absorbNum(a.numFac_, 1, 0);
  w.absorbDen(b.numFac_, 1, 1);
  w.absorbDen(a.denFac_, 1, 0);
  w.absorbNum(b.denFac_, 1, 1);
  return build(std::move(w));
}

RationalFunction RationalFunction::sum(std::span<const RationalFunction> terms) {
  std::vector<RationalFunction> nz;
  for (const auto& t : terms)
    if (!t.isZero()) nz.push_back(t);
  if (nz.empty()) return {};
  if (nz.size() == 1) return nz.front();
  const auto total = unionMax(nz);
  Poly n;
  for (const auto& t : nz) n += t.numFac_.expand() * expandPieces(cofactor(total, t.denFac_.parts));
  if (n.isZero()) return {};
  Work w;
  w.absorbNum(classify(n), 1, -1);
  for (const auto& fp : total) w.add(w.den, fp.factor, fp.power, -1);
  return build(std::move(w));
}

RationalFunction RationalFunction::product(std::span<const RationalFunction> terms) {
  RationalFunction r(1);
  for (const auto& t : terms) r *= t;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  const RationalFunction both[2] = {a, b};
  return RationalFunction::sum(both);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction RationalFunction::inverse() const {
  if (isZero()) throw DivisionByZero("inverse of the zero function");
  Factorization n = denFac_;
  Factorization d = numFac_;
  return fromFactorizations(std::move(n), std::move(d));
}

RationalFunction RationalFunction::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return RationalFunction(1);
  if (isZero()) return {};
  Factorization num, den;
  num.absorb(numFac_, static_cast<int>(n));
  den.absorb(denFac_, static_cast<int>(n));
  return fromFactorizations(std::move(num), std::move(den));
}

RationalFunction arith(const RationalFunction& a, const RationalFunction& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
    case ArithKind::div:
      return a / b;
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

namespace {

std::optional<std::pair<Rational, Exponent>> monomialImage(const Exponent& e, const Substitution& images) {
  Rational c(1);
  Exponent out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const int k = e[i];
    if (k == 0) continue;
    const auto it = images.find(static_cast<Var>(i));
    if (it == images.end()) {
      out = out + Exponent::unit(static_cast<Var>(i), k);
      continue;
    }
    auto m = it->second.asMonomial();
    if (!m) return std::nullopt;
    if (sgn(m->first) == 0 && k < 0) throw PoleError("negative power of a variable sent to zero");
    c *= powRational(m->first, k);
    out = out + m->second.scaled(k);
  }
  return std::make_pair(c, out);
}

Poly mapPoly(const Poly& p, const Substitution& images) {
  std::vector<Poly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    auto m = monomialImage(e, images);
    terms.emplace_back(m->second, c * m->first);
  }
  return Poly::fromTerms(std::move(terms));
}

RationalFunction mapGeneral(const Poly& p, const Substitution& images) {
  std::vector<RationalFunction> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    RationalFunction t(c);
    Exponent rest;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      const auto it = images.find(static_cast<Var>(i));
      if (it == images.end()) {
        rest = rest + Exponent::unit(static_cast<Var>(i), k);
      } else {
        if (it->second.isZero() && k < 0) throw PoleError("negative power of a variable sent to zero");
        t *= it->second.pow(k);
      }
    }
    if (!rest.isZero()) t *= RationalFunction::monomial(rest);
    terms.push_back(std::move(t));
  }
  return RationalFunction::sum(terms);
}

}  // namespace

RationalFunction substitute(const RationalFunction& f, const Substitution& images) {
  if (f.isZero()) return f;
  const auto& nf = f.numeratorFactors();
  const auto& df = f.denominatorFactors();
  const bool monomialImages =
      std::all_of(images.begin(), images.end(), [](const auto& kv) { return kv.second.asMonomial().has_value(); });
  if (monomialImages) {
    Factorization num, den;
    const auto head = monomialImage(nf.shift, images);
    num.scalar = nf.scalar * head->first;
    num.shift = head->second;
    for (const auto& fp : df.parts) {
      const Poly q = mapPoly(fp.factor.poly, images);
      if (q.isZero()) throw PoleError("denominator vanishes under substitution");
      den.absorb(classify(q), fp.power);
    }
    for (const auto& fp : nf.parts) {
      const Poly q = mapPoly(fp.factor.poly, images);
      if (q.isZero()) return {};
      num.absorb(classify(q), fp.power);
    }
    Work w;
    w.absorbNum(num, 1, -1);
    w.absorbDen(den, 1, -1);
    return build(std::move(w));
  }
  RationalFunction d(1);
  for (const auto& fp : df.parts) {
    const RationalFunction q = mapGeneral(fp.factor.poly, images);
    if (q.isZero()) throw PoleError("denominator vanishes under substitution");
    d *= q.pow(fp.power);
  }
  RationalFunction n = mapGeneral(Poly::monomial(nf.shift, nf.scalar), images);
  for (const auto& fp : nf.parts) n *= mapGeneral(fp.factor.poly, images).pow(fp.power);
  return n / d;
}

}  // namespace gz
