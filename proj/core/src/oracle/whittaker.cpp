#include "gz/oracle/whittaker.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gz/oracle/decompose.hpp"
#include "gz/util/parallel.hpp"

namespace gz {
namespace {

RationalFunction var(Var v, long power = 1) { return RationalFunction::variable(v, power); }

RationalFunction pPowerRF(unsigned long p, long k) {
  Rational r = 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r *= p;
  return RationalFunction(k < 0 ? Rational(1) / r : r);
}

// Lattice coordinates of the Hecke parameters: alpha, beta, gamma, delta
// correspond to (1,0), (0,1), (0,-1), (-1,0) modulo the centre.
std::array<int, 2> latticeVector(Param x) {
  switch (x) {
    case Param::alpha: return {1, 0};
    case Param::beta: return {0, 1};
    case Param::gamma: return {0, -1};
    case Param::delta: return {-1, 0};
  }
  return {0, 0};
}

int weylSign(const WeylElement& w) {
  const auto a = latticeVector(w(Param::alpha));
  const auto b = latticeVector(w(Param::beta));
  return a[0] * b[1] - a[1] * b[0];
}

RationalFunction alternant(long i, long j, unsigned long p) {
  std::vector<RationalFunction> terms;
  for (const WeylElement& w : weylGroupGSp4()) {
    RationalFunction t = oracleParam(w(Param::alpha), p).pow(i) * oracleParam(w(Param::beta), p).pow(j);
    terms.push_back(weylSign(w) > 0 ? t : -t);
  }
  return RationalFunction::sum(terms);
}

// Weyl character of the highest weight alpha^(m+n) beta^n.
RationalFunction weylCharacter(int m, int n, unsigned long p) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, unsigned long>, RationalFunction> cache;
  const auto key = std::make_tuple(m, n, p);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  RationalFunction value = alternant(m + n + 2, n + 1, p) / alternant(2, 1, p);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

class Spherical final : public WhittakerExpression {
 public:
  Spherical(Group g, unsigned long p, int factor) : WhittakerExpression(g, p), factor_(factor) {}
  CycloFunction operator()(const Matrix& x) const override {
    return sphericalAt(x);
  }
  CycloFunction sphericalAt(const Matrix& x) const {
    const IwahoriCell cell = iwahoriCell(x, prime());
    RationalFunction v = group() == Group::GL2
                             ? gl2TorusValue(cell.torus[0], cell.torus[1], prime(), factor_)
                             : gsp4TorusValue({cell.torus[0], cell.torus[1], cell.torus[2], cell.torus[3]}, prime());
    if (v.isZero()) return CycloFunction();
    return v * CycloFunction(padicCharacter(cell.psiArgument, prime()));
  }

 private:
  int factor_;
};

class Translate final : public WhittakerExpression {
 public:
  Translate(Whittaker f, const PGroupElement& g)
      : WhittakerExpression(f->group(), f->prime()), f_(std::move(f)), g_(g.matrix()) {}
  CycloFunction operator()(const Matrix& x) const override { return (*f_)(x * g_); }

 private:
  Whittaker f_;
  Matrix g_;
};

class HeckeSum final : public WhittakerExpression {
 public:
  HeckeSum(Whittaker f, std::vector<PGroupElement> reps, RationalFunction scale)
      : WhittakerExpression(f->group(), f->prime()), f_(std::move(f)), scale_(std::move(scale)) {
    for (const auto& r : reps) reps_.push_back(r.matrix());
  }
  CycloFunction operator()(const Matrix& x) const override {
    std::vector<CycloFunction> terms(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) terms[i] = (*f_)(x * reps_[i]);
    return scale_ * CycloFunction::sum(terms);
  }

 private:
  Whittaker f_;
  std::vector<Matrix> reps_;
  RationalFunction scale_;
};

class Combination final : public WhittakerExpression {
 public:
  explicit Combination(std::vector<std::pair<RationalFunction, Whittaker>> terms)
      : WhittakerExpression(terms.at(0).second->group(), terms.at(0).second->prime()), terms_(std::move(terms)) {}
  CycloFunction operator()(const Matrix& x) const override {
    std::vector<CycloFunction> values;
    values.reserve(terms_.size());
    for (const auto& [c, f] : terms_)
      if (!c.isZero()) values.push_back(c * (*f)(x));
    return CycloFunction::sum(values);
  }

 private:
  std::vector<std::pair<RationalFunction, Whittaker>> terms_;
};

class Substituted final : public WhittakerExpression {
 public:
  Substituted(Whittaker f, Substitution s)
      : WhittakerExpression(f->group(), f->prime()), f_(std::move(f)), s_(std::move(s)) {}
  CycloFunction operator()(const Matrix& x) const override { return (*f_)(x).substituted(s_); }

 private:
  Whittaker f_;
  Substitution s_;
};

class IwahoriCached final : public WhittakerExpression {
 public:
  explicit IwahoriCached(Whittaker f) : WhittakerExpression(f->group(), f->prime()), f_(std::move(f)) {
    for (const PGroupElement& w : weylRepresentatives(group(), prime())) weyl_.push_back(w.matrix());
  }
  CycloFunction operator()(const Matrix& x) const override {
    const IwahoriCell cell = iwahoriCell(x, prime());
    const Key key{cell.torus, cell.perm};
    std::optional<CycloFunction> value;
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) value = it->second;
    }
    if (!value) {
      value = (*f_)(representative(cell));
      std::lock_guard lock(mutex_);
      cache_.emplace(key, *value);
    }
    if (value->isZero()) return *value;
    return CycloFunction(padicCharacter(cell.psiArgument, prime())) * *value;
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<std::size_t>>;

  Matrix representative(const IwahoriCell& cell) const {
    const std::size_t n = cell.perm.size();
    std::vector<Rational> d;
    for (int e : cell.torus) d.push_back(pPowerRF(prime(), e).asMonomial()->first);
    for (const Matrix& w : weyl_) {
      bool match = true;
      for (std::size_t r = 0; r < n && match; ++r) match = sgn(w(r, cell.perm[r])) != 0;
      if (match) return Matrix::diagonal(d) * w;
    }
    throw std::logic_error("Iwahori cell without a Weyl representative");
  }

  Whittaker f_;
  std::vector<Matrix> weyl_;
  mutable std::mutex mutex_;
  mutable std::map<Key, CycloFunction> cache_;
};

}  // namespace

CyclotomicNumber padicCharacter(const Rational& x, unsigned long p) {
  const int v = valuation(x, p);
  if (v >= 0) return CyclotomicNumber(1);
  const unsigned level = static_cast<unsigned>(-v);
  Rational scaled = x;
  for (unsigned i = 0; i < level; ++i) scaled *= p;
  const Integer k = residue(scaled, p, static_cast<int>(level));
  return CyclotomicNumber::rootOfUnity(p, level, k.get_si());
}

CyclotomicNumber additiveCharacter(const Rational& x, unsigned long p) {
  Integer d = x.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= p;
  if (d != 1) throw std::invalid_argument("denominator of " + x.get_str() + " is not a power of " + std::to_string(p));
  return padicCharacter(x, p);
}

RationalFunction oracleGamma(unsigned long p) { return pPowerRF(p, 3) * var(Var::c) / var(Var::beta); }
RationalFunction oracleDelta(unsigned long p) { return pPowerRF(p, 3) * var(Var::c) / var(Var::alpha); }

RationalFunction oracleParam(Param param, unsigned long p) {
  switch (param) {
    case Param::alpha: return var(Var::alpha);
    case Param::beta: return var(Var::beta);
    case Param::gamma: return oracleGamma(p);
    case Param::delta: return oracleDelta(p);
  }
  throw std::logic_error("unknown parameter");
}

Substitution oracleWeyl(const WeylElement& w, unsigned long p) {
  return {{Var::alpha, oracleParam(w(Param::alpha), p)}, {Var::beta, oracleParam(w(Param::beta), p)}};
}

RationalFunction gl2TorusValue(int k1, int k2, unsigned long p, int factor) {
  const int k = k1 - k2;
  if (k < 0) return RationalFunction(0);
  const RationalFunction a = var(factor == 1 ? Var::a1 : Var::a2);
  const RationalFunction b = var(factor == 1 ? Var::b1 : Var::b2);
  const RationalFunction q = pPowerRF(p, 1);
  return (a * b / q).pow(k2) * (a.pow(k + 1) - b.pow(k + 1)) / (q.pow(k) * (a - b));
}

// W(t_{m,n}) = q^-(3m+5n) times the Weyl character, with the centre acting by c.
RationalFunction gsp4TorusValue(const std::array<int, 4>& e, unsigned long p) {
  if (e[0] + e[3] != e[1] + e[2]) throw std::invalid_argument("not a symplectic torus element");
  const int m = e[1] - e[2];
  const int n = e[2] - e[3];
  if (m < 0 || n < 0) return RationalFunction(0);
  return var(Var::c, e[3]) * pPowerRF(p, -(3L * m + 5L * n)) * weylCharacter(m, n, p);
}

CycloFunction sphericalWhittakerValue(const PGroupElement& g, int gl2Factor) {
  return Spherical(g.group(), g.prime(), gl2Factor).sphericalAt(g.matrix());
}

Whittaker sphericalWhittaker(Group group, unsigned long p, int gl2Factor) {
  return std::make_shared<Spherical>(group, p, gl2Factor);
}

Whittaker translate(Whittaker f, const PGroupElement& g) { return std::make_shared<Translate>(std::move(f), g); }

Whittaker heckeSum(Whittaker f, std::vector<PGroupElement> reps, RationalFunction scale) {
  return std::make_shared<HeckeSum>(std::move(f), std::move(reps), std::move(scale));
}

Whittaker linearCombination(std::vector<std::pair<RationalFunction, Whittaker>> terms) {
  return std::make_shared<Combination>(std::move(terms));
}

Whittaker substituted(Whittaker f, Substitution s) { return std::make_shared<Substituted>(std::move(f), std::move(s)); }

Whittaker iwahoriCached(Whittaker f) { return std::make_shared<IwahoriCached>(std::move(f)); }

CycloFunction evaluate(const Whittaker& f, const PGroupElement& g) { return (*f)(g.matrix()); }

}  // namespace gz
