#include "gz/check/properties.hpp"

#include <chrono>
#include <random>
#include <set>

#include "gz/algebra/evaluate.hpp"
#include "gz/oracle/whittaker.hpp"
#include "gz/params/weyl.hpp"

namespace gz {
namespace {

constexpr std::array<Var, 4> kVars{Var::q, Var::alpha, Var::beta, Var::a1};

template <class F>
VerificationReport timedCheck(std::string id, std::string anchor, F&& run) {
  VerificationReport r;
  r.id = std::move(id);
  r.method = "property";
  r.anchor = std::move(anchor);
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string failures = run();
    r.status = failures.empty() ? Status::verified : Status::failed;
    r.witness = failures.empty() ? "no counterexample" : failures.substr(0, 400);
  } catch (const std::exception& e) {
    r.status = Status::failed;
    r.witness = std::string("error: ") + e.what();
  }
  r.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational nonzeroRational() {
    int n = 0;
    while (n == 0) n = integer(-20, 20);
    return Rational(n) / integer(1, 7);
  }

  RationalFunction polynomial() {
    RationalFunction f;
    const int terms = integer(1, 3);
    for (int t = 0; t < terms; ++t) {
      RationalFunction m(Rational(integer(1, 5) * (integer(0, 1) ? 1 : -1)));
      for (Var v : kVars) m *= RationalFunction::variable(v, integer(0, 2));
      f += m;
    }
    return f.isZero() ? RationalFunction(Rational(1)) : f;
  }

  RationalFunction function() {
    RationalFunction f = polynomial();
    if (integer(0, 1)) f *= polynomial();
    return f / polynomial();
  }

  RationalPoint point() {
    RationalPoint pt;
    for (Var v : kVars) pt[v] = nonzeroRational();
    return pt;
  }

 private:
  std::mt19937_64 rng_;
};

// A second function built from f along a route that may or may not preserve it.
RationalFunction sibling(const RationalFunction& f, RandomSource& rs) {
  const RationalFunction h = rs.polynomial();
  switch (rs.integer(0, 5)) {
    case 0: return (f * h) / h;
    case 1: return (f + h) - h;
    case 2: return f.isZero() ? f : f.inverse().inverse();
    case 3: return substitute(f, {{Var::alpha, RationalFunction::variable(Var::beta)},
                                  {Var::beta, RationalFunction::variable(Var::alpha)}});
    case 4: return f + RationalFunction::monomial(Exponent::unit(Var::q, rs.integer(-1, 2)), rs.nonzeroRational());
    default: return f * h / rs.polynomial();
  }
}

// true when f and g agree at `points` pole-free random points
bool agreeAtPoints(const RationalFunction& f, const RationalFunction& g, int points, RandomSource& rs) {
  int used = 0;
  for (int attempt = 0; used < points && attempt < 50 * points; ++attempt) {
    const RationalPoint pt = rs.point();
    Rational a, b;
    try {
      a = evaluate(f, pt);
      b = evaluate(g, pt);
    } catch (const PoleError&) {
      continue;
    }
    if (a != b) return false;
    ++used;
  }
  if (used < points) throw std::runtime_error("too many poles among random points");
  return true;
}

}  // namespace

VerificationReport canonicalFormCheck(std::uint64_t seed, int trials, int points) {
  return timedCheck("property-canonical-form", "canonical form soundness", [&] {
    RandomSource rs(seed);
    std::string failures;
    int equalPairs = 0;
    for (int t = 0; t < trials; ++t) {
      const RationalFunction f = rs.function();
      const RationalFunction g = sibling(f, rs);
      const bool symbolic = f == g;
      equalPairs += symbolic;
      if (symbolic != agreeAtPoints(f, g, points, rs))
        failures += "trial " + std::to_string(t) + ": " + toString(f) + " vs " + toString(g) + "; ";
    }
    if (equalPairs == 0 || equalPairs == trials) failures += "degenerate sample: " + std::to_string(equalPairs) + " equal pairs";
    return failures;
  });
}

VerificationReport weylClosureCheck() {
  return timedCheck("property-weyl-closure", "Weyl group table", [] {
    const auto& group = weylGroupGSp4();
    std::string failures;
    std::set<std::string> labels;
    for (const auto& w : group) labels.insert(w.label());
    if (labels.size() != 8) failures += "group has " + std::to_string(labels.size()) + " distinct elements; ";
    if (!group.front().isIdentity()) failures += "first element is not the identity; ";
    const RationalFunction probe = RationalFunction::variable(Var::alpha, 2) * RationalFunction::variable(Var::beta, 5) *
                                   RationalFunction::variable(Var::a1) * RationalFunction::variable(Var::q, -1);
    const RationalFunction central = paramExpr(Param::alpha) * paramExpr(Param::delta);
    for (const auto& w : group) {
      if (!labels.contains(w.inverse().label()) || !(w * w.inverse()).isIdentity())
        failures += "inverse of " + w.label() + "; ";
      for (Param x : kParams) {
        if (w(partner(x)) != partner(w(x))) failures += w.label() + " breaks the partner involution; ";
        if (applyWeyl(w, paramExpr(x)) != paramExpr(w(x))) failures += w.label() + " substitution mismatch; ";
      }
      if (applyWeyl(w, central) != central) failures += w.label() + " moves alpha delta; ";
      for (const auto& v : group) {
        const WeylElement wv = w * v;
        if (!labels.contains(wv.label())) failures += w.label() + "*" + v.label() + " leaves the group; ";
        if (applyWeyl(wv, probe) != applyWeyl(w, applyWeyl(v, probe)))
          failures += w.label() + "*" + v.label() + " is not an action; ";
      }
    }
    const auto& triples = weylTriples();
    std::set<std::string> tripleLabels;
    for (const auto& t : triples) tripleLabels.insert(t.label());
    if (tripleLabels.size() != 32) failures += "triples: " + std::to_string(tripleLabels.size()) + " distinct; ";
    const RationalFunction probe2 = probe * RationalFunction::variable(Var::a2, 3) * RationalFunction::variable(Var::b1);
    const RationalFunction orbitSum = weylSum(triples, probe2);
    for (const auto& t : triples)
      if (applyWeyl(t, orbitSum) != orbitSum) failures += "orbit sum not fixed by " + t.label() + "; ";
    return failures;
  });
}

VerificationReport characterSumCheck(std::uint64_t seed) {
  return timedCheck("property-character-sums", "additive character", [&] {
    std::mt19937_64 rng(seed);
    std::string failures;
    for (unsigned long p : {2UL, 3UL, 5UL}) {
      const std::string tag = "p=" + std::to_string(p);
      for (int n = 1; n <= 3; ++n) {
        long pn = 1;
        for (int i = 0; i < n; ++i) pn *= static_cast<long>(p);
        // sum over x mod p^n of e(a x / p^n) is p^n when p^n | a and 0 otherwise
        for (long a = 0; a <= pn; ++a) {
          CyclotomicNumber sum;
          for (long x = 0; x < pn; ++x) sum += additiveCharacter(Rational(a * x) / pn, p);
          const CyclotomicNumber expected = a % pn == 0 ? CyclotomicNumber(pn) : CyclotomicNumber(0);
          if (!(sum == expected)) failures += tag + " orthogonality a=" + std::to_string(a) + "; ";
        }
        std::uniform_int_distribution<long> pick(-5 * pn, 5 * pn);
        for (int t = 0; t < 20; ++t) {
          const Rational x = Rational(pick(rng)) / pn, y = Rational(pick(rng)) / (pn * static_cast<long>(p));
          if (!(additiveCharacter(x + y, p) == additiveCharacter(x, p) * additiveCharacter(y, p)))
            failures += tag + " additivity; ";
          if (!(additiveCharacter(x * pn, p) == CyclotomicNumber(1))) failures += tag + " integral value; ";
          // prime-to-p denominators are units
          if (!(padicCharacter(x + Rational(pick(rng)) / 7, p) == additiveCharacter(x, p)))
            failures += tag + " unit shift; ";
        }
      }
      if (additiveCharacter(Rational(1) / p, p) == CyclotomicNumber(1)) failures += tag + " trivial on p^-1; ";
      try {
        (void)additiveCharacter(Rational(1) / (p == 2 ? 3 : 2), p);
        failures += tag + " accepted a prime-to-p denominator; ";
      } catch (const std::invalid_argument&) {
      }
    }
    return failures;
  });
}

std::vector<VerificationReport> propertyChecks(std::uint64_t seed, int trials) {
  return {canonicalFormCheck(seed, trials), weylClosureCheck(), characterSumCheck(seed)};
}

}  // namespace gz
