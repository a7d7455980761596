#include "gz/oracle/verify.hpp"

#include <chrono>
#include <algorithm>
#include <functional>
#include <set>

#include "gz/algebra/io.hpp"
#include "gz/oracle/eigen.hpp"
#include "gz/params/weyl.hpp"
#include "gz/util/parallel.hpp"

namespace gz {
namespace {

RationalFunction var(Var v) { return RationalFunction::variable(v); }

struct Outcome {
  bool ok;
  std::string witness;
};

struct Check {
  std::string id;
  std::string anchor;
  std::function<Outcome()> run;
};

Outcome agree(const Whittaker& f, const Whittaker& g, const std::vector<Matrix>& points) {
  for (const Matrix& x : points) {
    const CycloFunction a = (*f)(x), b = (*g)(x);
    if (!(a == b)) return {false, "at " + x.toString() + ": " + a.toString() + " vs " + b.toString()};
  }
  return {true, std::to_string(points.size()) + " points"};
}

Outcome equalValue(const CycloFunction& a, const CycloFunction& b) {
  if (a == b) return {true, a.toString()};
  return {false, a.toString() + " vs " + b.toString()};
}

Whittaker scaled(const RationalFunction& c, Whittaker f) { return linearCombination({{c, std::move(f)}}); }

Whittaker difference(Whittaker f, Whittaker g) {
  return linearCombination({{RationalFunction(1), std::move(f)}, {RationalFunction(-1), std::move(g)}});
}

// f is an eigenvector of the operator with the given eigenvalue.
Outcome eigen(const Whittaker& f, const CosetSystem& op, const RationalFunction& lambda,
              const std::vector<Matrix>& points) {
  return agree(heckeTranslate(op, f), scaled(lambda, f), points);
}

std::vector<Matrix> torusPoints(unsigned long p) {
  std::vector<Matrix> out;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}})
    out.push_back(tElement(m, n, p).matrix());
  return out;
}

// Points separating Iw(p^2)-invariant GL2 functions.
std::vector<Matrix> deepGl2Points(unsigned long p) {
  std::vector<Matrix> out;
  for (const Matrix& x : iwahoriSamplePoints(Group::GL2, p, -1, 3))
    for (unsigned long u = 0; u < p; ++u)
      out.push_back(x * rootElement(Group::GL2, 1, 0, Rational(static_cast<long>(u * p)), p).matrix());
  return out;
}

std::vector<Check> buildChecks(unsigned long p) {
  const RationalFunction q(static_cast<long>(p));
  const RationalFunction alpha = var(Var::alpha), beta = var(Var::beta);
  const RationalFunction gamma = oracleGamma(p), delta = oracleDelta(p);
  const RationalFunction a = var(Var::a1), b = var(Var::b1);
  const Group G = Group::GSp4;
  const auto identity = PGroupElement::identity(G, p);
  const auto oneGl2 = PGroupElement::identity(Group::GL2, p);

  const Whittaker w0 = iwahoriCached(sphericalWhittaker(G, p));
  const Whittaker sph = sphericalWhittaker(Group::GL2, p);
  const auto wa = [p] { return buildEigenvector({.kind = EigenKind::gl2}, p); };
  const auto wb = [p] { return buildEigenvector({.kind = EigenKind::gl2, .swapGl2 = true}, p); };
  const auto wa1 = [p] { return buildEigenvector({.kind = EigenKind::gl2Dual, .n = 1}, p); };
  const auto wb1 = [p] { return buildEigenvector({.kind = EigenKind::gl2Dual, .n = 1, .swapGl2 = true}, p); };
  const auto wa2 = [p] { return buildEigenvector({.kind = EigenKind::gl2Dual, .n = 2}, p); };
  const auto wIw = [p] { return buildEigenvector({.kind = EigenKind::iwahori}, p); };
  const auto wSi = [p] { return buildEigenvector({.kind = EigenKind::siegel}, p); };
  const auto wKl = [p] { return buildEigenvector({.kind = EigenKind::klingen}, p); };
  const auto wKlDual = [p] { return buildEigenvector({.kind = EigenKind::klingenDual}, p); };
  const auto wIwDual = [p] { return buildEigenvector({.kind = EigenKind::iwahoriDual}, p); };

  const Level iw = iwahoriLevel(G, 1);
  const Level iwGl2 = iwahoriLevel(Group::GL2, 1);
  const Level iw2Gl2 = iwahoriLevel(Group::GL2, 2);
  const auto gl2Points = iwahoriSamplePoints(Group::GL2, p, -1, 3);
  const auto gl2Deep = deepGl2Points(p);
  const auto points = iwahoriSamplePoints(G, p, -1, 2);
  const auto torus = torusPoints(p);

  std::vector<Check> checks;
  auto add = [&](std::string id, std::string anchor, std::function<Outcome()> run) {
    checks.push_back({std::move(id), std::move(anchor), std::move(run)});
  };

  // GL2
  add("gl2-normalization", "GL2 Iwahori eigenvector normalization",
      [=] { return equalValue(evaluate(wa(), oneGl2), CycloFunction(1)); });
  add("gl2-u-eigen", "GL2 U eigenvalue", [=] { return eigen(wa(), enumerateCosets("U", iwGl2, p), a, gl2Points); });
  add("gl2-hecke-form", "GL2 eigenvector via U", [=] {
    const auto u = heckeTranslate(enumerateCosets("U", iwGl2, p), sph);
    return agree(wa(), scaled(RationalFunction(1) / a, difference(u, scaled(b, sph))), gl2Points);
  });
  add("gl2-dual-value", "GL2 dual eigenvector at the identity",
      [=] { return equalValue(evaluate(wa1(), oneGl2), CycloFunction(-b / a)); });
  add("gl2-dual-hecke-form", "GL2 dual eigenvector via U'", [=] {
    const auto u = heckeTranslate(enumerateCosets("U'", iwGl2, p), sph);
    return agree(wa1(), scaled(RationalFunction(1) / a, difference(u, scaled(b, sph))), gl2Points);
  });
  add("gl2-dual-eigen-1", "GL2 U' eigenvalue, depth 1",
      [=] { return eigen(wa1(), enumerateCosets("U'", iwGl2, p), a, gl2Points); });
  add("gl2-dual-eigen-2", "GL2 U' eigenvalue, depth 2",
      [=] { return eigen(wa2(), enumerateCosets("U'", iw2Gl2, p), a, gl2Deep); });
  add("gl2-spherical-split", "GL2 spherical vector from eigenvectors", [=] {
    const auto sum = linearCombination({{RationalFunction(1) / (RationalFunction(1) - b / a), wa()},
                                        {RationalFunction(1) / (RationalFunction(1) - a / b), wb()}});
    const auto sumDual = linearCombination({{RationalFunction(1) / (RationalFunction(1) - b / a), wa1()},
                                            {RationalFunction(1) / (RationalFunction(1) - a / b), wb1()}});
    const Outcome first = agree(sum, sph, gl2Points);
    return first.ok ? agree(sumDual, sph, gl2Points) : first;
  });
  add("gl2-trace-compatibility", "GL2 normalised trace of dual eigenvectors", [=] {
    const auto trace = heckeTranslate(enumerateCosets("traceIw", iw2Gl2, p), wa2(), RationalFunction(1) / q);
    return agree(trace, wa1(), gl2Deep);
  });

  // Spherical GSp4 values
  add("spherical-identity", "spherical Whittaker normalization",
      [=] { return equalValue(evaluate(w0, identity), CycloFunction(1)); });
  add("spherical-weyl-symmetry", "spherical torus values are Weyl invariant", [=]() -> Outcome {
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        const CycloFunction v = evaluate(w0, tElement(m, n, p));
        for (const WeylElement& w : weylGroupGSp4())
          if (!(v.substituted(oracleWeyl(w, p)) == v))
            return {false, "t(" + std::to_string(m) + "," + std::to_string(n) + ") under " + w.label()};
      }
    return {true, "9 torus points, 8 Weyl elements"};
  });
  add("spherical-hecke", "spherical Hecke eigenvalue", [=] {
    return eigen(w0, enumerateCosets("T10", maximalLevel(G), p), alpha + beta + gamma + delta, torus);
  });
  add("spherical-u1-spectrum", "U1 eigenvalues at Iwahori level", [=] {
    const auto u1 = enumerateCosets("U1", iw, p);
    Whittaker f = w0;
    for (const auto& lambda : {alpha, beta, gamma, delta})
      f = iwahoriCached(difference(heckeTranslate(u1, f), scaled(lambda, f)));
    return agree(f, scaled(RationalFunction(0), w0), points);
  });

  // GSp4 eigenvectors
  add("iwahori-normalization", "Iwahori eigenvector normalization",
      [=] { return equalValue(evaluate(wIw(), identity), CycloFunction(1)); });
  add("siegel-normalization", "Siegel eigenvector normalization",
      [=] { return equalValue(evaluate(wSi(), identity), CycloFunction(1)); });
  add("klingen-normalization", "Klingen eigenvector normalization",
      [=] { return equalValue(evaluate(wKl(), identity), CycloFunction(1)); });
  add("iwahori-u1-eigen", "Iwahori eigenvector, U1", [=] { return eigen(wIw(), enumerateCosets("U1", iw, p), alpha, points); });
  add("iwahori-u2-eigen", "Iwahori eigenvector, U2",
      [=] { return eigen(wIw(), enumerateCosets("U2", iw, p), alpha * beta / q, points); });
  add("siegel-u1-eigen", "Siegel eigenvector, U1",
      [=] { return eigen(wSi(), enumerateCosets("U1", siegelLevel(1), p), alpha, points); });
  add("klingen-u2-eigen", "Klingen eigenvector, U2",
      [=] { return eigen(wKl(), enumerateCosets("U2", klingenLevel(1), p), alpha * beta / q, points); });
  add("klingen-dual-u2-eigen", "dual Klingen eigenvector, U2'",
      [=] { return eigen(wKlDual(), enumerateCosets("U2'", klingenLevel(1), p), alpha * beta / q, points); });
  add("iwahori-dual-u1-eigen", "dual Iwahori eigenvector, U1'",
      [=] { return eigen(wIwDual(), enumerateCosets("U1'", iw, p), alpha, points); });
  add("iwahori-dual-u2-eigen", "dual Iwahori eigenvector, U2'",
      [=] { return eigen(wIwDual(), enumerateCosets("U2'", iw, p), alpha * beta / q, points); });
  add("siegel-display", "Siegel eigenvector, both displays", [=] {
    const auto wAg = buildEigenvector({.kind = EigenKind::iwahori, .ordering = "ag"}, p);
    const auto rhs = linearCombination({{RationalFunction(1) / (RationalFunction(1) - gamma / beta), wIw()},
                                        {RationalFunction(1) / (RationalFunction(1) - beta / gamma), wAg}});
    return agree(wSi(), rhs, points);
  });
  add("klingen-display", "Klingen eigenvector, both displays", [=] {
    const auto wBa = buildEigenvector({.kind = EigenKind::iwahori, .ordering = "ba"}, p);
    const auto rhs = linearCombination({{RationalFunction(1) / (RationalFunction(1) - beta / alpha), wIw()},
                                        {RationalFunction(1) / (RationalFunction(1) - alpha / beta), wBa}});
    return agree(wKl(), rhs, points);
  });
  add("klingen-iwahori-level", "Klingen eigenvector via U2 at Iwahori level", [=] {
    const CyclicSpace space(w0, enumerateCosets("U2", iw, p));
    auto v = space.generator();
    for (const auto& c : {alpha * gamma / q, beta * delta / q, gamma * delta / q}) v = space.applyFactor(v, c);
    return agree(wKl(), scaled(RationalFunction(1) / (RationalFunction(1) + gamma / alpha), space.realize(v)), points);
  });
  add("klingen-dual-hecke-form", "dual Klingen eigenvector via U2'", [=] {
    const CyclicSpace space(w0, enumerateCosets("U2'", klingenLevel(1), p));
    auto v = space.generator();
    for (const auto& c : {alpha * gamma / q, beta * delta / q, gamma * delta / q}) v = space.applyFactor(v, c);
    return agree(wKlDual(), scaled(RationalFunction(1) / (RationalFunction(1) + gamma / alpha), space.realize(v)),
                 points);
  });
  add("spherical-recovery", "spherical vector from Iwahori eigenvectors", [=] {
    const RationalFunction one(1);
    const RationalFunction delta0 = (one - beta / alpha) * (one - gamma / alpha) * (one - gamma / beta) * (one - delta / alpha);
    std::vector<std::pair<RationalFunction, Whittaker>> terms;
    for (const WeylElement& w : weylGroupGSp4()) {
      const Substitution s = oracleWeyl(w, p);
      terms.emplace_back(one / substitute(delta0, s),
                         buildEigenvector({.kind = EigenKind::iwahori, .ordering = w.label()}, p));
    }
    return agree(linearCombination(std::move(terms)), w0, torus);
  });

  const RationalFunction one(1);
  const RationalFunction traceFactor = q.pow(3) * (one - gamma / (q * beta)) * (one - delta / (q * alpha)) *
                                       (one - delta / (q * beta));
  auto kTrace = [=](const Whittaker& f) { return heckeTranslate(enumerateCosets("KmodKl", klingenLevel(1), p), f); };
  add("klingentrace", "Klingen trace to spherical level", [=] {
    std::vector<Matrix> at = torus;
    const Outcome first = agree(kTrace(wKl()), scaled(traceFactor, w0), at);
    if (!first.ok) return Outcome{false, "W^Kl " + first.witness};
    const Outcome second = agree(kTrace(wKlDual()), scaled(traceFactor, w0), at);
    if (!second.ok) return Outcome{false, "W'^Kl " + second.witness};
    return Outcome{true, "both traces equal " + toFactoredString(traceFactor) + " times W0 at " + first.witness};
  });
  add("klingentrace-variant", "Klingen trace, alternative factor", [=] {
    const RationalFunction variant = q.pow(3) * (one - gamma / beta) * (one - delta / alpha) * (one - delta / beta);
    const CycloFunction diff = evaluate(kTrace(wKl()), PGroupElement::identity(G, p)) - CycloFunction(variant);
    if (diff.isZero()) return Outcome{false, "variant agrees with the trace"};
    return Outcome{true, "difference " + diff.toString()};
  });
  return checks;
}

}  // namespace

std::vector<std::string> localVectorCheckIds() {
  return {"gl2-normalization", "gl2-u-eigen", "gl2-hecke-form", "gl2-dual-value", "gl2-dual-hecke-form",
          "gl2-dual-eigen-1", "gl2-dual-eigen-2", "gl2-spherical-split", "gl2-trace-compatibility",
          "spherical-identity", "spherical-weyl-symmetry", "spherical-hecke", "spherical-u1-spectrum",
          "iwahori-normalization", "siegel-normalization", "klingen-normalization", "iwahori-u1-eigen",
          "iwahori-u2-eigen", "siegel-u1-eigen", "klingen-u2-eigen", "klingen-dual-u2-eigen",
          "iwahori-dual-u1-eigen", "iwahori-dual-u2-eigen", "siegel-display", "klingen-display",
          "klingen-iwahori-level", "klingen-dual-hecke-form", "spherical-recovery", "klingentrace",
          "klingentrace-variant"};
}

std::vector<VerificationReport> verifyLocalVectors(unsigned long p, int jobs, const std::vector<std::string>& only) {
  std::vector<Check> checks = buildChecks(p);
  if (!only.empty())
    std::erase_if(checks, [&](const Check& c) { return std::find(only.begin(), only.end(), c.id) == only.end(); });
  return parallelMap(checks.size(), static_cast<unsigned>(std::max(jobs, 1)), [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = checks[i].id;
    r.method = "oracle";
    r.anchor = checks[i].anchor;
    try {
      const Outcome o = checks[i].run();
      r.status = o.ok ? Status::verified : Status::failed;
      r.witness = o.witness.size() > 400 ? o.witness.substr(0, 400) + "..." : o.witness;
    } catch (const std::exception& e) {
      r.status = Status::failed;
      r.witness = std::string("error: ") + e.what();
    }
    r.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  });
}

}  // namespace gz
