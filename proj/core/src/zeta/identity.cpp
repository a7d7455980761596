#include "gz/zeta/identity.hpp"

#include <chrono>
#include <set>

#include "gz/util/parallel.hpp"
#include "gz/zeta/closed_forms.hpp"

namespace gz {
namespace {

constexpr std::size_t kWitnessLimit = 400;

std::string clip(std::string s) {
  if (s.size() > kWitnessLimit) s = s.substr(0, kWitnessLimit) + "...";
  return s;
}

// x^d = k for a binomial c1 x^e1 + c2 x^e2 (d = e1 - e2, k = -c2/c1).
struct BinomialRoot {
  Exponent d;
  Rational k;
};

std::vector<BinomialRoot> binomialRoots(const Factorization& f) {
  std::vector<BinomialRoot> out;
  for (const auto& fp : f.parts) {
    const auto& t = fp.factor.poly.terms();
    if (t.size() != 2) continue;
    out.push_back({t[0].first - t[1].first, Rational(-t[1].second / t[0].second)});
  }
  return out;
}

std::optional<std::pair<Var, RationalFunction>> solveFor(const Exponent& u) {
  for (std::size_t i = kMaxVars; i-- > 0;) {
    const int s = u[i];
    if (s != 1 && s != -1) continue;
    const Var v = static_cast<Var>(i);
    const Exponent rest = u - Exponent::unit(v, s);
    return std::make_pair(v, RationalFunction::monomial(rest.scaled(-s)));
  }
  return std::nullopt;
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string_view methodName(Method m) {
  switch (m) {
    case Method::exactEquality:
      return "exactEquality";
    case Method::conditionalEquality:
      return "conditionalEquality";
    case Method::congruenceAtQ1:
      return "congruenceAtQ1";
  }
  return "";
}

Method methodFromName(std::string_view s) {
  if (s == "exactEquality") return Method::exactEquality;
  if (s == "conditionalEquality") return Method::conditionalEquality;
  if (s == "congruenceAtQ1") return Method::congruenceAtQ1;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

std::string_view statusName(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::failed:
      return "failed";
    case Status::conditional:
      return "conditional";
    case Status::skipped:
      return "skipped";
  }
  return "";
}

bool VerificationReport::passed() const {
  return status == Status::verified || (status == Status::conditional && expectConditional);
}

nlohmann::json toJson(const IdentityRecord& r) {
  return {{"id", r.id},         {"suite", r.suite},   {"lhs", r.lhs},
          {"rhs", r.rhs},       {"method", methodName(r.method)},
          {"anchor", r.anchor}, {"expectConditional", r.expectConditional}};
}

IdentityRecord identityFromJson(const nlohmann::json& j) {
  IdentityRecord r;
  r.id = j.at("id").get<std::string>();
  r.suite = j.value("suite", std::string("symbolic"));
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.method = methodFromName(j.value("method", std::string("exactEquality")));
  r.anchor = j.value("anchor", std::string());
  r.expectConditional = j.value("expectConditional", false);
  return r;
}

std::vector<IdentityRecord> loadRegistry(const nlohmann::json& list) {
  if (!list.is_array()) throw std::invalid_argument("registry must be a JSON list of records");
  std::vector<IdentityRecord> out;
  for (const auto& j : list) out.push_back(identityFromJson(j));
  return out;
}

nlohmann::json toJson(const VerificationReport& r) {
  return {{"id", r.id},
          {"status", statusName(r.status)},
          {"method", r.method},
          {"elapsed_ms", static_cast<long long>(r.elapsedMs)},
          {"anchor", r.anchor},
          {"witness", r.witness}};
}

std::optional<MonomialRelation> findMonomialRelation(const RationalFunction& lhs, const RationalFunction& rhs) {
  if (lhs.isZero() || rhs.isZero()) return std::nullopt;
  const RationalFunction ratio = lhs / rhs;
  if (const auto mono = ratio.asMonomial(); mono && mono->first == 1) {
    const auto solved = solveFor(mono->second);
    if (!solved) return std::nullopt;
    return MonomialRelation{mono->second, solved->first, solved->second};
  }
  const auto num = binomialRoots(ratio.numeratorFactors());
  const auto den = binomialRoots(ratio.denominatorFactors());
  std::vector<Exponent> candidates;
  std::set<Exponent> seen;
  auto push = [&](const Exponent& u) {
    if (u.isZero()) return;
    const Exponent canon = u < -u ? -u : u;
    if (seen.insert(canon).second) candidates.push_back(canon);
  };
  for (const auto& f : num) {
    for (const auto& g : den) {
      if (f.k == g.k) push(f.d - g.d);
      if (f.k * g.k == 1) push(f.d + g.d);
    }
  }
  for (const auto& u : candidates) {
    const auto solved = solveFor(u);
    if (!solved) continue;
    const Substitution s{{solved->first, solved->second}};
    try {
      if (substitute(lhs, s) == substitute(rhs, s)) return MonomialRelation{u, solved->first, solved->second};
    } catch (const PoleError&) {
    }
  }
  return std::nullopt;
}

VerificationReport verifyIdentity(const IdentityRecord& record, const FormulaContext& ctx) {
  VerificationReport rep;
  rep.id = record.id;
  rep.method = std::string(methodName(record.method));
  rep.anchor = record.anchor;
  rep.expectConditional = record.expectConditional;
  rep.elapsedMs = timed([&] {
    try {
      const RationalFunction lhs = ctx.evaluate(record.lhs);
      const RationalFunction rhs = ctx.evaluate(record.rhs);
      RationalFunction diff = lhs - rhs;
      if (record.method == Method::congruenceAtQ1) diff = reduceAtQ1(diff);
      if (diff.isZero()) {
        rep.status = Status::verified;
        return;
      }
      if (record.method == Method::conditionalEquality) {
        if (const auto rel = findMonomialRelation(lhs, rhs)) {
          rep.status = Status::conditional;
          rep.witness = "relation " + toString(RationalFunction::monomial(rel->u)) + " = 1";
          return;
        }
      }
      rep.status = Status::failed;
      rep.witness = clip(toString(diff));
    } catch (const std::exception& e) {
      rep.status = Status::failed;
      rep.witness = clip(std::string("error: ") + e.what());
    }
  });
  return rep;
}

std::vector<VerificationReport> relabelChecks(const FormulaContext& ctx) {
  std::vector<VerificationReport> out;
  for (const auto& r : defaultRegistry())
    if (r.suite == "relabel") out.push_back(verifyIdentity(r, ctx));
  return out;
}

VerificationReport polynomialityCheck(int bound) {
  VerificationReport rep;
  rep.id = "gejima-polynomiality";
  rep.method = "laurentPolynomial";
  rep.anchor = "Gejima polynomiality";
  rep.elapsedMs = timed([&] {
    const int side = bound + 1;
    const RationalFunction q = RationalFunction::variable(Var::q);
    const RationalFunction bookkeeping = ((q * q - 1) * (q * q - 1));
    const std::size_t total = static_cast<std::size_t>(side) * side * side * side;
    const auto flags = parallelMap(total, std::max(1u, std::thread::hardware_concurrency()), [&](std::size_t i) {
      const int m = static_cast<int>(i) / (side * side * side), n = static_cast<int>(i) / (side * side) % side;
      const int x1 = static_cast<int>(i) / side % side, x2 = static_cast<int>(i) % side;
      return (gejimaValue(m, n, x1, x2) * bookkeeping).isLaurentPolynomial() ? std::string() :
             "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(x1) + "," + std::to_string(x2) + ")";
    });
    std::string bad;
    for (const auto& f : flags)
      if (!f.empty()) bad += (bad.empty() ? "" : " ") + f;
    rep.status = bad.empty() ? Status::verified : Status::failed;
    rep.witness = bad.empty() ? std::to_string(total) + " tuples" : clip("not Laurent at " + bad);
  });
  return rep;
}

}  // namespace gz
