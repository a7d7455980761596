#include "gz/torus/sequence.hpp"

#include <algorithm>
#include <stdexcept>

#include "gz/algebra/evaluate.hpp"
#include "gz/algebra/io.hpp"
#include "gz/euler/factors.hpp"
#include "gz/params/context.hpp"
#include "gz/zeta/closed_forms.hpp"

namespace gz {
namespace {

Rational binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational power(long base, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Expand coeff * (k + x)^d * base^(k + x) into terms in k.
void pushShifted(std::vector<TorusSequence::Term>& out, const TorusSequence::Term& t, long x,
                 const RationalFunction& scale) {
  const RationalFunction c = t.coeff * scale;
  for (unsigned j = 0; j <= t.degree; ++j) {
    const Rational b = binomial(t.degree, j) * power(x, t.degree - j);
    if (b != 0) out.push_back({c * RationalFunction(b), t.base, j});
  }
}

std::vector<TorusSequence::Term> merged(std::vector<TorusSequence::Term> in) {
  std::vector<TorusSequence::Term> out;
  for (auto& t : in) {
    if (t.coeff.isZero()) continue;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& o) { return o.degree == t.degree && o.base == t.base; });
    if (it == out.end()) {
      out.push_back(std::move(t));
    } else {
      it->coeff += t.coeff;
    }
  }
  std::erase_if(out, [](const auto& t) { return t.coeff.isZero(); });
  return out;
}

RationalFunction var(Var v) { return RationalFunction::variable(v); }

}  // namespace

TorusSequence::TorusSequence(long supportStart, long genericStart, std::vector<Term> terms,
                             std::map<long, RationalFunction> overrides)
    : supportStart_(supportStart), genericStart_(std::max(supportStart, genericStart)), terms_(merged(std::move(terms))) {
  for (const auto& t : terms_) {
    if (t.degree > kMaxDegree) throw std::domain_error("torus sequence degree exceeds 3");
  }
  for (auto& [k, v] : overrides) {
    if (k < supportStart_ || k >= genericStart_) throw std::invalid_argument("override outside [supportStart, genericStart)");
    if (!v.isZero()) overrides_.emplace(k, std::move(v));
  }
}

TorusSequence TorusSequence::geometric(const RationalFunction& coeff, const RationalFunction& base, long start) {
  return TorusSequence(start, start, {{coeff, base, 0}});
}

TorusSequence TorusSequence::single(long k, const RationalFunction& value) {
  return TorusSequence(k, k + 1, {}, {{k, value}});
}

RationalFunction TorusSequence::value(long k) const {
  if (k < supportStart_) return RationalFunction(0);
  if (k < genericStart_) {
    const auto it = overrides_.find(k);
    return it == overrides_.end() ? RationalFunction(0) : it->second;
  }
  std::vector<RationalFunction> parts;
  for (const auto& t : terms_) parts.push_back(t.coeff * RationalFunction(power(k, t.degree)) * t.base.pow(k));
  return RationalFunction::sum(parts);
}

TorusSequence TorusSequence::shifted(long x) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) pushShifted(terms, t, x, t.base.pow(x));
  std::map<long, RationalFunction> ov;
  for (const auto& [k, v] : overrides_) ov.emplace(k - x, v);
  return TorusSequence(supportStart_ - x, genericStart_ - x, std::move(terms), std::move(ov));
}

TorusSequence TorusSequence::shiftedWithCentral(long x, const RationalFunction& central) const {
  const RationalFunction cx = central.pow(x);
  std::vector<Term> terms;
  for (const auto& t : terms_) pushShifted(terms, t, -x, cx * t.base.pow(-x));
  std::map<long, RationalFunction> ov;
  for (const auto& [k, v] : overrides_) ov.emplace(k + x, cx * v);
  return TorusSequence(supportStart_ + x, genericStart_ + x, std::move(terms), std::move(ov));
}

TorusSequence TorusSequence::twisted(const RationalFunction& base) const {
  return *this * geometric(RationalFunction(1), base, supportStart_);
}

TorusSequence operator*(const TorusSequence& a, const TorusSequence& b) {
  const long support = std::max(a.supportStart_, b.supportStart_);
  const long generic = std::max(a.genericStart_, b.genericStart_);
  std::map<long, RationalFunction> ov;
  for (long k = support; k < generic; ++k) ov.emplace(k, a.value(k) * b.value(k));
  std::vector<TorusSequence::Term> terms;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) terms.push_back({s.coeff * t.coeff, s.base * t.base, s.degree + t.degree});
  }
  return TorusSequence(support, generic, std::move(terms), std::move(ov));
}

RationalFunction TorusSequence::total() const {
  std::vector<RationalFunction> parts;
  for (const auto& [k, v] : overrides_) parts.push_back(v);
  const long g = genericStart_;
  for (const auto& t : terms_) {
    // sum_{k >= g} k^d b^k = b^g sum_{i >= 0} (i + g)^d b^i
    const RationalFunction lead = t.coeff * t.base.pow(g);
    for (unsigned j = 0; j <= t.degree; ++j) {
      const Rational c = binomial(t.degree, j) * power(g, t.degree - j);
      if (c != 0) parts.push_back(sumPowerSeries(lead * RationalFunction(c), j, t.base));
    }
  }
  return RationalFunction::sum(parts);
}

nlohmann::json TorusSequence::toJson() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_)
    terms.push_back({{"coeff", toString(t.coeff)}, {"base", toString(t.base)}, {"degree", t.degree}});
  nlohmann::json ov = nlohmann::json::object();
  for (const auto& [k, v] : overrides_) ov[std::to_string(k)] = toString(v);
  return {{"supportStart", supportStart_}, {"genericStart", genericStart_}, {"terms", terms}, {"overrides", ov}};
}

Gl2Spec gl2SpecFromName(std::string_view name, int n, int factor) {
  static const std::map<std::string_view, Gl2Kind> kinds{
      {"sph", Gl2Kind::sph},           {"aStab", Gl2Kind::aStab},   {"aPrimeStab", Gl2Kind::aPrimeStab},
      {"depleted", Gl2Kind::depleted}, {"rhoSph", Gl2Kind::rhoSph}, {"rhoAlphaPrime", Gl2Kind::rhoAlphaPrime}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw std::invalid_argument("unknown torus sequence '" + std::string(name) + "'");
  if (factor != 1 && factor != 2) throw std::invalid_argument("GL2 factor index must be 1 or 2");
  return {it->second, n, factor};
}

TorusSequence gl2Sequence(const Gl2Spec& spec) {
  const bool rho = spec.kind == Gl2Kind::rhoSph || spec.kind == Gl2Kind::rhoAlphaPrime;
  const RationalFunction a = rho ? var(Var::alpha) : var(spec.factor == 1 ? Var::a1 : Var::a2);
  const RationalFunction b = rho ? var(Var::beta) : var(spec.factor == 1 ? Var::b1 : Var::b2);
  const RationalFunction q = var(Var::q);
  switch (spec.kind) {
    case Gl2Kind::sph:
    case Gl2Kind::rhoSph:
      return TorusSequence(0, 0, {{a / (a - b), a / q, 0}, {-b / (a - b), b / q, 0}});
    case Gl2Kind::aStab:
      return TorusSequence::geometric(RationalFunction(1), a / q, 0);
    case Gl2Kind::aPrimeStab:
    case Gl2Kind::rhoAlphaPrime:
      return TorusSequence::geometric(RationalFunction(1), a / q, -spec.n);
    case Gl2Kind::depleted:
      return TorusSequence::single(0, RationalFunction(1));
  }
  throw std::logic_error("unreachable");
}

TorusSequence shiftSequence(const TorusSequence& s, ShiftKind kind, long x, const RationalFunction& central) {
  if (x < 0) throw std::invalid_argument("shift must be non-negative");
  return kind == ShiftKind::t ? s.shifted(x) : s.shiftedWithCentral(x, central);
}

RationalFunction torusIntegral(const TorusSequence& rho, const TorusSequence& w1, const TorusSequence& w2) {
  const RationalFunction q = var(Var::q);
  const RationalFunction ratio = q * paramExpr(Param::gamma) / var(Var::alpha) / q;
  return (rho * w1 * w2).twisted(ratio).total();
}

RationalFunction klingenPipelineValue(const TorusSequence& rho, const TorusSequence& w1, const TorusSequence& w2) {
  return klingenVolume() * factor("BKl") * torusIntegral(rho, w1, w2);
}

}  // namespace gz
