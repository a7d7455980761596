#include "gz/zeta/closed_forms.hpp"

#include <stdexcept>

#include "gz/euler/factors.hpp"

namespace gz {
namespace {

RationalFunction v(Var x, int k = 1) { return RationalFunction::variable(x, k); }

RationalFunction gejimaPrefactor() {
  const RationalFunction q = v(Var::q);
  return v(Var::q, 4) / (q * q - RationalFunction(1)).pow(2);
}

RationalFunction q2over(const RationalFunction& lambda, Var mu, Var nu) {
  return oneMinus(v(Var::q, 2) / (lambda * v(mu) * v(nu)));
}

}  // namespace

RationalFunction shintaniMonomial(int m, int n, int x1, int x2) {
  if (m < 0 || n < 0 || x1 < 0 || x2 < 0) throw std::domain_error("exponents must be nonnegative");
  Exponent e = Exponent::unit(Var::alpha, m + n) + Exponent::unit(Var::beta, n) + Exponent::unit(Var::a1, x1) +
               Exponent::unit(Var::a2, x2) + Exponent::unit(Var::q, -(3 * m + 5 * n + x1 + x2));
  return RationalFunction::monomial(e);
}

RationalFunction gejimaValue(int m, int n, int x1, int x2) {
  const RationalFunction summand =
      shintaniMonomial(m, n, x1, x2) * factor("E") / (factor("Delta0") * factor("Delta1") * factor("Delta2"));
  return gejimaPrefactor() * weylSum(weylTriples(), summand);
}

RationalFunction pstabValue(int m, int n, int x1, int x2) {
  return gejimaPrefactor() * shintaniMonomial(m, n, x1, x2) * factor("E");
}

RationalFunction variantValue(int variantCase, int m, int n, int x1, int x2) {
  bool ok = false;
  switch (variantCase) {
    case 1:
      ok = m >= 0 && n >= 0 && x1 >= 1 && x2 >= 1;
      break;
    case 2:
      ok = m >= 1 && n >= 1 && x1 >= 0 && x2 >= 0;
      break;
    case 3:
      ok = m >= 1 && n >= 1 && x1 >= 1 && x2 >= 1;
      break;
    case 4:
      ok = m >= 1 && n >= 1 && x2 >= 1 && x1 >= 0;
      break;
    default:
      throw std::domain_error("variant case must be 1..4");
  }
  if (!ok) throw std::domain_error("parameters outside the range of variant " + std::to_string(variantCase));
  return pstabValue(m, n, x1, x2);
}

RationalFunction klingenVolume() {
  const RationalFunction q = v(Var::q), one(1);
  return v(Var::q, 3) / ((q + one).pow(2) * (q - one));
}

ZetaClosedForm specialCase(std::string_view id, int n, int x1, int x2) {
  const RationalFunction q = v(Var::q), one(1);
  const RationalFunction a = v(Var::alpha), b = v(Var::beta), g = paramExpr(Param::gamma);
  const RationalFunction E = factor("E");
  const RationalFunction sq = (q * q - one).pow(2);
  if (id == "iwahori1")
    return {"(J eta t11 W^Iw_ab, t1 W_a1, t1 W_a2)", a * a * b * v(Var::a1) * v(Var::a2) * E / (v(Var::q, 6) * sq)};
  if (id == "iwahori2") return {"(eta t11 W^Iw_ab, W'_a1[x1], W'_a2[x2])", a * a * b * E / (v(Var::q, 4) * sq)};
  if (id == "iwahori3")
    return {"(eta t11 W^Iw_ab, W'_a1[x1], J t1 W_a2)", a * a * b * v(Var::a2) * E / (v(Var::q, 5) * sq)};
  if (id == "siegel") {
    const std::vector<RationalFunction> fs{q2over(a, Var::a1, Var::a2), q2over(a, Var::b1, Var::a2),
                                           q2over(a, Var::a1, Var::b2), q2over(a, Var::b1, Var::b2),
                                           q2over(b, Var::a1, Var::a2), q2over(g, Var::a1, Var::a2)};
    return {"(eta t10 W^Si_a, W'_a1, W'_a2)", a / ((q - one) * (q + one).pow(2)) * RationalFunction::product(fs)};
  }
  if (id == "klingenEigen") {
    if (n < 0 || x1 < 0 || x2 < 0) throw std::domain_error("klingenEigen needs n, x1, x2 >= 0");
    const RationalFunction scale = RationalFunction::monomial(
        Exponent::unit(Var::alpha, n) + Exponent::unit(Var::beta, n) + Exponent::unit(Var::a1, x1) +
        Exponent::unit(Var::a2, x2) + Exponent::unit(Var::q, -(5 * n + x1 + x2)));
    return {"(u_Kl s_0n W'^Kl_ab, t_x1 v_a1, t_x2 v_a2)", klingenVolume() * scale * factor("EKl")};
  }
  if (id == "tameNorm")
    return {"((1 - t10^-1 eta t10) W_sph, W'_a1[n], W'_a2[n])",
            v(Var::q, 3) / ((q - one) * (q + one).pow(2)) *
                lPolynomial("Ppi", v(Var::b1) * v(Var::b2) / v(Var::q, 3))};
  if (id == "iwahoriEigen")
    return {"(u_Iw W'^Iw_ab[n], W_a1, W_a2)",
            klingenVolume() * factor("BKl") / q2over(b, Var::b1, Var::b2)};
  if (id == "depleted") return {"(u_Kl v'^Kl_ab[n], v_dep, v_dep)", klingenVolume() * factor("BKl")};
  throw UnknownName("unknown special case '" + std::string(id) + "'");
}

std::vector<std::string> specialCaseIds() {
  return {"iwahori1", "iwahori2", "iwahori3", "siegel", "klingenEigen", "tameNorm", "iwahoriEigen", "depleted"};
}

}  // namespace gz
