#include "gz/zeta/identity.hpp"

namespace gz {
namespace {

// Shorthand used in the relabel displays below.
constexpr const char* kG = "param(gsp4,gamma)";
constexpr const char* kD = "param(gsp4,delta)";

std::string sub(std::string s) {
  auto replace = [&s](const std::string& from, const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
      s.replace(pos, from.size(), to);
  };
  replace("{G}", kG);
  replace("{D}", kD);
  replace("{G2}", "param(gsp4xgl2,gamma)");
  replace("{D2}", "param(gsp4xgl2,delta)");
  replace("{Q}", "(phr*ph2/ph1)");
  return s;
}

IdentityRecord rec(std::string suite, std::string id, std::string lhs, std::string rhs, Method m, std::string anchor,
                   bool expectConditional = false) {
  return {std::move(id), std::move(suite), sub(std::move(lhs)), sub(std::move(rhs)), m, std::move(anchor),
          expectConditional};
}

std::vector<IdentityRecord> build() {
  constexpr auto exact = Method::exactEquality;
  constexpr auto cond = Method::conditionalEquality;
  constexpr auto q1 = Method::congruenceAtQ1;
  const std::string siegelAlpha = "(1-q^2/(alpha*a1*a2))*(1-q^2/(alpha*b1*a2))*(1-q^2/(alpha*a1*b2))*(1-q^2/(alpha*b1*b2))";
  const std::string siegelAlphaDisplay =
      "(1-pq/alpha)*(1-{D}/(p*pq))*(1-p*pr2*pr*chi2/alpha)*(1-{D}/(p^2*pr2*pr*chi2))";
  const std::string siegelBetaDisplay = "(1-beta/(p*pq))*(1-{G}/(p*pq))";
  const std::string fudge = "(1-p*pr2*pr*chi2/beta)*(1-{G}/(p^2*pr2*pr*chi2))";
  std::vector<IdentityRecord> out{
      rec("symbolic", "gejima-normalization", "gejima(0,0,0,0)", "1", exact, "Gejima normalization"),
      rec("symbolic", "gejima-weyl-sum", "weyl(E/(Delta0*Delta1*Delta2))", "(q^2-1)^2/q^4", exact,
          "Gejima prefactor q^4/(q^2-1)^2"),
      rec("symbolic", "sum-invdelta0", "weyl0(1/Delta0)", "1", exact, "spherical recovery"),
      rec("symbolic", "sum-invdelta02", "weyl02(1/(Delta0*Delta2))", "1", exact, "sum of 1/(Delta0 Delta2)"),
      rec("symbolic", "pstab-orbit-1000", "q^4/(q^2-1)^2*weyl(pstab(1,0,0,0)*(q^2-1)^2/q^4/(Delta0*Delta1*Delta2))",
          "gejima(1,0,0,0)", exact, "p-stabilized Shintani value, orbit sum"),
      rec("symbolic", "pstab-orbit-0111", "weyl(pstab(0,1,1,1)/(Delta0*Delta1*Delta2))", "gejima(0,1,1,1)", exact,
          "p-stabilized Shintani value, orbit sum"),
      rec("symbolic", "iwahori1", "variant(3,1,1,1,1)", "alpha^2*beta*a1*a2/(q^6*(q^2-1)^2)*E", exact,
          "Iwahori level, J eta t11"),
      rec("symbolic", "iwahori2", "variant(2,1,1,0,0)", "alpha^2*beta/(q^4*(q^2-1)^2)*E", exact,
          "Iwahori level, eta t11"),
      rec("symbolic", "iwahori3", "variant(4,1,1,0,1)", "alpha^2*beta*a2/(q^5*(q^2-1)^2)*E", exact,
          "Iwahori level, GSp4 x GL2"),
      rec("symbolic", "siegel", "q^4/(q^2-1)^2*alpha/q^3*(E/(1-gamma/beta)+apply(ag,E)/(1-beta/gamma))",
          "special(siegel)", exact, "Siegel level"),
      rec("symbolic", "tame-norm", "q^4/(q^2-1)^2*weyl0(E/Delta0*(1-alpha*b1*b2/q^3))", "q^3/((q-1)*(q+1)^2)*Ppi(b1*b2/q^3)",
          exact, "GSp4 tame norm relation"),
      rec("symbolic", "klingen-ekl-display", "EKl",
          "(1-q^2/(alpha*a1*a2))*(1-q^2/(alpha*b1*a2))*(1-q^2/(alpha*a1*b2))*(1-q^2/(beta*a1*a2))*"
          "(1-q^2/(beta*a1*b2))*(1-q^2/(beta*b1*a2))",
          exact, "Klingen eigenvector, first display"),
      rec("symbolic", "klingen-ekl-bkl", "EKl", "BKl/((1-q^2/(alpha*b1*b2))*(1-q^2/(beta*b1*b2)))", exact,
          "Klingen eigenvector, second display"),
      rec("symbolic", "klingen-ekl-e", "EKl", "E/((1-q^2/(alpha*b1*b2))*(1-q^2/(gamma*a1*a2)))", exact,
          "Klingen eigenvector, third display"),
      rec("symbolic", "depleted-vs-klingen", "special(depleted)", "special(klingenEigen,0,0,0)*BKl/EKl", exact,
          "depleted vectors"),
      rec("symbolic", "bkl-symmetry-ab", "apply(ba,BKl)", "BKl", exact, "B_Kl symmetry"),
      rec("symbolic", "bkl-symmetry-swaps", "swap1(swap2(BKl))", "BKl", exact, "B_Kl symmetry"),
      rec("symbolic", "modq1", "(q^2-1)^2*(q^4/(q^2-1)^2)*weyl02(alpha^2*beta*a2/q^5*E/(Delta0*Delta2))",
          "-PpiSigma2(b1)/(b1^3*a2*b2)", q1, "mod (q-1) norm relation"),
      rec("symbolic", "modq1-factor", "1-delta*a1*a2/q^3", "-1/(alpha*b1*b2)*(1-alpha*b1*b2/q^3)", q1,
          "mod (q-1) factor identity"),

      rec("relabel", "relabel-siegel-prefactor", "relabel(gsp4, special(siegel)/alpha*((q+1)/q)^2/(" + siegelAlpha +
          "*(1-q^2/(beta*a1*a2))*(1-q^2/(gamma*a1*a2))))", "1/(p^2*(p-1))", exact, "Siegel rewrite prefactor"),
      rec("relabel", "relabel-siegel-alpha-delta", "relabel(gsp4," + siegelAlpha + ")", siegelAlphaDisplay, exact,
          "Siegel rewrite, alpha and delta factors"),
      rec("relabel", "relabel-siegel-beta-gamma", "relabel(gsp4,(1-q^2/(beta*a1*a2))*(1-q^2/(gamma*a1*a2)))",
          siegelBetaDisplay, cond, "Siegel rewrite, beta and gamma factors", true),
      rec("relabel", "relabel-siegel", "relabel(gsp4, special(siegel)/alpha*((q+1)/q)^2)",
          "1/(p^2*(p-1))*" + siegelAlphaDisplay + "*" + siegelBetaDisplay, cond, "Siegel rewrite", true),
      rec("relabel", "relabel-iwahori-prefactor", "relabel(gsp4, special(iwahori2)/(alpha^2*beta/q)*((q+1)/q)^2/E)",
          "1/(p^5*(p-1)^2)", exact, "Iwahori rewrite prefactor"),
      rec("relabel", "relabel-iwahori", "relabel(gsp4, special(iwahori2)/(alpha^2*beta/q)*((q+1)/q)^2)",
          "1/(p^5*(p-1)^2)*" + siegelAlphaDisplay + "*" + siegelBetaDisplay + "*" + fudge, cond, "Iwahori rewrite",
          true),
      rec("relabel", "relabel-fudge-factor",
          "(" + siegelAlphaDisplay + "*" + siegelBetaDisplay + "*" + fudge + ")/(" + siegelAlphaDisplay + "*" +
              siegelBetaDisplay + ")",
          fudge, exact, "fudge factor ratio"),
      rec("relabel", "relabel-tame-prefactor", "q^3/((q-1)*(q+1)^2)*((q+1)/q)^2", "q/(q-1)", exact,
          "tame norm prefactor"),
      rec("relabel", "relabel-tame-index", "(p-1)*(p/(p-1))", "p", exact, "tame norm index"),
      rec("relabel", "relabel-tame-argument", "relabel(gsp4, b1*b2/q^3)", "1/(p*pq)", cond,
          "tame norm argument", true),
      rec("relabel", "relabel-crit", "relabel(gsp4, special(klingenEigen,0,0,0))",
          "p^3/((p+1)^2*(p-1))*(1-pq/alpha)*(1-pq/beta)*(1-p*pr2*pr*chi2/alpha)*(1-p*pr2*pr*chi2/beta)*"
          "(1-{G}/(p^2*pr2*pr*chi2))*(1-{D}/(p^2*pr2*pr*chi2))",
          cond, "Klingen-type formula"),
      rec("relabel", "relabel-gsp4xgl2", "relabel(gsp4xgl2, special(iwahori3)/(alpha^2*beta/q)/a2*(q+1)/q)",
          "1/(p^5*(p+1)*(p-1)^2)*(1-beta*b2/(p^2*{Q}))*(1-{G2}*a2/(p^2*{Q}))*(1-{G2}*b2/(p^2*{Q}))*"
          "(1-{D2}*a2/(p^2*{Q}))*(1-{D2}*b2/(p^2*{Q}))*(1-p*{Q}/(alpha*a2))*(1-p*{Q}/(alpha*b2))*"
          "(1-p*{Q}/(beta*a2))",
          cond, "GSp4 x GL2 Euler factor", true),
      rec("torus", "torus-iwahori-eigen", "torus(rhoAlphaPrime,2,aStab,0,aStab,0)", "special(iwahoriEigen)", exact,
          "Iwahori eigenvector, torus integral"),
      rec("torus", "torus-depleted-kl", "torus(rhoSph,2,depleted,0,depleted,0)", "special(depleted)", exact,
          "depleted vectors, Klingen"),
      rec("torus", "torus-depleted-kl-stab1", "torus(rhoSph,2,aStab,0,depleted,0)", "special(depleted)", exact,
          "depleted vectors, Klingen"),
      rec("torus", "torus-depleted-kl-stab2", "torus(rhoSph,2,depleted,0,aStab,0)", "special(depleted)", exact,
          "depleted vectors, Klingen"),
      rec("torus", "torus-depleted-iw", "torus(rhoAlphaPrime,2,depleted,0,depleted,0)", "special(depleted)", exact,
          "depleted vectors, Iwahori"),
      rec("torus", "torus-depleted-iw-stab1", "torus(rhoAlphaPrime,2,aStab,0,depleted,0)", "special(depleted)", exact,
          "depleted vectors, Iwahori"),
      rec("torus", "torus-depleted-iw-stab2", "torus(rhoAlphaPrime,2,depleted,0,aStab,0)", "special(depleted)", exact,
          "depleted vectors, Iwahori"),
  };
  // the n-dependence is the monomial (alpha beta / q^5)^n
  for (int n = 0; n <= 2; ++n)
    for (int x1 = 0; x1 <= 2; ++x1)
      for (int x2 = 0; x2 <= 2; ++x2) {
        const std::string args = std::to_string(n) + "," + std::to_string(x1) + "," + std::to_string(x2);
        out.push_back(rec("torus", "torus-klingen-" + std::to_string(n) + std::to_string(x1) + std::to_string(x2),
                          "(alpha*beta/q^5)^" + std::to_string(n) + "*torus(rhoSph,0,aStab," + std::to_string(x1) +
                              ",aStab," + std::to_string(x2) + ")",
                          "special(klingenEigen," + args + ")", exact, "Klingen eigenvector, torus integral"));
      }
  return out;
}

}  // namespace

const std::vector<IdentityRecord>& defaultRegistry() {
  static const std::vector<IdentityRecord> registry = build();
  return registry;
}

}  // namespace gz
