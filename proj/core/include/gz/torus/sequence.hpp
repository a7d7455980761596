#pragma once

#include <map>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gz/algebra/rational_function.hpp"

namespace gz {

// k -> sum_j coeff_j * k^degree_j * base_j^k for k >= genericStart, explicit
// overrides on [supportStart, genericStart), zero below supportStart.
class TorusSequence {
 public:
  struct Term {
    RationalFunction coeff;
    RationalFunction base;
    unsigned degree = 0;
  };

  static constexpr unsigned kMaxDegree = 3;

  TorusSequence() = default;
  TorusSequence(long supportStart, long genericStart, std::vector<Term> terms,
                std::map<long, RationalFunction> overrides = {});

  static TorusSequence geometric(const RationalFunction& coeff, const RationalFunction& base, long start);
  static TorusSequence single(long k, const RationalFunction& value);

  long supportStart() const noexcept { return supportStart_; }
  long genericStart() const noexcept { return genericStart_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::map<long, RationalFunction>& overrides() const noexcept { return overrides_; }

  RationalFunction value(long k) const;

  // value'(k) = value(k + x)
  TorusSequence shifted(long x) const;
  // value'(k) = c^x * value(k - x)
  TorusSequence shiftedWithCentral(long x, const RationalFunction& central) const;
  // value'(k) = base^k * value(k)
  TorusSequence twisted(const RationalFunction& base) const;

  friend TorusSequence operator*(const TorusSequence& a, const TorusSequence& b);

  // sum over k >= supportStart; throws PoleError when a generic base is 1.
  RationalFunction total() const;

  nlohmann::json toJson() const;

 private:
  long supportStart_ = 0;
  long genericStart_ = 0;
  std::vector<Term> terms_;
  std::map<long, RationalFunction> overrides_;
};

enum class Gl2Kind { sph, aStab, aPrimeStab, depleted, rhoSph, rhoAlphaPrime };

struct Gl2Spec {
  Gl2Kind kind = Gl2Kind::sph;
  int n = 0;
  // 1 or 2: which pair (a_i, b_i); ignored by the rho kinds, which use (alpha, beta).
  int factor = 1;
};

Gl2Spec gl2SpecFromName(std::string_view name, int n = 0, int factor = 1);

TorusSequence gl2Sequence(const Gl2Spec& spec);

enum class ShiftKind { t, sWithCentral };

TorusSequence shiftSequence(const TorusSequence& s, ShiftKind kind, long x,
                            const RationalFunction& central = RationalFunction(1));

// sum_k rho(k) w1(k) w2(k) (q gamma/alpha)^k q^-k
RationalFunction torusIntegral(const TorusSequence& rho, const TorusSequence& w1, const TorusSequence& w2);

// q^3 B_Kl / ((q+1)^2 (q-1)) * torusIntegral
RationalFunction klingenPipelineValue(const TorusSequence& rho, const TorusSequence& w1, const TorusSequence& w2);

}  // namespace gz
