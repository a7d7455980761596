#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string_view>

#include "gz/algebra/evaluate.hpp"

namespace gz {

// The four GSp4 Hecke parameters; gamma and delta are derived.
enum class Param { alpha, beta, gamma, delta };

inline constexpr std::array<Param, 4> kParams{Param::alpha, Param::beta, Param::gamma, Param::delta};

// alpha <-> delta, beta <-> gamma
constexpr Param partner(Param p) noexcept { return static_cast<Param>(3 - static_cast<int>(p)); }

constexpr char letter(Param p) noexcept { return "abgd"[static_cast<int>(p)]; }

// Free variables q, alpha, beta, a1, b1, a2, b2 with
// gamma = q^5 / (beta a1 b1 a2 b2) and delta = q^5 / (alpha a1 b1 a2 b2).
class ParameterContext {
 public:
  ParameterContext();

  static const ParameterContext& standard();

  const std::array<Var, 7>& freeVariables() const noexcept { return free_; }
  const RationalFunction& gammaExpr() const noexcept { return gamma_; }
  const RationalFunction& deltaExpr() const noexcept { return delta_; }
  const RationalFunction& expr(Param p) const noexcept { return params_[static_cast<int>(p)]; }

 private:
  std::array<Var, 7> free_;
  RationalFunction gamma_;
  RationalFunction delta_;
  std::array<RationalFunction, 4> params_;
};

// Convenience accessors on the standard context.
inline const RationalFunction& paramExpr(Param p) { return ParameterContext::standard().expr(p); }

// Substitutes q = 1; PoleError when a denominator vanishes there.
RationalFunction reduceAtQ1(const RationalFunction& f);

// Deterministic nonzero rationals for the free variables, avoiding the
// coincidences that make any library denominator vanish.
RationalPoint randomSpecialization(std::uint64_t seed);

// The values of alpha, beta, gamma, delta at a specialization.
std::array<Rational, 4> paramValues(const RationalPoint& point);

}  // namespace gz
