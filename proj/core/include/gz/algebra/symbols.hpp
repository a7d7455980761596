#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace gz {

// Fixed symbol universe. Index order is the lexicographic term order.
enum class Var : std::size_t {
  q,
  alpha,
  beta,
  a1,
  b1,
  a2,
  b2,
  X,
  c,
  p,
  pq,
  pr,
  pr1,
  pr2,
  ph1,
  ph2,
  phr,
  chi1,
  chi2,
  kappa,
  x,
  y,
  z,
  u,
};

inline constexpr std::size_t kMaxVars = 24;

struct SymbolInfo {
  std::string_view name;
  std::string_view latex;
};

inline constexpr std::array<SymbolInfo, kMaxVars> kSymbols{{
    {"q", "q"},
    {"alpha", "\\alpha"},
    {"beta", "\\beta"},
    {"a1", "\\mathfrak{a}_1"},
    {"b1", "\\mathfrak{b}_1"},
    {"a2", "\\mathfrak{a}_2"},
    {"b2", "\\mathfrak{b}_2"},
    {"X", "X"},
    {"c", "c_\\pi"},
    {"p", "p"},
    {"pq", "p^{q}"},
    {"pr", "p^{r}"},
    {"pr1", "p^{r_1}"},
    {"pr2", "p^{r_2}"},
    {"ph1", "p^{t_1/2}"},
    {"ph2", "p^{t_2/2}"},
    {"phr", "p^{(r_1+r_2)/2}"},
    {"chi1", "\\chi_1(p)"},
    {"chi2", "\\chi_2(p)"},
    {"kappa", "\\chi_\\pi\\chi_{\\sigma_2}(p)"},
    {"x", "x"},
    {"y", "y"},
    {"z", "z"},
    {"u", "u"},
}};

constexpr std::size_t index(Var v) noexcept { return static_cast<std::size_t>(v); }

constexpr std::string_view name(Var v) noexcept { return kSymbols[index(v)].name; }

constexpr std::optional<Var> varFromName(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (kSymbols[i].name == s) return static_cast<Var>(i);
  }
  return std::nullopt;
}

}  // namespace gz
