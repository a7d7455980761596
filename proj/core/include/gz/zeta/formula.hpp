#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "gz/algebra/io.hpp"

namespace gz {

// Small expression language used by the identity registry. On top of the
// plain expression syntax it knows the derived parameters gamma and delta,
// the factor library by name, and functions such as gejima(m,n,x1,x2),
// weyl0(f), relabel(gsp4, f) or special(klingenEigen, n, x1, x2).
class FormulaContext {
 public:
  using Function = std::function<RationalFunction(std::span<const ParsedArg>)>;

  FormulaContext();

  void define(std::string name, Function fn);
  void defineConstant(std::string name, RationalFunction value);

  RationalFunction evaluate(std::string_view text) const;
  std::vector<std::string> functionNames() const;

 private:
  std::map<std::string, Function, std::less<>> functions_;
  std::map<std::string, RationalFunction, std::less<>> constants_;
};

// Argument helpers for function definitions.
const RationalFunction& valueArg(std::span<const ParsedArg> args, std::size_t i);
long intArg(std::span<const ParsedArg> args, std::size_t i);
const std::string& wordArg(std::span<const ParsedArg> args, std::size_t i);
void expectArgs(std::span<const ParsedArg> args, std::size_t lo, std::size_t hi, std::string_view name);

}  // namespace gz
