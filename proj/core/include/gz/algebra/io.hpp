#pragma once

#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gz/algebra/rational_function.hpp"

namespace gz {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Plain text: sums of terms such as "3/2*alpha^2*b1^-1", quotient as "(n)/(d)".
std::string toString(const Poly& p);
std::string toString(const RationalFunction& f);
// Product form built from the recorded factorizations.
std::string toFactoredString(const RationalFunction& f);
std::string toLatex(const Poly& p);
std::string toLatex(const RationalFunction& f);

// Accepts + - * / ^ with integer exponents, parentheses, integers and symbol names.
RationalFunction parseExpression(std::string_view text);

// An argument of a function call: a bare identifier keeps its spelling in
// word (and a value when it also names something); other arguments only
// carry a value.
struct ParsedArg {
  std::optional<RationalFunction> value;
  std::string word;
};

// Extension points for names the symbol table does not know, and for calls
// name(arg, ...). Either hook may be empty.
struct ExpressionHooks {
  std::function<std::optional<RationalFunction>(std::string_view)> constant;
  std::function<std::optional<RationalFunction>(std::string_view, std::span<const ParsedArg>)> call;
};

RationalFunction parseExpression(std::string_view text, const ExpressionHooks& hooks);

// {"num": [[coeff, {var: exp}], ...], "den": [...]}
nlohmann::json toJson(const RationalFunction& f);
RationalFunction rationalFunctionFromJson(const nlohmann::json& j);

}  // namespace gz
