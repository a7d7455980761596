#include "gz/algebra/io.hpp"

#include <cctype>

namespace gz {
namespace {

std::string monomialText(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const int k = e[i];
    if (k == 0) continue;
    if (!out.empty()) out += "*";
    out += name(static_cast<Var>(i));
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string monomialLatex(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const int k = e[i];
    if (k == 0) continue;
    if (!out.empty()) out += " ";
    const std::string_view sym = kSymbols[i].latex;
    const bool wrap = sym.find('^') != std::string_view::npos;
    out += wrap ? "(" + std::string(sym) + ")" : std::string(sym);
    if (k != 1) out += "^{" + std::to_string(k) + "}";
  }
  return out;
}

template <class Mono>
std::string joinTerms(const Poly& p, Mono mono, bool latex) {
  if (p.isZero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    const Rational a = abs(c);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const std::string m = mono(e);
    std::string coeff;
    if (latex && a.get_den() != 1) {
      coeff = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    } else {
      coeff = a.get_str();
    }
    if (m.empty()) {
      out += coeff;
    } else if (a == 1) {
      out += m;
    } else {
      out += coeff + (latex ? " " : "*") + m;
    }
  }
  return out;
}

std::string wrapped(const std::string& s, bool needed) { return needed ? "(" + s + ")" : s; }

// Recursive-descent parser over RationalFunction arithmetic.
class Parser {
 public:
  Parser(std::string_view s, const ExpressionHooks* hooks) : s_(s), hooks_(hooks) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        r /= unary();
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    long sign = 1;
    if (accept('-')) {
      sign = -1;
    } else if (accept('(')) {
      const long k = signedInteger();
      if (!accept(')')) fail("expected ')'");
      return base.pow(k);
    }
    skip();
    return base.pow(sign * integer());
  }

  long signedInteger() {
    if (accept('-')) return -integer();
    accept('+');
    skip();
    return integer();
  }

  long integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  RationalFunction atom() {
    skip();
    if (accept('(')) {
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const auto word = s_.substr(start, pos_ - start);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        return call(word);
      }
      if (auto r = resolve(word)) return *r;
      fail("unknown symbol '" + std::string(word) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::optional<RationalFunction> resolve(std::string_view word) const {
    if (const auto v = varFromName(word)) return RationalFunction::variable(*v);
    if (hooks_ && hooks_->constant) return hooks_->constant(word);
    return std::nullopt;
  }

  bool identifierArg(std::string& word) {
    skip();
    const std::size_t save = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      skip();
      if (pos_ < s_.size() && (s_[pos_] == ',' || s_[pos_] == ')')) {
        word = std::string(s_.substr(start, pos_ - start));
        return true;
      }
    }
    pos_ = save;
    return false;
  }

  RationalFunction call(std::string_view name) {
    if (!hooks_ || !hooks_->call) fail("function calls are not available");
    std::vector<ParsedArg> args;
    if (!accept(')')) {
      do {
        ParsedArg a;
        if (identifierArg(a.word)) {
          a.value = resolve(a.word);
        } else {
          a.value = expr();
        }
        args.push_back(std::move(a));
      } while (accept(','));
      if (!accept(')')) fail("expected ')' after arguments");
    }
    auto r = hooks_->call(name, args);
    if (!r) fail("unknown function '" + std::string(name) + "'");
    return *r;
  }

  std::string_view s_;
  const ExpressionHooks* hooks_;
  std::size_t pos_ = 0;
};

nlohmann::json termsJson(const Poly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] != 0) mono[std::string(name(static_cast<Var>(i)))] = e[i];
    arr.push_back({c.get_str(), mono});
  }
  return arr;
}

Poly polyFromJson(const nlohmann::json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of terms");
  std::vector<Poly::Term> terms;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 2) throw ParseError("term must be [coeff, {var: exp}]");
    const Rational c = t[0].is_string() ? parseRational(t[0].get<std::string>()) : Rational(t[0].get<long>());
    Exponent e;
    for (const auto& [k, v] : t[1].items()) {
      const auto var = varFromName(k);
      if (!var) throw ParseError("unknown symbol '" + k + "'");
      e = e + Exponent::unit(*var, v.get<int>());
    }
    terms.emplace_back(e, c);
  }
  return Poly::fromTerms(std::move(terms));
}

std::string factoredSide(const Factorization& f, bool includeHead) {
  std::string out;
  if (includeHead) {
    const Poly head = Poly::monomial(f.shift, f.scalar);
    if (f.parts.empty() || head != Poly(1)) out = toString(head);
    if (out == "-1") out = "-";
  }
  for (const auto& fp : f.parts) {
    if (!out.empty() && out != "-") out += "*";
    out += "(" + toString(fp.factor.poly) + ")";
    if (fp.power != 1) out += "^" + std::to_string(fp.power);
  }
  return out;
}

std::string latexSide(const Factorization& f, bool includeHead) {
  std::string out;
  if (includeHead) {
    const Poly head = Poly::monomial(f.shift, f.scalar);
    if (f.parts.empty() || head != Poly(1)) out = toLatex(head);
    if (out == "-1") out = "-";
  }
  for (const auto& fp : f.parts) {
    if (!out.empty() && out != "-") out += " ";
    out += "\\left(" + toLatex(fp.factor.poly) + "\\right)";
    if (fp.power != 1) out += "^{" + std::to_string(fp.power) + "}";
  }
  return out;
}

}  // namespace

std::string toString(const Poly& p) { return joinTerms(p, monomialText, false); }

std::string toLatex(const Poly& p) { return joinTerms(p, monomialLatex, true); }

std::string toString(const RationalFunction& f) {
  const std::string n = toString(f.numerator());
  if (f.denominator() == Poly(1)) return n;
  return "(" + n + ")/(" + toString(f.denominator()) + ")";
}

std::string toFactoredString(const RationalFunction& f) {
  if (f.isZero()) return "0";
  const std::string n = factoredSide(f.numeratorFactors(), true);
  if (f.denominatorFactors().parts.empty()) return n;
  const std::string d = factoredSide(f.denominatorFactors(), false);
  const bool many = f.denominatorFactors().parts.size() > 1 || f.denominatorFactors().parts.front().power != 1;
  return wrapped(n == "-" ? "-1" : n, n.find('*') != std::string::npos && n != "-") + "/" + wrapped(d, many);
}

std::string toLatex(const RationalFunction& f) {
  if (f.isZero()) return "0";
  const std::string n = latexSide(f.numeratorFactors(), true);
  if (f.denominatorFactors().parts.empty()) return n;
  return "\\frac{" + (n == "-" ? std::string("-1") : n) + "}{" + latexSide(f.denominatorFactors(), false) + "}";
}

RationalFunction parseExpression(std::string_view text) { return Parser(text, nullptr).parse(); }

RationalFunction parseExpression(std::string_view text, const ExpressionHooks& hooks) {
  return Parser(text, &hooks).parse();
}

nlohmann::json toJson(const RationalFunction& f) {
  return {{"num", termsJson(f.numerator())}, {"den", termsJson(f.denominator())}};
}

RationalFunction rationalFunctionFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("expected {\"num\", \"den\"}");
  return RationalFunction(polyFromJson(j.at("num")), polyFromJson(j.at("den")));
}

}  // namespace gz
