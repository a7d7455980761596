#include "gz/zeta/formula.hpp"

#include "gz/euler/factors.hpp"
#include "gz/euler/relabel.hpp"
#include "gz/torus/sequence.hpp"
#include "gz/zeta/closed_forms.hpp"

namespace gz {

const RationalFunction& valueArg(std::span<const ParsedArg> args, std::size_t i) {
  if (!args[i].value) throw ParseError("argument " + std::to_string(i + 1) + " ('" + args[i].word + "') has no value");
  return *args[i].value;
}

long intArg(std::span<const ParsedArg> args, std::size_t i) {
  const RationalFunction& v = valueArg(args, i);
  if (!v.isConstant() || v.constantValue().get_den() != 1)
    throw ParseError("argument " + std::to_string(i + 1) + " must be an integer");
  return v.constantValue().get_num().get_si();
}

const std::string& wordArg(std::span<const ParsedArg> args, std::size_t i) {
  if (args[i].word.empty()) throw ParseError("argument " + std::to_string(i + 1) + " must be a name");
  return args[i].word;
}

void expectArgs(std::span<const ParsedArg> args, std::size_t lo, std::size_t hi, std::string_view name) {
  if (args.size() < lo || args.size() > hi)
    throw ParseError("wrong number of arguments to " + std::string(name) + "()");
}

FormulaContext::FormulaContext() {
  defineConstant("gamma", paramExpr(Param::gamma));
  defineConstant("delta", paramExpr(Param::delta));
  for (const auto& n : factorNames()) defineConstant(n, factor(n));

  using Args = std::span<const ParsedArg>;
  auto four = [](Args a, std::size_t off) {
    return std::array<int, 4>{static_cast<int>(intArg(a, off)), static_cast<int>(intArg(a, off + 1)),
                              static_cast<int>(intArg(a, off + 2)), static_cast<int>(intArg(a, off + 3))};
  };
  define("gejima", [four](Args a) {
    expectArgs(a, 4, 4, "gejima");
    const auto t = four(a, 0);
    return gejimaValue(t[0], t[1], t[2], t[3]);
  });
  define("pstab", [four](Args a) {
    expectArgs(a, 4, 4, "pstab");
    const auto t = four(a, 0);
    return pstabValue(t[0], t[1], t[2], t[3]);
  });
  define("variant", [four](Args a) {
    expectArgs(a, 5, 5, "variant");
    const auto t = four(a, 1);
    return variantValue(static_cast<int>(intArg(a, 0)), t[0], t[1], t[2], t[3]);
  });
  define("special", [](Args a) {
    expectArgs(a, 1, 4, "special");
    int k[3] = {0, 0, 0};
    for (std::size_t i = 1; i < a.size(); ++i) k[i - 1] = static_cast<int>(intArg(a, i));
    return specialCase(wordArg(a, 0), k[0], k[1], k[2]).value;
  });
  // torus(rho, n, w1, x1, w2, x2): Klingen pipeline with t-shifted GL2 sequences
  define("torus", [](Args a) {
    expectArgs(a, 6, 6, "torus");
    const auto seq = [&](std::size_t i, int n, int factor) {
      return gl2Sequence(gl2SpecFromName(wordArg(a, i), n, factor));
    };
    const int n = static_cast<int>(intArg(a, 1));
    return klingenPipelineValue(seq(0, n, 1), shiftSequence(seq(2, n, 1), ShiftKind::t, intArg(a, 3)),
                                shiftSequence(seq(4, n, 2), ShiftKind::t, intArg(a, 5)));
  });
  define("weyl0", [](Args a) {
    expectArgs(a, 1, 1, "weyl0");
    return weylSum(weylGroupGSp4(), valueArg(a, 0));
  });
  define("weyl02", [](Args a) {
    expectArgs(a, 1, 1, "weyl02");
    std::vector<WeylTriple> g;
    for (const auto& t : weylTriples())
      if (!t.w1) g.push_back(t);
    return weylSum(g, valueArg(a, 0));
  });
  define("weyl", [](Args a) {
    expectArgs(a, 1, 1, "weyl");
    return weylSum(weylTriples(), valueArg(a, 0));
  });
  define("apply", [](Args a) {
    expectArgs(a, 2, 2, "apply");
    return applyWeyl(weylFromLabel(wordArg(a, 0)), valueArg(a, 1));
  });
  define("swap1", [](Args a) {
    expectArgs(a, 1, 1, "swap1");
    return applyWeyl(GL2Swaps{true, false}, valueArg(a, 0));
  });
  define("swap2", [](Args a) {
    expectArgs(a, 1, 1, "swap2");
    return applyWeyl(GL2Swaps{false, true}, valueArg(a, 0));
  });
  define("relabel", [](Args a) {
    expectArgs(a, 2, 2, "relabel");
    return relabel(tableFromName(wordArg(a, 0)), valueArg(a, 1));
  });
  define("param", [](Args a) {
    expectArgs(a, 2, 2, "param");
    const std::string& w = wordArg(a, 1);
    const std::map<std::string, Param, std::less<>> names{
        {"alpha", Param::alpha}, {"beta", Param::beta}, {"gamma", Param::gamma}, {"delta", Param::delta}};
    const auto it = names.find(w);
    if (it == names.end()) throw ParseError("param() expects alpha, beta, gamma or delta");
    return relabeledParam(tableFromName(wordArg(a, 0)), it->second);
  });
  for (const char* n : {"Ppi", "PpiSigma2"}) {
    define(n, [name = std::string(n)](Args a) {
      expectArgs(a, 1, 1, name);
      return lPolynomial(name, valueArg(a, 0));
    });
  }
  define("q1", [](Args a) {
    expectArgs(a, 1, 1, "q1");
    return reduceAtQ1(valueArg(a, 0));
  });
  define("sub", [](Args a) {
    expectArgs(a, 3, 3, "sub");
    const auto v = varFromName(wordArg(a, 1));
    if (!v) throw ParseError("sub() expects a symbol name");
    return substitute(valueArg(a, 0), {{*v, valueArg(a, 2)}});
  });
}

void FormulaContext::define(std::string name, Function fn) { functions_[std::move(name)] = std::move(fn); }

void FormulaContext::defineConstant(std::string name, RationalFunction value) {
  constants_[std::move(name)] = std::move(value);
}

RationalFunction FormulaContext::evaluate(std::string_view text) const {
  ExpressionHooks hooks;
  hooks.constant = [this](std::string_view w) -> std::optional<RationalFunction> {
    const auto it = constants_.find(w);
    if (it == constants_.end()) return std::nullopt;
    return it->second;
  };
  hooks.call = [this](std::string_view n, std::span<const ParsedArg> args) -> std::optional<RationalFunction> {
    const auto it = functions_.find(n);
    if (it == functions_.end()) return std::nullopt;
    return it->second(args);
  };
  return parseExpression(text, hooks);
}

std::vector<std::string> FormulaContext::functionNames() const {
  std::vector<std::string> out;
  for (const auto& [n, f] : functions_) out.push_back(n);
  return out;
}

}  // namespace gz
