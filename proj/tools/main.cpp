#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace gz::cli;
  CLI::App app{"Exact verification of GSp4 zeta-integral identities"};
  app.require_subcommand(1);

  RunConfig config;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", config.suite, "symbolic | torus | oracle | relabel | all")
      ->check(CLI::IsMember({"symbolic", "torus", "oracle", "relabel", "all"}));
  verify->add_option("--identity", config.identities, "Restrict to these report ids (repeatable)");
  verify->add_option("--prime", config.prime, "Prime for the p-adic oracle")->check(CLI::Range(2UL, 97UL));
  verify->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
  verify->add_option("--seed", config.seed, "Seed for randomized property checks");
  verify->add_option("--trials", config.trials, "Trials for randomized property checks")->check(CLI::Range(1, 100000));
  verify->add_option("--format", config.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--registry", config.registry, "JSON list of identity records replacing the built-in registry");
  verify->add_option("--max-level", config.maxLevel, "Deepest level for coset enumeration")->check(CLI::Range(1, 2));
  verify->add_option("--timeout-secs", config.timeoutSecs, "Abort with exit 1 after this many seconds")
      ->check(CLI::NonNegativeNumber);

  std::string name;
  bool latex = false;
  auto* show = app.add_subcommand("show", "Print a factor or closed form");
  show->add_option("name", name, "Factor or closed-form id")->required();
  show->add_flag("--latex", latex, "LaTeX output");

  std::string expression, params;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression at rational parameters");
  eval->add_option("expr", expression, "Expression or factor name")->required();
  eval->add_option("--params", params, "JSON object mapping variables to rationals")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmdVerify(config, std::cout);
    if (*show) return cmdShow(name, latex, std::cout);
    return cmdEval(expression, params, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
