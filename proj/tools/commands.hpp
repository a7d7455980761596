#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gz::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string suite = "all";
  std::vector<std::string> identities;
  unsigned long prime = 2;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  int trials = 100;
  std::string format = "text";
  std::string registry;
  int maxLevel = 1;
  int timeoutSecs = 0;
};

int cmdVerify(const RunConfig& config, std::ostream& out);
int cmdShow(const std::string& name, bool latex, std::ostream& out);
int cmdEval(const std::string& expression, const std::string& paramsFile, std::ostream& out);

}  // namespace gz::cli
