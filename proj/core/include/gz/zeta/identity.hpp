#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "gz/zeta/formula.hpp"

namespace gz {

enum class Method { exactEquality, conditionalEquality, congruenceAtQ1 };
enum class Status { verified, failed, conditional, skipped };

std::string_view methodName(Method m);
Method methodFromName(std::string_view s);
std::string_view statusName(Status s);

// A named claim lhs == rhs. Both sides are formulas in the registry language.
struct IdentityRecord {
  std::string id;
  std::string suite;  // symbolic, relabel, ...
  std::string lhs;
  std::string rhs;
  Method method = Method::exactEquality;
  std::string anchor;
  bool expectConditional = false;
};

struct VerificationReport {
  std::string id;
  Status status = Status::skipped;
  std::string method;
  double elapsedMs = 0;
  std::string anchor;
  std::string witness;
  bool expectConditional = false;

  // verified, or conditional when the record says so
  bool passed() const;
};

nlohmann::json toJson(const IdentityRecord& r);
IdentityRecord identityFromJson(const nlohmann::json& j);
nlohmann::json toJson(const VerificationReport& r);

// Built-in registry of symbolic and relabel identities.
const std::vector<IdentityRecord>& defaultRegistry();
std::vector<IdentityRecord> loadRegistry(const nlohmann::json& list);

VerificationReport verifyIdentity(const IdentityRecord& record, const FormulaContext& ctx);

// A monomial relation u = 1 under which lhs == rhs, searched among pairs of
// binomial factors of lhs / rhs. Returns the substitution that imposes it.
struct MonomialRelation {
  Exponent u;
  Var solvedFor;
  RationalFunction image;
};
std::optional<MonomialRelation> findMonomialRelation(const RationalFunction& lhs, const RationalFunction& rhs);

// Records of the relabel suite.
std::vector<VerificationReport> relabelChecks(const FormulaContext& ctx);

// Laurent-polynomiality of gejimaValue on [0, bound]^4, as a single report.
VerificationReport polynomialityCheck(int bound);

}  // namespace gz
