#include "commands.hpp"

#include <algorithm>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <set>
#include <thread>

#include "gz/algebra/evaluate.hpp"
#include "gz/algebra/io.hpp"
#include "gz/check/properties.hpp"
#include "gz/euler/factors.hpp"
#include "gz/oracle/index.hpp"
#include "gz/oracle/verify.hpp"
#include "gz/util/parallel.hpp"
#include "gz/zeta/closed_forms.hpp"
#include "gz/zeta/identity.hpp"

namespace gz::cli {
namespace {

using Filter = std::vector<std::string>;

struct Suite {
  std::string name;
  std::vector<std::string> ids;
  std::function<std::vector<VerificationReport>(const Filter&)> run;
};

bool wanted(const Filter& only, const std::string& id) {
  return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
}

std::vector<IdentityRecord> loadRecords(const std::string& path) {
  if (path.empty()) return defaultRegistry();
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open registry file " + path);
  try {
    return loadRegistry(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed registry file " + path + ": " + e.what());
  }
}

Suite registrySuite(const std::string& name, const std::vector<IdentityRecord>& all, unsigned jobs) {
  std::vector<IdentityRecord> records;
  std::copy_if(all.begin(), all.end(), std::back_inserter(records), [&](const auto& r) { return r.suite == name; });
  Suite s{name, {}, {}};
  for (const auto& r : records) s.ids.push_back(r.id);
  s.run = [records, jobs](const Filter& only) {
    std::vector<IdentityRecord> chosen;
    std::copy_if(records.begin(), records.end(), std::back_inserter(chosen),
                 [&](const auto& r) { return wanted(only, r.id); });
    const FormulaContext ctx;
    return parallelMap(chosen.size(), jobs, [&](std::size_t i) { return verifyIdentity(chosen[i], ctx); });
  };
  return s;
}

Suite symbolicSuite(const RunConfig& c, const std::vector<IdentityRecord>& all) {
  Suite s = registrySuite("symbolic", all, c.jobs);
  const std::vector<std::string> extra{"gejima-polynomiality", "property-canonical-form", "property-weyl-closure",
                                       "property-character-sums"};
  s.ids.insert(s.ids.end(), extra.begin(), extra.end());
  s.run = [base = s.run, c](const Filter& only) {
    auto out = base(only);
    if (wanted(only, "gejima-polynomiality")) out.push_back(polynomialityCheck(2));
    if (wanted(only, "property-canonical-form")) out.push_back(canonicalFormCheck(c.seed, c.trials));
    if (wanted(only, "property-weyl-closure")) out.push_back(weylClosureCheck());
    if (wanted(only, "property-character-sums")) out.push_back(characterSumCheck(c.seed));
    return out;
  };
  return s;
}

Suite oracleSuite(const RunConfig& c) {
  const unsigned long p = c.prime;
  const std::string orbit = "open-orbit-p" + std::to_string(p);
  Suite s{"oracle", localVectorCheckIds(), {}};
  const auto local = s.ids;
  const auto cosets = cosetCheckIds(p, c.maxLevel), index = indexCheckIds(p);
  s.ids.push_back(orbit);
  s.ids.insert(s.ids.end(), cosets.begin(), cosets.end());
  s.ids.insert(s.ids.end(), index.begin(), index.end());
  s.run = [=](const Filter& only) {
    auto touches = [&](const std::vector<std::string>& ids) {
      return std::any_of(ids.begin(), ids.end(), [&](const auto& id) { return wanted(only, id); });
    };
    std::vector<VerificationReport> out;
    auto append = [&](std::vector<VerificationReport> more) { out.insert(out.end(), more.begin(), more.end()); };
    if (touches(local)) append(verifyLocalVectors(p, static_cast<int>(c.jobs), only));
    if (wanted(only, orbit)) out.push_back(openOrbitCount(p));
    if (touches(cosets)) append(cosetCardinalityChecks(p, c.maxLevel, only));
    if (touches(index)) {
      if (p <= 3) {
        append(indexChecks(p, only));
      } else {
        for (const auto& id : index) {
          if (!wanted(only, id)) continue;
          VerificationReport r;
          r.id = id;
          r.method = "oracle";
          r.anchor = "volume index";
          r.witness = "index enumeration is limited to p in {2, 3}";
          out.push_back(r);
        }
      }
    }
    return out;
  };
  return s;
}

std::vector<Suite> selectSuites(const RunConfig& c) {
  static const std::set<std::string> names{"symbolic", "torus", "oracle", "relabel", "all"};
  if (!names.contains(c.suite)) throw UsageError("unknown suite " + c.suite);
  const bool all = c.suite == "all";
  if ((all || c.suite == "oracle") && c.prime != 2 && c.prime != 3 && c.prime != 5)
    throw UsageError("the oracle suite needs --prime 2, 3 or 5");
  const auto records = loadRecords(c.registry);
  std::vector<Suite> out;
  if (all || c.suite == "symbolic") out.push_back(symbolicSuite(c, records));
  if (all || c.suite == "torus") out.push_back(registrySuite("torus", records, c.jobs));
  if (all || c.suite == "relabel") out.push_back(registrySuite("relabel", records, c.jobs));
  if (all || c.suite == "oracle") out.push_back(oracleSuite(c));
  return out;
}

// Terminates the process with exit code 1 once the deadline passes.
class Watchdog {
 public:
  explicit Watchdog(int seconds) {
    if (seconds <= 0) return;
    thread_ = std::jthread([seconds](std::stop_token stop) {
      std::mutex m;
      std::condition_variable_any cv;
      std::unique_lock lock(m);
      cv.wait_for(lock, stop, std::chrono::seconds(seconds), [] { return false; });
      if (stop.stop_requested()) return;
      std::cerr << "timeout: verification exceeded " << seconds << " s\n";
      std::_Exit(kFailure);
    });
  }

 private:
  std::jthread thread_;
};

void printText(const std::vector<VerificationReport>& reports, std::ostream& out) {
  std::map<Status, int> counts;
  for (const auto& r : reports) {
    ++counts[r.status];
    out << statusName(r.status) << ' ' << r.id << " [" << r.method << ", " << static_cast<long long>(r.elapsedMs)
        << " ms]";
    if (!r.witness.empty()) out << " :: " << r.witness;
    out << '\n';
  }
  out << reports.size() << " reports:";
  for (Status s : {Status::verified, Status::conditional, Status::failed, Status::skipped})
    out << ' ' << counts[s] << ' ' << statusName(s);
  out << '\n';
}

std::string canonicalName(const std::string& name) {
  static const std::map<std::string, std::string, std::less<>> aliases{
      {"𝓔", "E"},          {"calE", "E"},       {"Δ0", "Delta0"},     {"Δ₀", "Delta0"}, {"Δ1", "Delta1"},
      {"Δ₁", "Delta1"},    {"Δ2", "Delta2"},    {"Δ₂", "Delta2"},     {"P_pi", "Ppi"},  {"P_π", "Ppi"},
      {"P_pi_sigma2", "PpiSigma2"},             {"P_{pi x sigma2}", "PpiSigma2"},       {"B_Kl", "BKl"},
      {"E_Kl", "EKl"},     {"𝓔_Kl", "EKl"},     {"𝓑_Kl", "BKl"}};
  const auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

RationalPoint readParams(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open params file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed params file: " + std::string(e.what()));
  }
  if (!j.is_object()) throw UsageError("params file must be a JSON object");
  RationalPoint point;
  for (const auto& [key, value] : j.items()) {
    const auto v = varFromName(key);
    if (!v) throw UsageError("unknown variable " + key);
    try {
      point[*v] = value.is_string() ? parseRational(value.get<std::string>()) : Rational(value.get<long>());
    } catch (const std::exception&) {
      throw UsageError("value of " + key + " is not a rational number");
    }
  }
  return point;
}

}  // namespace

int cmdVerify(const RunConfig& config, std::ostream& out) {
  if (config.format != "text" && config.format != "json") throw UsageError("unknown format " + config.format);
  const auto suites = selectSuites(config);
  std::set<std::string> known;
  for (const auto& s : suites) known.insert(s.ids.begin(), s.ids.end());
  for (const auto& id : config.identities)
    if (!known.contains(id)) throw UsageError("unknown identity id " + id);

  const Watchdog watchdog(config.timeoutSecs);
  std::vector<VerificationReport> reports;
  for (const auto& s : suites) {
    Filter only;
    if (!config.identities.empty()) {
      for (const auto& id : config.identities)
        if (std::find(s.ids.begin(), s.ids.end(), id) != s.ids.end()) only.push_back(id);
      if (only.empty()) continue;
    }
    auto more = s.run(only);
    reports.insert(reports.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  if (config.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : reports) list.push_back(toJson(r));
    out << list.dump(2) << '\n';
  } else {
    printText(reports, out);
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.status == Status::skipped || r.passed(); });
  return ok ? kOk : kFailure;
}

int cmdShow(const std::string& name, bool latex, std::ostream& out) {
  const std::string key = canonicalName(name);
  const auto render = [latex](const RationalFunction& f) { return latex ? toLatex(f) : toFactoredString(f); };
  const auto factors = factorNames();
  if (std::find(factors.begin(), factors.end(), key) != factors.end()) {
    out << render(factor(key)) << '\n';
    return kOk;
  }
  const auto ids = specialCaseIds();
  if (std::find(ids.begin(), ids.end(), key) != ids.end()) {
    const ZetaClosedForm form = specialCase(key);
    if (!latex) out << form.descriptor << '\n';
    out << render(form.value) << '\n';
    return kOk;
  }
  std::string list;
  for (const auto& n : factors) list += " " + n;
  for (const auto& n : ids) list += " " + n;
  throw UsageError("unknown name " + name + "; known:" + list);
}

int cmdEval(const std::string& expression, const std::string& paramsFile, std::ostream& out) {
  const RationalPoint point = readParams(paramsFile);
  const FormulaContext ctx;
  RationalFunction f;
  try {
    f = ctx.evaluate(canonicalName(expression));
  } catch (const std::exception& e) {
    throw UsageError("cannot parse expression: " + std::string(e.what()));
  }
  try {
    out << toString(evaluate(f, point)) << '\n';
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "missing variable: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace gz::cli
