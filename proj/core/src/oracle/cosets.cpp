#include "gz/oracle/cosets.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "gz/oracle/decompose.hpp"

namespace gz {
namespace {

Rational pPower(unsigned long p, int e) { return powRational(Rational(static_cast<long>(p)), e); }

std::size_t ipow(unsigned long p, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Minimal valuation of entry (i, j) for elements of the level subgroup.
int requiredValuation(const Level& level, std::size_t i, std::size_t j) {
  const std::size_t last = level.group == Group::GL2 ? 1 : 3;
  switch (level.kind) {
    case LevelKind::maximal: return 0;
    case LevelKind::iwahori: return i > j ? level.depth : 0;
    case LevelKind::siegel: return i >= 2 && j <= 1 ? level.depth : 0;
    case LevelKind::klingen: return (j == 0 && i > 0) || (i == last && j < last) ? level.depth : 0;
  }
  return 0;
}

PGroupElement root(Group g, std::size_t i, std::size_t j, const Rational& x, unsigned long p) {
  return rootElement(g, i, j, x, p);
}

using Family = std::function<void(const std::function<void(const PGroupElement&)>&)>;

// Products x_{i1 j1}(s1 a1) x_{i2 j2}(s2 a2) ... base with a_k in [0, range_k).
struct Factor {
  std::size_t i, j;
  Rational scale;
  std::size_t range;
};

void unipotentFamily(Group g, unsigned long p, const std::vector<Factor>& factors, const PGroupElement& base,
                     const std::function<void(const PGroupElement&)>& emit) {
  std::function<void(std::size_t, const PGroupElement&)> rec = [&](std::size_t k, const PGroupElement& acc) {
    if (k == factors.size()) {
      emit(acc * base);
      return;
    }
    const Factor& f = factors[k];
    for (std::size_t a = 0; a < f.range; ++a)
      rec(k + 1, acc * root(g, f.i, f.j, f.scale * static_cast<long>(a), p));
  };
  rec(0, PGroupElement::identity(g, p));
}

struct Recipe {
  Level ambient;            // group whose left action permutes the cosets
  PGroupElement base;       // the coset system contains base * U
  Family family;
  std::size_t expected;
};

Recipe recipe(const std::string& name, const Level& level, unsigned long p) {
  const Group g = level.group;
  const int m = level.depth;
  const Rational pm = pPower(p, m);
  auto family = [g, p](std::vector<Factor> factors, PGroupElement base) -> Family {
    return [=](const std::function<void(const PGroupElement&)>& emit) { unipotentFamily(g, p, factors, base, emit); };
  };
  auto requireGroup = [&](Group want) {
    if (g != want) throw std::invalid_argument(name + " is not defined for " + std::string(groupName(g)));
  };
  const bool parahoric = level.kind != LevelKind::maximal && m >= 1;
  if (name == "U" || name == "U'") {
    requireGroup(Group::GL2);
    if (!parahoric || level.kind != LevelKind::iwahori) throw std::invalid_argument(name + " needs an Iwahori level");
    if (name == "U") return {level, tGL2(1, p), family({{0, 1, 1, p}}, tGL2(1, p)), p};
    return {level, sGL2(1, p), family({{1, 0, pm, p}}, sGL2(1, p)), p};
  }
  if (name == "traceIw") {
    requireGroup(Group::GL2);
    if (level.kind != LevelKind::iwahori || m < 2) throw std::invalid_argument("traceIw needs Iw(p^n), n >= 2");
    const auto id = PGroupElement::identity(g, p);
    return {iwahoriLevel(g, m - 1), id, family({{1, 0, pPower(p, m - 1), p}}, id), p};
  }
  requireGroup(Group::GSp4);
  if (name == "U1" || name == "U2" || name == "U1'" || name == "U2'") {
    if (!parahoric) throw std::invalid_argument(name + " needs a parahoric level");
    if (name == "U1") return {level, tElement(1, 0, p), family({{1, 2, 1, p}, {0, 2, 1, p}, {0, 3, 1, p}}, tElement(1, 0, p)), ipow(p, 3)};
    if (name == "U2")
      return {level, tElement(0, 1, p), family({{0, 1, 1, p}, {0, 2, 1, p}, {0, 3, 1, ipow(p, 2)}}, tElement(0, 1, p)), ipow(p, 4)};
    if (name == "U1'")
      return {level, sElement(1, 0, p), family({{2, 1, pm, p}, {2, 0, pm, p}, {3, 0, pm, p}}, sElement(1, 0, p)), ipow(p, 3)};
    return {level, sElement(0, 1, p), family({{1, 0, pm, p}, {2, 0, pm, p}, {3, 0, pm, ipow(p, 2)}}, sElement(0, 1, p)),
            ipow(p, 4)};
  }
  const std::vector<Factor> bigCell{{0, 1, 1, p}, {1, 2, 1, p}, {0, 2, 1, p}, {0, 3, 1, p}};
  auto weylTimes = [p](std::vector<Factor> factors, PGroupElement base) -> Family {
    return [=](const std::function<void(const PGroupElement&)>& emit) {
      for (const auto& w : weylRepresentatives(Group::GSp4, p))
        unipotentFamily(Group::GSp4, p, factors, base, [&](const PGroupElement& x) { emit(w * x); });
    };
  };
  const std::size_t flags = (1 + p) * (1 + p * p);
  if (name == "T10") {
    if (level.kind != LevelKind::maximal) throw std::invalid_argument("T10 needs the maximal level");
    return {level, tElement(1, 0, p), weylTimes(bigCell, tElement(1, 0, p)), flags};
  }
  if (name == "KmodKl") {
    if (level != klingenLevel(1)) throw std::invalid_argument("KmodKl needs level Kl(p)");
    const auto id = PGroupElement::identity(g, p);
    Family unipotentTimesWeyl = [p, bigCell](const std::function<void(const PGroupElement&)>& emit) {
      for (const auto& w : weylRepresentatives(Group::GSp4, p)) unipotentFamily(Group::GSp4, p, bigCell, w, emit);
    };
    return {maximalLevel(g), id, unipotentTimesWeyl, flags};
  }
  if (name == "traceKlDual") {
    if (level != klingenLevel(1)) throw std::invalid_argument("traceKlDual needs level Kl(p)");
    const PGroupElement base = sElement(0, 1, p) * jElement(g, p);
    return {level, base, family({{3, 0, Rational(static_cast<long>(p)), p}}, base), p};
  }
  if (name == "traceIwDual") {
    if (level != iwahoriLevel(g, 1)) throw std::invalid_argument("traceIwDual needs level Iw(p)");
    const PGroupElement base = sElement(1, 1, p) * jElement(g, p);
    const Rational pp(static_cast<long>(p));
    return {level, base, family({{2, 0, pp, p}, {3, 0, pp, ipow(p, 2)}}, base), ipow(p, 3)};
  }
  throw std::invalid_argument("unknown coset system " + name);
}

std::string cacheKey(const std::string& name, const Level& level, unsigned long p) {
  return std::string(groupName(level.group)) + "_" + name + "_" + level.label() + "_" + std::to_string(p);
}

std::optional<CosetSystem> loadCached(const std::string& key, const std::string& name, const Level& level,
                                      unsigned long p) {
  const char* dir = std::getenv("GZ_COSET_CACHE");
  if (dir == nullptr) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir) / (key + ".json"));
  if (!in) return std::nullopt;
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("representatives")) return std::nullopt;
  CosetSystem s{name, level, p, {}};
  for (const auto& m : j["representatives"]) s.representatives.emplace_back(level.group, Matrix::fromJson(m), p);
  return s;
}

void storeCached(const std::string& key, const CosetSystem& s) {
  const char* dir = std::getenv("GZ_COSET_CACHE");
  if (dir == nullptr) return;
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / (key + ".json")) << s.toJson().dump(1) << "\n";
}

CosetSystem computeCosets(const std::string& name, const Level& level, unsigned long p) {
  const Recipe r = recipe(name, level, p);
  std::map<std::vector<Matrix>, PGroupElement> found;
  const PGroupElement baseInverse = r.base.inverse();
  r.family([&](const PGroupElement& x) {
    if (!inLevel(x * baseInverse, r.ambient))
      throw std::logic_error(name + ": candidate outside the double coset: " + x.matrix().toString());
    found.try_emplace(cosetKey(x, level), x);
  });
  if (found.size() != r.expected)
    throw std::logic_error(name + " at " + level.label() + ": found " + std::to_string(found.size()) +
                           " cosets, expected " + std::to_string(r.expected));
  // The ambient group acts transitively, so closure under its generators
  // shows that nothing is missing.
  for (const PGroupElement& gen : levelGenerators(r.ambient, p))
    for (const auto& [key, x] : found)
      if (!found.contains(cosetKey(gen * x, level)))
        throw std::logic_error(name + " at " + level.label() + ": coset system is not closed");
  CosetSystem s{name, level, p, {}};
  for (auto& [key, x] : found) s.representatives.push_back(x);
  return s;
}

}  // namespace

std::string Level::label() const {
  const std::string nu = similitudeOne ? "[nu=1]" : "";
  if (kind == LevelKind::maximal) return "K" + nu;
  const char* prefix = kind == LevelKind::iwahori ? "Iw" : kind == LevelKind::siegel ? "Si" : "Kl";
  return std::string(prefix) + "(p" + (depth == 1 ? std::string() : "^" + std::to_string(depth)) + ")" + nu;
}

Level maximalLevel(Group g) { return {g, LevelKind::maximal, 0}; }
Level iwahoriLevel(Group g, int depth) { return {g, LevelKind::iwahori, depth}; }
Level siegelLevel(int depth) { return {Group::GSp4, LevelKind::siegel, depth}; }
Level klingenLevel(int depth) { return {Group::GSp4, LevelKind::klingen, depth}; }

std::vector<Matrix> levelChain(const Level& level, unsigned long p) {
  const std::size_t n = level.group == Group::GL2 ? 2 : 4;
  std::vector<Matrix> chain{Matrix::identity(n)};
  if (level.kind == LevelKind::maximal || level.depth == 0) return chain;
  const Rational pm = pPower(p, level.depth);
  auto step = [&](std::size_t from) {
    std::vector<Rational> d(n, Rational(1));
    for (std::size_t i = from; i < n; ++i) d[i] = pm;
    chain.push_back(Matrix::diagonal(d));
  };
  switch (level.kind) {
    case LevelKind::iwahori:
      for (std::size_t i = 1; i < n; ++i) step(i);
      break;
    case LevelKind::siegel: step(2); break;
    case LevelKind::klingen: step(1); break;
    case LevelKind::maximal: break;
  }
  return chain;
}

std::vector<Matrix> cosetKey(const PGroupElement& g, const Level& level) {
  const unsigned long p = g.prime();
  std::vector<Matrix> key;
  for (const Matrix& d : levelChain(level, p)) key.push_back(latticeKey(g.matrix() * d, p));
  if (level.similitudeOne) {
    const Rational nu = g.similitude();
    const Rational unit = nu / powRational(Rational(static_cast<long>(p)), valuation(nu, p));
    key.emplace_back(1, std::vector<Rational>{Rational(residue(unit, p, 1))});
  }
  return key;
}

bool inLevel(const PGroupElement& g, const Level& level) {
  if (!g.isIntegral()) return false;
  return cosetKey(g, level) == cosetKey(PGroupElement::identity(level.group, g.prime()), level);
}

std::vector<PGroupElement> levelGenerators(const Level& level, unsigned long p) {
  const Group g = level.group;
  const std::size_t n = g == Group::GL2 ? 2 : 4;
  std::vector<PGroupElement> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) gens.push_back(rootElement(g, i, j, pPower(p, requiredValuation(level, i, j)), p));
  std::vector<long> units{-1};
  for (unsigned long u = 2; u < p * p; ++u)
    if (u % p != 0) units.push_back(static_cast<long>(u));
  for (long u : units) {
    const Rational x(u), one(1);
    if (g == Group::GL2) {
      gens.emplace_back(g, Matrix::diagonal({x, one}), p);
      gens.emplace_back(g, Matrix::diagonal({one, x}), p);
    } else {
      gens.emplace_back(g, Matrix::diagonal({x, one, one, 1 / x}), p);
      gens.emplace_back(g, Matrix::diagonal({one, x, 1 / x, one}), p);
      gens.emplace_back(g, Matrix::diagonal({one, one, x, x}), p);
    }
  }
  return gens;
}

nlohmann::json CosetSystem::toJson() const {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : representatives) reps.push_back(r.matrix().toJson());
  return {{"group", groupName(level.group)}, {"operator", operatorName}, {"level", level.label()},
          {"prime", prime}, {"representatives", reps}};
}

std::size_t expectedCosetCount(const std::string& name, const Level& level, unsigned long p) {
  return recipe(name, level, p).expected;
}

CosetSystem enumerateCosets(const std::string& name, const Level& level, unsigned long p) {
  static std::mutex mutex;
  static std::map<std::string, CosetSystem> memo;
  const std::string key = cacheKey(name, level, p);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::optional<CosetSystem> s = loadCached(key, name, level, p);
  if (!s || s->representatives.size() != expectedCosetCount(name, level, p)) {
    s = computeCosets(name, level, p);
    storeCached(key, *s);
  }
  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(*s)).first->second;
}

Whittaker heckeTranslate(const CosetSystem& system, Whittaker w, RationalFunction scale) {
  return heckeSum(std::move(w), system.representatives, std::move(scale));
}

}  // namespace gz
