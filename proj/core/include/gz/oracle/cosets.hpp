#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gz/oracle/group.hpp"
#include "gz/oracle/whittaker.hpp"

namespace gz {

enum class LevelKind { maximal, iwahori, siegel, klingen };

struct Level {
  Group group = Group::GSp4;
  LevelKind kind = LevelKind::maximal;
  int depth = 0;
  bool similitudeOne = false;  // intersect with {similitude = 1 mod p}

  std::string label() const;  // K, Iw(p^2), Si(p), Kl(p), K[nu=1], ...
  friend bool operator==(const Level&, const Level&) = default;
};

Level maximalLevel(Group g);
Level iwahoriLevel(Group g, int depth);
Level siegelLevel(int depth);
Level klingenLevel(int depth);

// Lattice chain whose stabilizer is the level subgroup.
std::vector<Matrix> levelChain(const Level& level, unsigned long p);
bool inLevel(const PGroupElement& g, const Level& level);
// Canonical invariant of the left coset g * U.
std::vector<Matrix> cosetKey(const PGroupElement& g, const Level& level);
// Topological generators of the level subgroup.
std::vector<PGroupElement> levelGenerators(const Level& level, unsigned long p);

struct CosetSystem {
  std::string operatorName;
  Level level;
  unsigned long prime = 0;
  std::vector<PGroupElement> representatives;

  nlohmann::json toJson() const;
};

// Operators: U, U' (GL2); U1, U1', U2, U2' (GSp4 Iwahori, Siegel or Klingen
// level); T10 = K t10 K; KmodKl; traceIw (GL2 Iw(p^(n-1)) over Iw(p^n));
// traceKlDual, traceIwDual (translates k g with g = s01 J resp. s11 J).
// Throws std::logic_error when the enumeration has the wrong size or fails
// the completeness test.
CosetSystem enumerateCosets(const std::string& name, const Level& level, unsigned long p);

// Expected number of representatives.
std::size_t expectedCosetCount(const std::string& name, const Level& level, unsigned long p);

Whittaker heckeTranslate(const CosetSystem& system, Whittaker w, RationalFunction scale = RationalFunction(1));

}  // namespace gz
