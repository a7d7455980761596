#include "gz/oracle/index.hpp"

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "gz/oracle/decompose.hpp"

namespace gz {
namespace {

// |V_n| / |{v in V_n : g^-1 v g in U}| over the canonical lifts of V mod p^n.
// Central scalars lie in U unless the similitude is constrained, so they are
// divided out of the Borel enumeration.
std::size_t countCosets(const PGroupElement& g, const Level& level, HSubgroup v, int n) {
  const unsigned long p = g.prime();
  const long pl = static_cast<long>(p);
  long modulus = 1;
  for (int i = 0; i < n; ++i) modulus *= pl;
  const Matrix gi = g.inverse().matrix();
  const Matrix gm = g.matrix();
  std::size_t total = 0, stabilizer = 0;
  auto visit = [&](const Matrix& h1, const Matrix& h2) {
    ++total;
    if (inLevel(PGroupElement(Group::GSp4, gi * embedH(h1, h2, p).matrix() * gm, p), level)) ++stabilizer;
  };
  auto m2 = [](const Rational& a, const Rational& b, const Rational& d) { return Matrix(2, {a, b, Rational(0), d}); };
  const bool quotientScalars = v == HSubgroup::borel && !level.similitudeOne;
  for (long a = 1; a < modulus; ++a) {
    if (a % pl == 0) continue;
    if (quotientScalars && a != 1) break;
    for (long b = 0; b < modulus; ++b)
      for (long b2 = 0; b2 < modulus; ++b2) {
        if (v == HSubgroup::mirabolic) {
          visit(m2(a, b, 1), m2(a, b2, 1));
          continue;
        }
        for (long d = 1; d < modulus; ++d) {
          if (d % pl == 0) continue;
          for (long a2 = 1; a2 < modulus; ++a2)
            if (a2 % pl != 0) visit(m2(a, b, d), m2(a2, b2, Rational(a * d) / a2));
        }
      }
  }
  // At too low a precision the lifts in U need not form a subgroup mod p^n.
  if (stabilizer == 0 || total % stabilizer != 0) return 0;
  return total / stabilizer;
}

}  // namespace

PGroupElement embedH(const Matrix& h1, const Matrix& h2, unsigned long p) {
  const Rational z(0);
  return PGroupElement(Group::GSp4,
                       Matrix(4, {h1(0, 0), z, z, h1(0, 1),  //
                                  z, h2(0, 0), h2(0, 1), z,  //
                                  z, h2(1, 0), h2(1, 1), z,  //
                                  h1(1, 0), z, z, h1(1, 1)}),
                       p);
}

std::size_t orbitIndex(const PGroupElement& g, const Level& level, HSubgroup v, std::size_t limit) {
  const unsigned long p = g.prime();
  const Rational one(1), zero(0);
  auto m2 = [](const Rational& a, const Rational& b, const Rational& d) { return Matrix(2, {a, b, Rational(0), d}); };
  std::vector<PGroupElement> gens{embedH(m2(one, one, one), Matrix::identity(2), p),
                                  embedH(Matrix::identity(2), m2(one, one, one), p)};
  std::vector<long> units{-1};
  for (unsigned long u = 2; u < p * p; ++u)
    if (u % p != 0) units.push_back(static_cast<long>(u));
  for (long u : units) {
    const Rational x(u);
    gens.push_back(embedH(m2(x, zero, one), m2(x, zero, one), p));
    if (v == HSubgroup::borel) {
      gens.push_back(embedH(m2(one, zero, x), m2(one, zero, x), p));
      gens.push_back(embedH(m2(x, zero, one), m2(one, zero, x), p));
    }
  }
  std::map<std::vector<Matrix>, PGroupElement> orbit;
  std::vector<PGroupElement> frontier{g};
  orbit.emplace(cosetKey(g, level), g);
  while (!frontier.empty()) {
    std::vector<PGroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        PGroupElement y = s * x;
        if (orbit.try_emplace(cosetKey(y, level), y).second) next.push_back(std::move(y));
      }
    if (orbit.size() > limit) throw std::runtime_error("orbit exceeds " + std::to_string(limit) + " cosets");
    frontier = std::move(next);
  }
  return orbit.size();
}

std::size_t enumerationIndex(const PGroupElement& g, const Level& level, HSubgroup v, int n) {
  if (n < 1) throw std::invalid_argument("precision must be at least 1");
  return countCosets(g, level, v, n);
}

IndexResult subgroupIndex(const PGroupElement& g, const Level& level, HSubgroup v, int n) {
  if (n < 1) throw std::invalid_argument("precision must be at least 1");
  return {countCosets(g, level, v, n), countCosets(g, level, v, n + 1)};
}

}  // namespace gz

namespace gz {
namespace {

using ModMatrix = std::array<long, 16>;

ModMatrix reduceModP(const Matrix& m, unsigned long p) {
  ModMatrix out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i * 4 + j] = residue(m(i, j), p, 1).get_si();
  return out;
}

long inverseModP(long x, long p) {
  long r = 1;
  for (long e = p - 2, b = x % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// x = n * lower with n upper unipotent, read off from the LU factorization
// of the reversed matrix; nullopt off the big cell.
std::optional<ModMatrix> bigCellUnipotent(const ModMatrix& x, long p) {
  auto m = [&](int i, int j) { return x[(3 - i) * 4 + (3 - j)]; };
  long lo[4][4] = {}, up[4][4] = {};
  for (int k = 0; k < 4; ++k) {
    for (int j = k; j < 4; ++j) {
      long s = m(k, j);
      for (int t = 0; t < k; ++t) s -= lo[k][t] * up[t][j];
      up[k][j] = ((s % p) + p) % p;
    }
    if (up[k][k] == 0) return std::nullopt;
    const long inv = inverseModP(up[k][k], p);
    lo[k][k] = 1;
    for (int i = k + 1; i < 4; ++i) {
      long s = m(i, k);
      for (int t = 0; t < k; ++t) s -= lo[i][t] * up[t][k];
      lo[i][k] = (((s % p) + p) % p) * inv % p;
    }
  }
  ModMatrix n{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) n[i * 4 + j] = lo[3 - i][3 - j];
  return n;
}

}  // namespace

VerificationReport openOrbitCount(unsigned long p) {
  const auto start = std::chrono::steady_clock::now();
  const long pl = static_cast<long>(p);
  const Matrix eta = etaElement(p).matrix();
  std::set<ModMatrix> image;
  std::size_t borel = 0, outside = 0;
  auto m2 = [](long a, long b, const Rational& d) { return Matrix(2, {Rational(a), Rational(b), Rational(0), d}); };
  for (long a = 1; a < pl; ++a)
    for (long d = 1; d < pl; ++d)
      for (long a2 = 1; a2 < pl; ++a2)
        for (long b = 0; b < pl; ++b)
          for (long b2 = 0; b2 < pl; ++b2) {
            ++borel;
            const Rational d2 = Rational(a * d) / a2;
            const ModMatrix x = reduceModP(embedH(m2(a, b, d), m2(a2, b2, d2), p).matrix() * eta, p);
            if (auto n = bigCellUnipotent(x, pl)) image.insert(*n);
            else ++outside;
          }
  std::set<ModMatrix> expected;
  std::size_t unipotent = 0;
  const Group G = Group::GSp4;
  for (long s = 0; s < pl; ++s)
    for (long t = 0; t < pl; ++t)
      for (long u = 0; u < pl; ++u)
        for (long w = 0; w < pl; ++w) {
          ++unipotent;
          const ModMatrix n = reduceModP((rootElement(G, 0, 1, Rational(s), p) * rootElement(G, 1, 2, Rational(t), p) *
                                          rootElement(G, 0, 2, Rational(u), p) * rootElement(G, 0, 3, Rational(w), p))
                                             .matrix(),
                                         p);
          if (n[1] != 0 && n[2] != 0) expected.insert(n);
        }
  VerificationReport r;
  r.id = "open-orbit-p" + std::to_string(p);
  r.method = "oracle";
  r.anchor = "open H-orbit, top row criterion";
  const bool ok = outside == 0 && image == expected && !image.empty();
  r.status = ok ? Status::verified : Status::failed;
  r.witness = "image " + std::to_string(image.size()) + ", criterion set " + std::to_string(expected.size()) +
              " of " + std::to_string(unipotent) + " unipotents, " + std::to_string(borel) + " Borel elements, " +
              std::to_string(outside) + " outside the big cell";
  r.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace gz
