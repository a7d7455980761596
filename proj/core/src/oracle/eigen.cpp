#include "gz/oracle/eigen.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gz/params/weyl.hpp"

namespace gz {
namespace {

RationalFunction var(Var v) { return RationalFunction::variable(v); }

// All values at the sample points, as rows of power-basis coordinates.
std::vector<std::vector<RationalFunction>> coordinateRows(const std::vector<std::vector<CycloFunction>>& values,
                                                          unsigned long p) {
  unsigned level = 0;
  for (const auto& column : values)
    for (const auto& v : column) level = std::max(level, v.level());
  const std::size_t points = values.front().size();
  std::vector<std::vector<RationalFunction>> rows;
  for (std::size_t i = 0; i < points; ++i) {
    std::vector<std::vector<RationalFunction>> coords;
    for (const auto& column : values) coords.push_back(column[i].coordinates(p, level));
    for (std::size_t k = 0; k < coords.front().size(); ++k) {
      std::vector<RationalFunction> row;
      bool zero = true;
      for (const auto& c : coords) {
        row.push_back(c[k]);
        zero = zero && c[k].isZero();
      }
      if (!zero) rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<CycloFunction> valuesAt(const Whittaker& f, const std::vector<Matrix>& points) {
  std::vector<CycloFunction> out;
  out.reserve(points.size());
  for (const Matrix& x : points) out.push_back((*f)(x));
  return out;
}

}  // namespace

std::optional<std::vector<RationalFunction>> solveLinear(std::vector<std::vector<RationalFunction>> rows,
                                                         std::size_t unknowns) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].isZero()) ++pivot;
    if (pivot == rows.size()) throw std::domain_error("singular linear system");
    std::swap(rows[rank], rows[pivot]);
    const RationalFunction inv = RationalFunction(1) / rows[rank][col];
    for (auto& e : rows[rank]) e = e * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].isZero()) continue;
      const RationalFunction f = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (!rows[r][unknowns].isZero()) return std::nullopt;
  std::vector<RationalFunction> x;
  for (std::size_t c = 0; c < unknowns; ++c) x.push_back(rows[c][unknowns]);
  return x;
}

std::vector<Matrix> iwahoriSamplePoints(Group g, unsigned long p, int low, int high) {
  std::vector<Matrix> points;
  const auto weyl = weylRepresentatives(g, p);
  for (int a = low; a <= high; ++a)
    for (int b = low; b <= high; ++b) {
      const PGroupElement t = g == Group::GL2 ? PGroupElement(g, Matrix::diagonal({powRational(Rational(static_cast<long>(p)), a),
                                                                                   powRational(Rational(static_cast<long>(p)), b)}),
                                                              p)
                                              : torusElement({a + b, a, b, 0}, p);
      for (const auto& w : weyl) points.push_back((t * w).matrix());
    }
  return points;
}

CyclicSpace::CyclicSpace(Whittaker f, CosetSystem op, std::size_t maxDimension)
    : op_(std::move(op)), iwahoriInvariant_(op_.level.depth <= 1) {
  if (!iwahoriInvariant_) throw std::invalid_argument("cyclic solve needs a level containing Iw(p)");
  const unsigned long p = op_.prime;
  const Group g = op_.level.group;
  const auto samples = iwahoriSamplePoints(g, p, -1, 2);
  const auto checks = iwahoriSamplePoints(g, p, -2, 3);
  basis_.push_back(iwahoriCached(std::move(f)));
  std::vector<std::vector<CycloFunction>> columns{valuesAt(basis_.back(), samples)};
  while (basis_.size() <= maxDimension) {
    Whittaker next = iwahoriCached(heckeTranslate(op_, basis_.back()));
    columns.push_back(valuesAt(next, samples));
    auto rows = coordinateRows(columns, p);
    columns.pop_back();
    if (auto rel = solveLinear(std::move(rows), basis_.size())) {
      Whittaker combo = realize(*rel);
      for (const Matrix& x : checks)
        if (!((*next)(x) == (*combo)(x)))
          throw std::logic_error("cyclic relation fails away from the sample points");
      relation_ = std::move(*rel);
      return;
    }
    columns.push_back(valuesAt(next, samples));
    basis_.push_back(std::move(next));
  }
  throw std::logic_error("cyclic subspace larger than " + std::to_string(maxDimension));
}

CyclicSpace::Vector CyclicSpace::generator() const {
  Vector v(dimension(), RationalFunction(0));
  v[0] = RationalFunction(1);
  return v;
}

CyclicSpace::Vector CyclicSpace::applyT(const Vector& v) const {
  const std::size_t d = dimension();
  Vector out(d, RationalFunction(0));
  for (std::size_t j = 0; j + 1 < d; ++j) out[j + 1] = v[j];
  for (std::size_t j = 0; j < d; ++j) out[j] = out[j] + v[d - 1] * relation_[j];
  return out;
}

CyclicSpace::Vector CyclicSpace::applyTInverse(const Vector& v) const {
  const std::size_t d = dimension();
  if (relation_[0].isZero()) throw std::domain_error("operator is singular on the cyclic subspace");
  // T^-1 e_j = e_{j-1}; T^-1 e_0 = (e_{d-1} - sum_{j>=1} r_j e_{j-1}) / r_0
  Vector out(d, RationalFunction(0));
  for (std::size_t j = 1; j < d; ++j) out[j - 1] = v[j];
  const RationalFunction s = v[0] / relation_[0];
  out[d - 1] = out[d - 1] + s;
  for (std::size_t j = 1; j < d; ++j) out[j - 1] = out[j - 1] - s * relation_[j];
  return out;
}

CyclicSpace::Vector CyclicSpace::applyFactor(const Vector& v, const RationalFunction& c) const {
  const Vector w = applyTInverse(v);
  Vector out(v.size(), RationalFunction(0));
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j] - c * w[j];
  return out;
}

Whittaker CyclicSpace::realize(const Vector& v) const {
  std::vector<std::pair<RationalFunction, Whittaker>> terms;
  for (std::size_t j = 0; j < v.size(); ++j) terms.emplace_back(v[j], basis_[j]);
  return iwahoriCached(linearCombination(std::move(terms)));
}

namespace {

Whittaker constructEigenvector(const EigenRecipe& recipe, unsigned long p) {
  const RationalFunction q(static_cast<long>(p));
  const RationalFunction alpha = var(Var::alpha), beta = var(Var::beta);
  const RationalFunction gamma = oracleGamma(p), delta = oracleDelta(p);
  switch (recipe.kind) {
    case EigenKind::siegel: {
      const CyclicSpace space(sphericalWhittaker(Group::GSp4, p), enumerateCosets("U1", siegelLevel(1), p));
      auto v = space.generator();
      for (const auto& c : {beta, gamma, delta}) v = space.applyFactor(v, c);
      return space.realize(v);
    }
    case EigenKind::iwahori: {
      const Whittaker si = buildEigenvector({EigenKind::siegel}, p);
      const CyclicSpace space(si, enumerateCosets("U2", iwahoriLevel(Group::GSp4, 1), p));
      return space.realize(space.applyFactor(space.generator(), alpha * gamma / q));
    }
    case EigenKind::klingen: {
      const CyclicSpace space(sphericalWhittaker(Group::GSp4, p), enumerateCosets("U2", klingenLevel(1), p));
      auto v = space.generator();
      for (const auto& c : {alpha * gamma / q, beta * delta / q, gamma * delta / q}) v = space.applyFactor(v, c);
      const RationalFunction norm = RationalFunction(1) / (RationalFunction(1) + gamma / alpha);
      for (auto& e : v) e = e * norm;
      return space.realize(v);
    }
    case EigenKind::klingenDual: {
      if (recipe.n != 1) throw std::invalid_argument("dual Klingen vector is implemented at depth 1");
      const CosetSystem trace = enumerateCosets("traceKlDual", klingenLevel(1), p);
      const RationalFunction scale = q.pow(5) / (alpha * beta) / RationalFunction(static_cast<long>(trace.representatives.size()));
      return iwahoriCached(heckeTranslate(trace, buildEigenvector({EigenKind::klingen}, p), scale));
    }
    case EigenKind::iwahoriDual: {
      if (recipe.n != 1) throw std::invalid_argument("dual Iwahori vector is implemented at depth 1");
      const CosetSystem trace = enumerateCosets("traceIwDual", iwahoriLevel(Group::GSp4, 1), p);
      const RationalFunction scale =
          q.pow(8) / (alpha * alpha * beta) / RationalFunction(static_cast<long>(trace.representatives.size()));
      return iwahoriCached(heckeTranslate(trace, buildEigenvector({EigenKind::iwahori}, p), scale));
    }
    case EigenKind::gl2:
    case EigenKind::gl2Dual: {
      const Var av = recipe.factor == 1 ? Var::a1 : Var::a2;
      const Var bv = recipe.factor == 1 ? Var::b1 : Var::b2;
      const RationalFunction a = var(recipe.swapGl2 ? bv : av);
      const Whittaker sph = sphericalWhittaker(Group::GL2, p, recipe.factor);
      Whittaker wa = linearCombination({{RationalFunction(1), sph}, {-RationalFunction(1) / a, translate(sph, sGL2(1, p))}});
      if (recipe.kind == EigenKind::gl2) return wa;
      const PGroupElement g = sGL2(recipe.n, p) * jElement(Group::GL2, p).inverse();
      return linearCombination({{(q / a).pow(recipe.n), translate(wa, g)}});
    }
  }
  throw std::logic_error("unknown eigenvector recipe");
}

}  // namespace

Whittaker buildEigenvector(const EigenRecipe& recipe, unsigned long p) {
  static std::recursive_mutex mutex;
  static std::map<std::tuple<int, std::string, int, int, bool, unsigned long>, Whittaker> memo;
  const auto key = std::make_tuple(static_cast<int>(recipe.kind), recipe.ordering, recipe.n, recipe.factor,
                                   recipe.swapGl2, p);
  std::lock_guard lock(mutex);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const bool gsp4 = recipe.kind != EigenKind::gl2 && recipe.kind != EigenKind::gl2Dual;
  Whittaker w;
  if (gsp4 && recipe.ordering != "ab") {
    EigenRecipe base = recipe;
    base.ordering = "ab";
    w = iwahoriCached(substituted(buildEigenvector(base, p), oracleWeyl(weylFromLabel(recipe.ordering), p)));
  } else {
    w = constructEigenvector(recipe, p);
  }
  memo.emplace(key, w);
  return w;
}

}  // namespace gz
