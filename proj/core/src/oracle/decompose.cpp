#include "gz/oracle/decompose.hpp"

#include <stdexcept>

namespace gz {
namespace {

Rational pPower(unsigned long p, int e) { return powRational(Rational(static_cast<long>(p)), e); }

std::size_t minValuationColumn(const Matrix& y, std::size_t row, const std::vector<std::size_t>& cols,
                               unsigned long p) {
  std::size_t best = cols.front();
  int bestV = kInfiniteValuation;
  for (std::size_t c : cols) {
    const int v = valuation(y(row, c), p);
    if (v < bestV) {
      bestV = v;
      best = c;
    }
  }
  if (bestV == kInfiniteValuation) throw std::domain_error("matrix is singular");
  return best;
}

// y = n * d with d = diag(y); returns (n, t, unit part of d).
struct Triangular {
  Matrix n, t, u;
};

Triangular splitTriangular(const Matrix& y, unsigned long p) {
  const std::size_t n = y.size();
  std::vector<Rational> d(n), t(n), u(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = y(i, i);
    t[i] = pPower(p, valuation(d[i], p));
    u[i] = d[i] / t[i];
  }
  Matrix un = y * Matrix::diagonal(d).inverse();
  return {un, Matrix::diagonal(t), Matrix::diagonal(u)};
}

}  // namespace

Integer residue(const Rational& x, unsigned long p, int k) {
  Integer mod = 1;
  for (int i = 0; i < k; ++i) mod *= static_cast<unsigned long>(p);
  if (k <= 0) return 0;
  Integer inv;
  const Integer den = x.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("residue of a non-integral value");
  Integer r = (x.get_num() * inv) % mod;
  if (r < 0) r += mod;
  return r;
}

IwasawaDecomposition iwasawaDecompose(const PGroupElement& g) {
  const unsigned long p = g.prime();
  const Group grp = g.group();
  Matrix y = g.matrix();
  PGroupElement kappa = PGroupElement::identity(grp, p);
  auto apply = [&](const PGroupElement& r) {
    y = y * r.matrix();
    kappa = kappa * r;
  };
  const auto weyl = weylRepresentatives(grp, p);
  auto weylWith = [&](std::size_t from, std::size_t to, std::size_t fixedFrom, std::size_t fixedTo) {
    for (const auto& w : weyl) {
      const Matrix& m = w.matrix();
      if (sgn(m(from, to)) != 0 && sgn(m(fixedFrom, fixedTo)) != 0) return w;
    }
    throw std::logic_error("missing Weyl representative");
  };
  if (grp == Group::GL2) {
    if (minValuationColumn(y, 1, {0, 1}, p) == 0) apply(weyl[1]);
    apply(rootElement(grp, 1, 0, -y(1, 0) / y(1, 1), p));
  } else {
    const std::size_t j = minValuationColumn(y, 3, {0, 1, 2, 3}, p);
    if (j != 3) {
      for (const auto& w : weyl) {
        if (sgn(w.matrix()(j, 3)) != 0) {
          apply(w);
          break;
        }
      }
    }
    for (std::size_t c : {1u, 2u, 0u}) {
      if (sgn(y(3, c)) != 0) apply(rootElement(grp, 3, c, -y(3, c) / y(3, 3), p));
    }
    if (minValuationColumn(y, 2, {1, 2}, p) == 1) apply(weylWith(1, 2, 3, 3));
    if (sgn(y(2, 1)) != 0) apply(rootElement(grp, 2, 1, -y(2, 1) / y(2, 2), p));
  }
  for (std::size_t r = 1; r < y.size(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (sgn(y(r, c)) != 0) throw std::logic_error("Iwasawa elimination left a subdiagonal entry");
  const Triangular tri = splitTriangular(y, p);
  PGroupElement n(grp, tri.n, p), t(grp, tri.t, p);
  PGroupElement k = PGroupElement(grp, tri.u, p) * kappa.inverse();
  if (!k.isIntegral()) throw std::logic_error("Iwasawa compact part is not integral");
  return {std::move(n), std::move(t), std::move(k)};
}

IwahoriCell iwahoriCell(const Matrix& g, unsigned long p) {
  const std::size_t n = g.size();
  Matrix y = g;
  std::vector<std::size_t> remaining(n), pivot(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
  for (std::size_t r = n; r-- > 0;) {
    // smallest column index among the minimal valuations
    std::size_t c0 = remaining.front();
    int best = kInfiniteValuation;
    for (std::size_t c : remaining) {
      const int v = valuation(y(r, c), p);
      if (v < best) {
        best = v;
        c0 = c;
      }
    }
    if (best == kInfiniteValuation) throw std::domain_error("matrix is singular");
    for (std::size_t c : remaining) {
      if (c == c0 || sgn(y(r, c)) == 0) continue;
      const Rational m = y(r, c) / y(r, c0);
      for (std::size_t i = 0; i <= r; ++i) y(i, c) -= m * y(i, c0);
    }
    pivot[r] = c0;
    std::erase(remaining, c0);
  }
  IwahoriCell cell;
  cell.perm = pivot;
  cell.torus.resize(n);
  // b e_r = y e_{pivot[r]}
  auto b = [&](std::size_t i, std::size_t j) -> const Rational& { return y(i, pivot[j]); };
  for (std::size_t i = 0; i < n; ++i) cell.torus[i] = valuation(b(i, i), p);
  if (n == 2) {
    cell.psiArgument = -(b(0, 1) / b(1, 1));
  } else {
    cell.psiArgument = b(0, 1) / b(1, 1) + b(1, 2) / b(2, 2);
  }
  return cell;
}

Matrix latticeKey(const Matrix& m, unsigned long p) {
  const std::size_t n = m.size();
  Matrix y = m;
  for (std::size_t r = n; r-- > 0;) {
    std::vector<std::size_t> cols(r + 1);
    for (std::size_t c = 0; c <= r; ++c) cols[c] = c;
    const std::size_t j = minValuationColumn(y, r, cols, p);
    if (j != r)
      for (std::size_t i = 0; i < n; ++i) std::swap(y(i, j), y(i, r));
    for (std::size_t c = 0; c < r; ++c) {
      if (sgn(y(r, c)) == 0) continue;
      const Rational f = y(r, c) / y(r, r);
      for (std::size_t i = 0; i <= r; ++i) y(i, c) -= f * y(i, r);
    }
    const Rational unit = y(r, r) / pPower(p, valuation(y(r, r), p));
    for (std::size_t i = 0; i <= r; ++i) y(i, r) /= unit;
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c; r-- > 0;) {
      const int vr = valuation(y(r, r), p);
      const Rational& e = y(r, c);
      if (sgn(e) == 0) continue;
      const int shift = std::max(0, -valuation(e, p));
      const Rational scaled = e * pPower(p, shift);
      const Rational canon = Rational(residue(scaled, p, vr + shift)) / pPower(p, shift);
      const Rational mult = (e - canon) / y(r, r);
      for (std::size_t i = 0; i <= r; ++i) y(i, c) -= mult * y(i, r);
    }
  }
  return y;
}

}  // namespace gz
