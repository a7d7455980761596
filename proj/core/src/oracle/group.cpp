#include "gz/oracle/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gz {
namespace {

Rational pPower(unsigned long p, int e) { return powRational(Rational(static_cast<long>(p)), e); }

bool preservesForm(const Matrix& m) {
  const Matrix j = formJ();
  const Matrix lhs = m.transpose() * j * m;
  const Rational nu = lhs(0, 3);
  if (nu == 0) return false;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (lhs(r, c) != nu * j(r, c)) return false;
  return true;
}

}  // namespace

int valuation(const Rational& x, unsigned long p) {
  if (sgn(x) == 0) return kInfiniteValuation;
  int v = 0;
  Integer n = x.get_num(), d = x.get_den();
  const Integer pp(p);
  while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
    n /= pp;
    ++v;
  }
  while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t())) {
    d /= pp;
    --v;
  }
  return v;
}

Matrix::Matrix(std::size_t n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < a.n_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

Matrix Matrix::inverse() const {
  Matrix a = *this, inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n_) throw std::domain_error("singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const Rational s = 1 / a(col, col);
    for (std::size_t c = 0; c < n_; ++c) {
      a(col, c) *= s;
      inv(col, c) *= s;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n_; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Rational Matrix::determinant() const {
  Matrix a = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n_; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

nlohmann::json Matrix::toJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < n_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < n_; ++c) row.push_back(gz::toString((*this)(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix Matrix::fromJson(const nlohmann::json& j) {
  const std::size_t n = j.size();
  Matrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (j[r].size() != n) throw std::invalid_argument("matrix JSON is not square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parseRational(j[r][c].get<std::string>());
  }
  return m;
}

std::string Matrix::toString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < n_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < n_; ++c) os << (c ? " " : "") << gz::toString((*this)(r, c));
  }
  os << ']';
  return os.str();
}

std::string_view groupName(Group g) { return g == Group::GL2 ? "GL2" : "GSp4"; }

PGroupElement::PGroupElement(Group group, Matrix m, unsigned long p) : group_(group), m_(std::move(m)), p_(p) {
  const std::size_t n = group == Group::GL2 ? 2 : 4;
  if (m_.size() != n) throw std::invalid_argument("wrong matrix size for " + std::string(groupName(group)));
  if (sgn(m_.determinant()) == 0) throw std::invalid_argument("group element is singular");
  if (group == Group::GSp4 && !preservesForm(m_)) throw std::invalid_argument("matrix is not a symplectic similitude");
}

PGroupElement PGroupElement::identity(Group group, unsigned long p) {
  return {group, Matrix::identity(group == Group::GL2 ? 2 : 4), p};
}

Rational PGroupElement::similitude() const {
  if (group_ == Group::GL2) return m_.determinant();
  return (m_.transpose() * formJ() * m_)(0, 3);
}

PGroupElement PGroupElement::inverse() const { return {group_, m_.inverse(), p_}; }

PGroupElement operator*(const PGroupElement& a, const PGroupElement& b) {
  if (a.group_ != b.group_ || a.p_ != b.p_) throw std::invalid_argument("mixed groups in product");
  return {a.group_, a.m_ * b.m_, a.p_};
}

bool PGroupElement::isIntegral() const {
  for (std::size_t r = 0; r < m_.size(); ++r)
    for (std::size_t c = 0; c < m_.size(); ++c)
      if (valuation(m_(r, c), p_) < 0) return false;
  return valuation(m_.determinant(), p_) == 0;
}

Matrix formJ() {
  Matrix j(4);
  j(0, 3) = 1;
  j(1, 2) = 1;
  j(2, 1) = -1;
  j(3, 0) = -1;
  return j;
}

PGroupElement jElement(Group g, unsigned long p) {
  if (g == Group::GSp4) return {g, formJ(), p};
  return {g, Matrix(2, {0, 1, -1, 0}), p};
}

PGroupElement torusElement(const std::array<int, 4>& e, unsigned long p) {
  return {Group::GSp4, Matrix::diagonal({pPower(p, e[0]), pPower(p, e[1]), pPower(p, e[2]), pPower(p, e[3])}), p};
}

PGroupElement sElement(int m, int n, unsigned long p) { return torusElement({0, n, m + n, m + 2 * n}, p); }
PGroupElement tElement(int m, int n, unsigned long p) { return torusElement({m + 2 * n, m + n, n, 0}, p); }
PGroupElement sGL2(int m, unsigned long p) { return {Group::GL2, Matrix::diagonal({1, pPower(p, m)}), p}; }
PGroupElement tGL2(int m, unsigned long p) { return {Group::GL2, Matrix::diagonal({pPower(p, m), 1}), p}; }

PGroupElement etaElement(unsigned long p) {
  return {Group::GSp4, Matrix(4, {1, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, -1, 0, 0, 0, 1}), p};
}

PGroupElement uKlElement(unsigned long p) {
  return {Group::GSp4, Matrix(4, {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 1}), p};
}

PGroupElement w1Element(unsigned long p) {
  return {Group::GSp4, Matrix(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1}), p};
}

PGroupElement uIwElement(unsigned long p) { return uKlElement(p) * w1Element(p); }

PGroupElement rootElement(Group g, std::size_t i, std::size_t j, const Rational& x, unsigned long p) {
  if (i == j) throw std::invalid_argument("root element needs i != j");
  if (g == Group::GL2) {
    Matrix m = Matrix::identity(2);
    m(i, j) = x;
    return {g, m, p};
  }
  for (int sign : {1, -1}) {
    Matrix m = Matrix::identity(4);
    m(i, j) += x;
    if (i + j != 3) m(3 - j, 3 - i) += sign * x;
    if (preservesForm(m)) return {g, m, p};
  }
  throw std::logic_error("no symplectic root element");
}

std::vector<PGroupElement> weylRepresentatives(Group g, unsigned long p) {
  std::vector<PGroupElement> out;
  if (g == Group::GL2) {
    out.push_back(PGroupElement::identity(g, p));
    out.push_back(jElement(g, p));
    return out;
  }
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    bool commutes = true;
    for (std::size_t i = 0; i < 4; ++i) commutes = commutes && perm[3 - i] == 3 - perm[i];
    if (!commutes) continue;
    for (int signs = 0; signs < 16; ++signs) {
      Matrix m(4);
      for (std::size_t c = 0; c < 4; ++c) m(perm[c], c) = (signs >> c) & 1 ? -1 : 1;
      if (preservesForm(m) && (m.transpose() * formJ() * m)(0, 3) == 1) {
        out.emplace_back(g, m, p);
        break;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace gz
