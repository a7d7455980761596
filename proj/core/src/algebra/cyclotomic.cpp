#include "gz/algebra/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace gz {
namespace {

unsigned long ipow(unsigned long p, unsigned n) {
  unsigned long r = 1;
  for (unsigned i = 0; i < n; ++i) r *= p;
  return r;
}

// Reduce a vector of length p^n (coefficients of zeta^0..zeta^(p^n - 1)).
std::vector<Rational> reduce(unsigned long p, unsigned n, std::vector<Rational> full) {
  if (n == 0) return {full.empty() ? Rational(0) : full[0]};
  const unsigned long order = ipow(p, n);
  const unsigned long m = order / p;
  const unsigned long phi = order - m;
  for (unsigned long r = 0; r < m; ++r) {
    const Rational c = full[phi + r];
    if (sgn(c) == 0) continue;
    for (unsigned long i = 0; i + 1 < p; ++i) full[i * m + r] -= c;
  }
  full.resize(phi);
  return full;
}

void checkPrime(unsigned long p) {
  if (p < 2) throw std::invalid_argument("cyclotomic prime must be at least 2");
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("cyclotomic order must be a prime power");
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(const Rational& r) : coeffs_{r} {}

CyclotomicNumber::CyclotomicNumber(unsigned long p, unsigned n, std::vector<Rational> full)
    : prime_(n == 0 ? 1 : p), level_(n), order_(ipow(p, n)) {
  coeffs_ = reduce(p, n, std::move(full));
  shrink();
}

CyclotomicNumber CyclotomicNumber::rootOfUnity(unsigned long p, unsigned n, long k) {
  checkPrime(p);
  const auto order = static_cast<long>(ipow(p, n));
  std::vector<Rational> full(static_cast<std::size_t>(order));
  full[static_cast<std::size_t>(((k % order) + order) % order)] = 1;
  return CyclotomicNumber(p, n, std::move(full));
}

// Drop to the smallest field containing the value: an element lies in the
// subfield of p^(n-1)-th roots exactly when only powers divisible by p occur.
void CyclotomicNumber::shrink() {
  while (level_ > 0) {
    const unsigned long m = order_ / prime_;
    if (level_ == 1) {
      if (std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; })) {
        coeffs_.resize(1);
        prime_ = 1;
        level_ = 0;
        order_ = 1;
      }
      return;
    }
    bool sub = true;
    for (std::size_t i = 0; i < coeffs_.size() && sub; ++i)
      if (i % prime_ != 0 && sgn(coeffs_[i]) != 0) sub = false;
    if (!sub) return;
    std::vector<Rational> smaller(m - m / prime_);
    for (std::size_t i = 0; i < smaller.size(); ++i) smaller[i] = coeffs_[i * prime_];
    coeffs_ = std::move(smaller);
    --level_;
    order_ = m;
  }
}

CyclotomicNumber CyclotomicNumber::liftedTo(unsigned long p, unsigned n) const {
  if (level_ == 0) {
    if (n == 0) return *this;
    checkPrime(p);
  } else if (p != prime_ || n < level_) {
    throw std::invalid_argument("incompatible cyclotomic fields");
  }
  CyclotomicNumber r;
  r.prime_ = n == 0 ? 1 : p;
  r.level_ = n;
  r.order_ = ipow(p, n);
  const unsigned long step = r.order_ / order_;
  r.coeffs_.assign(n == 0 ? 1 : r.order_ - r.order_ / p, Rational(0));
  std::vector<Rational> full(r.order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[i * step] = coeffs_[i];
  r.coeffs_ = reduce(p, n, std::move(full));
  return r;
}

namespace {

std::pair<CyclotomicNumber, CyclotomicNumber> common(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.level() >= b.level()) {
    const unsigned long p = a.level() ? a.prime() : b.prime();
    return {a, b.liftedTo(p, a.level())};
  }
  return {a.liftedTo(b.prime(), b.level()), b};
}

}  // namespace

bool CyclotomicNumber::isZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CyclotomicNumber::isRational() const { return level_ == 0; }

Rational CyclotomicNumber::rationalValue() const {
  if (!isRational()) throw std::logic_error("cyclotomic number is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  auto [x, y] = common(a, b);
  std::vector<Rational> full(x.order_);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) full[i] = x.coeffs_[i] + y.coeffs_[i];
  return CyclotomicNumber(x.prime_, x.level_, std::move(full));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  auto [x, y] = common(a, b);
  const std::size_t n = x.order_;
  std::vector<Rational> full(n);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) full[(i + j) % n] += x.coeffs_[i] * y.coeffs_[j];
  }
  return CyclotomicNumber(x.prime_, x.level_, std::move(full));
}

// Solves (multiplication by *this) * v = 1 over the power basis.
CyclotomicNumber CyclotomicNumber::inverse() const {
  if (isZero()) throw std::domain_error("inverse of zero cyclotomic number");
  if (level_ == 0) return CyclotomicNumber(Rational(1) / coeffs_[0]);
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> full(order_);
    full[j] = 1;
    const CyclotomicNumber col = *this * CyclotomicNumber(prime_, level_, std::move(full)).liftedTo(prime_, level_);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (sgn(m[piv][c]) == 0) ++piv;
    std::swap(m[piv], m[c]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> full(order_);
  for (std::size_t i = 0; i < d; ++i) full[i] = m[i][d] / m[i][i];
  return CyclotomicNumber(prime_, level_, std::move(full));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

CyclotomicNumber CyclotomicNumber::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  CyclotomicNumber r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) { return (a - b).isZero(); }

std::string CyclotomicNumber::toString() const {
  if (level_ == 0) return coeffs_[0].get_str();
  std::string out;
  const std::string z = "z" + std::to_string(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (i == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += z;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gz
