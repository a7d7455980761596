#include "gz/oracle/cyclo_function.hpp"

#include <stdexcept>

#include "gz/algebra/io.hpp"

namespace gz {
namespace {

unsigned long ipow(unsigned long p, unsigned n) {
  unsigned long r = 1;
  for (unsigned i = 0; i < n; ++i) r *= p;
  return r;
}

}  // namespace

CycloFunction::CycloFunction(unsigned long p, unsigned level, std::vector<RationalFunction> coeffs)
    : prime_(level == 0 ? 1 : p), level_(level), coeffs_(std::move(coeffs)) {}

CycloFunction::CycloFunction(const CyclotomicNumber& c)
    : prime_(c.level() == 0 ? 1 : c.prime()), level_(c.level()) {
  coeffs_.assign(ipow(prime_, level_), RationalFunction(0));
  const auto& cs = c.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) coeffs_[k] = RationalFunction(cs[k]);
}

unsigned long CycloFunction::commonPrime(const CycloFunction& a, const CycloFunction& b) {
  if (a.level_ > 0 && b.level_ > 0 && a.prime_ != b.prime_) throw std::invalid_argument("mixed primes in cyclotomic values");
  return a.level_ > 0 ? a.prime_ : b.prime_;
}

CycloFunction CycloFunction::liftedTo(unsigned long p, unsigned n) const {
  if (n == level_) return *this;
  if (n < level_) throw std::logic_error("cannot lower cyclotomic level");
  const unsigned long size = ipow(p, n), step = ipow(p, n - level_);
  std::vector<RationalFunction> out(size, RationalFunction(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k * step] = coeffs_[k];
  return {p, n, std::move(out)};
}

std::vector<RationalFunction> CycloFunction::coordinates(unsigned long p, unsigned n) const {
  const CycloFunction f = liftedTo(p, n);
  if (n == 0) return f.coeffs_;
  const unsigned long block = ipow(p, n - 1), phi = (p - 1) * block;
  std::vector<std::vector<RationalFunction>> parts(phi);
  for (std::size_t k = 0; k < f.coeffs_.size(); ++k) {
    if (f.coeffs_[k].isZero()) continue;
    if (k < phi) {
      parts[k].push_back(f.coeffs_[k]);
    } else {
      const std::size_t j = k - phi;
      for (unsigned long i = 0; i + 1 < p; ++i) parts[j + i * block].push_back(-f.coeffs_[k]);
    }
  }
  std::vector<RationalFunction> out;
  out.reserve(phi);
  for (const auto& ps : parts) out.push_back(RationalFunction::sum(ps));
  return out;
}

bool CycloFunction::isZero() const {
  for (const auto& c : coordinates(prime_, level_))
    if (!c.isZero()) return false;
  return true;
}

bool CycloFunction::isRational() const {
  const auto cs = coordinates(prime_, level_);
  for (std::size_t k = 1; k < cs.size(); ++k)
    if (!cs[k].isZero()) return false;
  return true;
}

RationalFunction CycloFunction::rationalValue() const {
  const auto cs = coordinates(prime_, level_);
  for (std::size_t k = 1; k < cs.size(); ++k)
    if (!cs[k].isZero()) throw std::domain_error("value is not rational: " + toString());
  return cs[0];
}

CycloFunction CycloFunction::operator-() const {
  CycloFunction r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloFunction CycloFunction::sum(std::span<const CycloFunction> terms) {
  if (terms.empty()) return {};
  unsigned long p = 1;
  unsigned n = 0;
  for (const auto& t : terms) {
    if (t.level_ > 0) {
      if (p != 1 && p != t.prime_) throw std::invalid_argument("mixed primes in cyclotomic values");
      p = t.prime_;
      n = std::max(n, t.level_);
    }
  }
  const unsigned long size = ipow(p, n);
  std::vector<std::vector<RationalFunction>> parts(size);
  for (const auto& t : terms) {
    const unsigned long step = ipow(p, n - t.level_);
    for (std::size_t k = 0; k < t.coeffs_.size(); ++k)
      if (!t.coeffs_[k].isZero()) parts[k * step].push_back(t.coeffs_[k]);
  }
  std::vector<RationalFunction> out;
  out.reserve(size);
  for (const auto& ps : parts) out.push_back(RationalFunction::sum(ps));
  return {p, n, std::move(out)};
}

CycloFunction operator+(const CycloFunction& a, const CycloFunction& b) {
  const std::array<CycloFunction, 2> t{a, b};
  return CycloFunction::sum(t);
}

CycloFunction operator-(const CycloFunction& a, const CycloFunction& b) { return a + (-b); }

CycloFunction operator*(const RationalFunction& a, const CycloFunction& b) {
  CycloFunction r = b;
  for (auto& c : r.coeffs_)
    if (!c.isZero()) c = a * c;
  return r;
}

CycloFunction operator*(const CycloFunction& a, const CycloFunction& b) {
  if (a.level_ == 0) return a.coeffs_[0] * b;
  if (b.level_ == 0) return b.coeffs_[0] * a;
  const unsigned long p = CycloFunction::commonPrime(a, b);
  const unsigned n = std::max(a.level_, b.level_);
  const CycloFunction x = a.liftedTo(p, n), y = b.liftedTo(p, n);
  const unsigned long size = ipow(p, n);
  std::vector<std::vector<RationalFunction>> parts(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (x.coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < size; ++j)
      if (!y.coeffs_[j].isZero()) parts[(i + j) % size].push_back(x.coeffs_[i] * y.coeffs_[j]);
  }
  std::vector<RationalFunction> out;
  for (const auto& ps : parts) out.push_back(RationalFunction::sum(ps));
  return {p, n, std::move(out)};
}

CycloFunction CycloFunction::substituted(const Substitution& s) const {
  CycloFunction r = *this;
  for (auto& c : r.coeffs_)
    if (!c.isZero()) c = substitute(c, s);
  return r;
}

std::string CycloFunction::toString() const {
  const auto cs = coordinates(prime_, level_);
  std::string out;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].isZero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + gz::toString(cs[k]) + ")";
    if (k > 0) out += "*z" + std::to_string(ipow(prime_, level_)) + "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace gz
