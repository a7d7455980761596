#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gz/algebra/exponent.hpp"
#include "gz/algebra/rational.hpp"

namespace gz {

// Sparse Laurent polynomial over a commutative coefficient ring C.
// Terms are kept sorted by exponent in descending lexicographic order with
// no zero coefficients, so structural equality is value equality.
template <class C>
class LaurentPolynomial {
 public:
  using Coeff = C;
  using Term = std::pair<Exponent, C>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!gz::isZero(c)) terms_.emplace_back(Exponent{}, c);
  }
  LaurentPolynomial(long c) : LaurentPolynomial(C(c)) {}  // NOLINT

  static LaurentPolynomial monomial(const Exponent& e, const C& c = C(1)) {
    LaurentPolynomial p;
    if (!gz::isZero(c)) p.terms_.emplace_back(e, c);
    return p;
  }
  static LaurentPolynomial variable(Var v, int power = 1) { return monomial(Exponent::unit(v, power)); }

  static LaurentPolynomial fromTerms(std::vector<Term> terms) {
    LaurentPolynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  // Terms already sorted descending, distinct and nonzero.
  static LaurentPolynomial fromSortedTerms(std::vector<Term> terms) {
    LaurentPolynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.isZero()); }
  bool isMonomial() const noexcept { return terms_.size() == 1; }
  C constantValue() const {
    if (terms_.empty()) return C(0);
    if (!isConstant()) throw std::logic_error("polynomial is not constant");
    return terms_[0].second;
  }
  const Term& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }
  C coefficient(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.first > x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return C(0);
  }

  Exponent minExponent() const {
    if (terms_.empty()) return {};
    Exponent m = terms_[0].first;
    for (const auto& t : terms_) m = Exponent::min(m, t.first);
    return m;
  }
  Exponent maxExponent() const {
    if (terms_.empty()) return {};
    Exponent m = terms_[0].first;
    for (const auto& t : terms_) m = Exponent::max(m, t.first);
    return m;
  }
  bool involves(Var v) const noexcept {
    for (const auto& t : terms_)
      if (t.first[v] != 0) return true;
    return false;
  }
  std::vector<Var> variables() const {
    std::vector<Var> out;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      for (const auto& t : terms_) {
        if (t.first[i] != 0) {
          out.push_back(static_cast<Var>(i));
          break;
        }
      }
    }
    return out;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return merge(a, b, false);
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return merge(a, b, true);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    if (a.isMonomial()) return b.timesMonomial(a.terms_[0].first, a.terms_[0].second);
    if (b.isMonomial()) return a.timesMonomial(b.terms_[0].first, b.terms_[0].second);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) prod.emplace_back(ea + eb, ca * cb);
    return fromTerms(std::move(prod));
  }
  LaurentPolynomial& operator+=(const LaurentPolynomial& b) { return *this = *this + b; }
  LaurentPolynomial& operator-=(const LaurentPolynomial& b) { return *this = *this - b; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& b) { return *this = *this * b; }

  LaurentPolynomial timesMonomial(const Exponent& e, const C& c) const {
    if (gz::isZero(c)) return {};
    LaurentPolynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& [ex, cx] : terms_) {
      C v = cx * c;
      if (!gz::isZero(v)) r.terms_.emplace_back(ex + e, std::move(v));
    }
    return r;  // shifting by a fixed exponent preserves the order
  }
  LaurentPolynomial shifted(const Exponent& e) const { return timesMonomial(e, C(1)); }
  LaurentPolynomial scaled(const C& c) const { return timesMonomial(Exponent{}, c); }

  LaurentPolynomial pow(unsigned n) const {
    LaurentPolynomial result(C(1)), base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  // Apply a map on individual terms; the result is re-sorted.
  template <class F>
  LaurentPolynomial mapTerms(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(f(t));
    return fromTerms(std::move(out));
  }

 private:
  static LaurentPolynomial merge(const LaurentPolynomial& a, const LaurentPolynomial& b, bool subtract) {
    LaurentPolynomial r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].first > a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? C(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        C v = subtract ? C(a.terms_[i].second - b.terms_[j].second) : C(a.terms_[i].second + b.terms_[j].second);
        if (!gz::isZero(v)) r.terms_.emplace_back(a.terms_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && gz::isZero(out.back().second)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && gz::isZero(out.back().second)) out.pop_back();
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

using Poly = LaurentPolynomial<Rational>;

}  // namespace gz
