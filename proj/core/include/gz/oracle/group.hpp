#pragma once

#include <array>
#include <climits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gz/algebra/rational.hpp"

namespace gz {

inline constexpr int kInfiniteValuation = INT_MAX;

// p-adic valuation; kInfiniteValuation for 0.
int valuation(const Rational& x, unsigned long p);

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  Matrix(std::size_t n, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& d);

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  Matrix transpose() const;
  Matrix inverse() const;  // throws std::domain_error when singular
  Rational determinant() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
      if (a.a_[i] < b.a_[i]) return std::strong_ordering::less;
      if (b.a_[i] < a.a_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  nlohmann::json toJson() const;  // rows of rational strings
  static Matrix fromJson(const nlohmann::json& j);
  std::string toString() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

enum class Group { GL2, GSp4 };

std::string_view groupName(Group g);

// An element of GL2(Q_p) or GSp4(Q_p) with rational entries.
class PGroupElement {
 public:
  PGroupElement(Group group, Matrix m, unsigned long p);

  static PGroupElement identity(Group group, unsigned long p);

  Group group() const noexcept { return group_; }
  unsigned long prime() const noexcept { return p_; }
  const Matrix& matrix() const noexcept { return m_; }
  // determinant for GL2, similitude factor for GSp4
  Rational similitude() const;

  PGroupElement inverse() const;
  friend PGroupElement operator*(const PGroupElement& a, const PGroupElement& b);
  friend bool operator==(const PGroupElement& a, const PGroupElement& b) { return a.m_ == b.m_; }

  // entries in Z_(p), unit determinant
  bool isIntegral() const;

 private:
  Group group_;
  Matrix m_;
  unsigned long p_;
};

// The symplectic form; the GL2 element [[0,1],[-1,0]].
Matrix formJ();
PGroupElement jElement(Group g, unsigned long p);

// diag(1, p^n, p^(m+n), p^(m+2n)) and diag(p^(m+2n), p^(m+n), p^n, 1).
PGroupElement sElement(int m, int n, unsigned long p);
PGroupElement tElement(int m, int n, unsigned long p);
// diag(1, p^m) and diag(p^m, 1).
PGroupElement sGL2(int m, unsigned long p);
PGroupElement tGL2(int m, unsigned long p);
PGroupElement torusElement(const std::array<int, 4>& exps, unsigned long p);

PGroupElement etaElement(unsigned long p);
PGroupElement uKlElement(unsigned long p);
PGroupElement w1Element(unsigned long p);
PGroupElement uIwElement(unsigned long p);

// GSp4: I + x (E_ij +- E_{3-j,3-i}), sign chosen to preserve J. GL2: I + x E_ij.
PGroupElement rootElement(Group g, std::size_t i, std::size_t j, const Rational& x, unsigned long p);

// Signed permutation matrices representing the Weyl group (8 for GSp4, 2 for GL2).
std::vector<PGroupElement> weylRepresentatives(Group g, unsigned long p);

}  // namespace gz
