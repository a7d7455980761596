#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>

#include "gz/algebra/symbols.hpp"

namespace gz {

class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class Exponent {
 public:
  using value_type = std::int16_t;

  constexpr Exponent() = default;

  static Exponent unit(Var v, int power = 1) {
    Exponent e;
    e.set(index(v), power);
    return e;
  }

  constexpr int operator[](std::size_t i) const noexcept { return e_[i]; }
  int operator[](Var v) const noexcept { return e_[index(v)]; }

  void set(std::size_t i, long value) { e_[i] = checked(value); }
  void set(Var v, long value) { set(index(v), value); }

  bool isZero() const noexcept {
    for (auto x : e_)
      if (x != 0) return false;
    return true;
  }
  bool isNonNegative() const noexcept {
    for (auto x : e_)
      if (x < 0) return false;
    return true;
  }
  bool dividesInto(const Exponent& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = checked(long{a.e_[i]} + b.e_[i]);
    return r;
  }
  friend Exponent operator-(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = checked(long{a.e_[i]} - b.e_[i]);
    return r;
  }
  Exponent operator-() const {
    Exponent r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = checked(-long{e_[i]});
    return r;
  }
  Exponent scaled(long k) const {
    Exponent r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = checked(k * e_[i]);
    return r;
  }

  static Exponent min(const Exponent& a, const Exponent& b) noexcept {
    Exponent r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }
  static Exponent max(const Exponent& a, const Exponent& b) noexcept {
    Exponent r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  friend constexpr bool operator==(const Exponent&, const Exponent&) = default;
  friend constexpr std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e_) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  static value_type checked(long v) {
    if (v > std::numeric_limits<value_type>::max() || v < std::numeric_limits<value_type>::min())
      throw ExponentOverflow("exponent out of range");
    return static_cast<value_type>(v);
  }

  std::array<value_type, kMaxVars> e_{};
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept { return e.hash(); }
};

}  // namespace gz
