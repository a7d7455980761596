#include "gz/algebra/rational.hpp"

#include <stdexcept>
#include <string>

namespace gz {

Rational parseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

std::string toString(const Rational& r) { return r.get_str(); }

Rational powRational(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero to a negative power");
    return powRational(Rational(1) / base, -exponent);
  }
  Rational result(1), b = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1ul) result *= b;
    e >>= 1ul;
    if (e) b *= b;
  }
  return result;
}

}  // namespace gz
