#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace gln {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rational& r) { return is_integer(r) && r >= 0; }

// Rounds a rational down to an Int; only valid for exact integers here.
inline Int to_int(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_int: rational is not an integer");
  return numerator(r);
}

Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

Int binomial(const Int& n, const Int& k);
Int factorial(const Int& n);

/// Exact scalar of the form sign * sqrt(radicand), radicand a nonnegative
/// rational. Closed under multiplication; sums are not representable and
/// must be taken in floating point.
struct Surd {
  int sign = 0;          // -1, 0 or +1
  Rational radicand = 0; // >= 0; zero iff sign == 0

  Surd() = default;
  Surd(int s, Rational r) : sign(s), radicand(std::move(r)) {
    if (radicand < 0) throw std::invalid_argument("Surd: negative radicand");
    if (radicand == 0) sign = 0;
    if (sign == 0 && radicand != 0)
      throw std::invalid_argument("Surd: zero sign with nonzero radicand");
  }

  /// sqrt of a signed rational: sign carried out of the root.
  static Surd sqrt_of(const Rational& r) {
    if (r < 0) throw std::invalid_argument("Surd::sqrt_of: negative radicand");
    return Surd(r == 0 ? 0 : 1, r);
  }

  /// Exact square root of rational magnitude with explicit sign.
  static Surd signed_sqrt(int sign, const Rational& r) {
    return Surd(r == 0 ? 0 : sign, r);
  }

  /// Embeds a rational q as the surd sign(q)*sqrt(q^2).
  static Surd from_rational(const Rational& q) {
    int s = q > 0 ? 1 : (q < 0 ? -1 : 0);
    return Surd(s, q * q);
  }

  bool is_zero() const { return sign == 0; }
  Surd negated() const { return Surd(-sign, radicand); }
};

inline Surd operator*(const Surd& a, const Surd& b) {
  if (a.sign == 0 || b.sign == 0) return Surd();
  return Surd(a.sign * b.sign, a.radicand * b.radicand);
}

inline bool operator==(const Surd& a, const Surd& b) {
  return a.sign == b.sign && a.radicand == b.radicand;
}
inline bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

double to_double(const Surd& a);
inline Complex to_complex(const Surd& a) { return Complex(to_double(a), 0.0); }

} // namespace gln
