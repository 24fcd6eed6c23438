#include "gln/scalars.hpp"

#include <cmath>

namespace gln {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    // Allow a plain decimal point for convenience on the CLI.
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(Int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      neg = digits[0] == '-';
      digits = digits.substr(1);
    }
    Int num(digits.empty() ? "0" : digits);
    Int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(neg ? -num : num, den);
  }
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int kk = k;
  if (n - k < kk) kk = n - k;
  Int result = 1;
  for (Int i = 0; i < kk; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

Int factorial(const Int& n) {
  Int result = 1;
  for (Int i = 2; i <= n; ++i) result *= i;
  return result;
}

double to_double(const Surd& a) {
  if (a.sign == 0) return 0.0;
  double num = numerator(a.radicand).convert_to<double>();
  double den = denominator(a.radicand).convert_to<double>();
  return a.sign * std::sqrt(num) / std::sqrt(den);
}

} // namespace gln
