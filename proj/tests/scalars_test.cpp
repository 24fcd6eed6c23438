#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gln/scalars.hpp"

#include <cmath>
#include <random>

using namespace gln;

TEST_CASE("surd multiplication on fixed values") {
  CHECK(Surd(1, Rational(1, 2)) * Surd(1, Rational(2)) == Surd(1, Rational(1)));
  CHECK(Surd(-1, Rational(3)) * Surd(1, Rational(3)) == Surd(-1, Rational(9)));
  CHECK(Surd() * Surd(1, Rational(7)) == Surd());
}

TEST_CASE("surd to float") {
  CHECK(to_double(Surd(1, Rational(4))) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(to_double(Surd(-1, Rational(2))) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  CHECK(to_double(Surd()) == 0.0);
}

TEST_CASE("surd equality is sign and radicand") {
  CHECK(Surd(1, Rational(1, 3)) == Surd(1, Rational(1, 3)));
  CHECK(Surd(1, Rational(1)) != Surd(-1, Rational(1)));
  CHECK(Surd() == Surd());
}

TEST_CASE("surd constructor rejects inconsistent values") {
  CHECK_THROWS_AS(Surd(1, Rational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(Surd(0, Rational(2)), std::invalid_argument);
  CHECK(Surd(1, Rational(0)).is_zero()); // sign normalized to 0
}

TEST_CASE("surd product properties on random rationals") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> num(0, 50), den(1, 20), sgn(0, 1);
  for (int t = 0; t < 500; ++t) {
    Surd a = Surd::signed_sqrt(sgn(rng) ? 1 : -1, Rational(num(rng), den(rng)));
    Surd b = Surd::signed_sqrt(sgn(rng) ? 1 : -1, Rational(num(rng), den(rng)));
    Surd c = Surd::signed_sqrt(sgn(rng) ? 1 : -1, Rational(num(rng), den(rng)));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(to_double((a * a)) >= 0.0);
    double fa = to_double(a), fb = to_double(b);
    CHECK(std::abs(to_double(a * b) - fa * fb) <= 1e-12 * (1.0 + std::abs(fa * fb)));
  }
}

TEST_CASE("from_rational embeds rationals") {
  CHECK(to_double(Surd::from_rational(Rational(-3, 2))) == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(Surd::from_rational(Rational(0)).is_zero());
  CHECK(Surd::from_rational(Rational(2)) * Surd::from_rational(Rational(3)) ==
        Surd::from_rational(Rational(6)));
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(format_rational(Rational(3, 4)) == "3/4");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(parse_rational(format_rational(Rational(-22, 7))) == Rational(-22, 7));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(6) == 720);
  CHECK(factorial(0) == 1);
}
