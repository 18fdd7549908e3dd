#include <doctest.h>

#include "hanabi_tom/rational.h"

using hanabi_tom::BigInt;
using hanabi_tom::Rational;

TEST_CASE("falling factorial") {
  CHECK(Rational::FallingFactorial(5, 0) == 1);
  CHECK(Rational::FallingFactorial(5, 1) == 5);
  CHECK(Rational::FallingFactorial(5, 2) == 20);
  CHECK(Rational::FallingFactorial(2, 2) == 2);
  // k larger than x collapses to zero: (1)_2 = 1 * 0.
  CHECK(Rational::FallingFactorial(1, 2) == 0);
  CHECK(Rational::FallingFactorial(0, 3) == 0);
  CHECK(Rational::FallingFactorial(50, 5) == BigInt(254251200));
}

TEST_CASE("normalization and equality") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(48, 5400) == Rational(2, 225));
  CHECK(Rational(48, 6750) == Rational(8, 1125));
  CHECK(Rational(3, 1).ToString() == "3");
  CHECK(Rational(2, 225).ToString() == "2/225");
}

TEST_CASE("arithmetic") {
  Rational sum;
  for (int i = 0; i < 225; ++i) sum += Rational(1, 225);
  CHECK(sum == Rational(1));

  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 5) * Rational(5, 2) == Rational(1));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) < Rational(0));
}

TEST_CASE("errors and views") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK(Rational(1, 2).AsDouble() == doctest::Approx(0.5));
  CHECK(Rational(2, 225).AsDouble() == doctest::Approx(2.0 / 225.0));
  CHECK(Rational(0).IsZero());
  CHECK_FALSE(Rational(1, 9).IsZero());
}

TEST_CASE("large products stay exact") {
  // 100! / 99! reduces to 100 only if the big integers are exact.
  BigInt fact100 = 1;
  BigInt fact99 = 1;
  for (int i = 1; i <= 100; ++i) fact100 *= i;
  for (int i = 1; i <= 99; ++i) fact99 *= i;
  CHECK(Rational(fact100, fact99) == Rational(100));
}
