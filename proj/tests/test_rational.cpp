#include <doctest.h>

#include <random>

#include "tetralat/error.hpp"
#include "tetralat/rational.hpp"

using namespace tetralat;

TEST_CASE("rational arithmetic and canonical form") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.to_string() == "1/2");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 7) * Rational(7, 3)).is_one());
  CHECK((Rational(-2, 8)).to_string() == "-1/4");
  CHECK(Rational(5).is_integer());
  CHECK(Rational(5).to_long() == 5);
  CHECK(Rational(7, 2).pow(-2) == Rational(4, 49));
}

TEST_CASE("division by zero and poles") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(0).pow(-1), Error);
}

TEST_CASE("string round trip") {
  for (const char* s : {"0", "1", "-1", "22/7", "-355/113", "123456789123456789"}) {
    CHECK(Rational::from_string(s).to_string() == s);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(42);
  auto rnd = [&] {
    long n = static_cast<long>(rng() % 2001) - 1000;
    long d = 1 + static_cast<long>(rng() % 99);
    return Rational(n, d);
  };
  for (int t = 0; t < 200; ++t) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * (b * c) == (a * b) * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}
